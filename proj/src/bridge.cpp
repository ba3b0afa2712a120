#include "econv/bridge.hpp"

namespace econv {

const char* variant_name(IdentityVariant v) {
    switch (v) {
        case IdentityVariant::diag: return "diag";
        case IdentityVariant::upper: return "upper";
        case IdentityVariant::lower: return "lower";
    }
    return "?";
}

namespace {

struct VariantShape {
    IntegralIndex idx;
    unsigned long conv_index;
    bool negate;  // sign factor is -1
};

VariantShape shape_of(unsigned k, IdentityVariant variant) {
    switch (variant) {
        case IdentityVariant::diag:
            if (k == 0) throw std::domain_error("theorem_identity: diag requires k >= 1");
            return {{k, k}, 3ul * k - 1, k % 2 == 1};
        case IdentityVariant::upper:
            return {{k, k + 1}, 3ul * k + 1, k % 2 == 1};
        case IdentityVariant::lower:
            if (k == 0) throw std::domain_error("theorem_identity: lower requires k >= 1");
            return {{k + 1, k}, 3ul * k, k % 2 == 0};
    }
    throw std::logic_error("unreachable");
}

CheckReport make_report(IntegralTable& table, const Convergent& conv, unsigned k,
                        IdentityVariant variant) {
    VariantShape s = shape_of(k, variant);
    EForm lhs = table.eval(s.idx);
    EForm rhs = factorial(k) * EForm{conv.q, -conv.p};
    if (s.negate) rhs = -rhs;
    return {k, variant, lhs, rhs, lhs == rhs};
}

Convergent convergent_at(unsigned long index) {
    ConvergentStream stream;
    Convergent c = stream.next();
    while (c.index < index) c = stream.next();
    return c;
}

}  // namespace

CheckReport theorem_identity(unsigned k, IdentityVariant variant) {
    IntegralTable table;
    return make_report(table, convergent_at(shape_of(k, variant).conv_index), k, variant);
}

std::vector<CheckReport> verify_range(unsigned max_k) {
    if (max_k == 0) throw std::domain_error("verify_range: max_k >= 1 required");
    IntegralTable table;
    // convergents up to index 3*max_k + 1, keyed by index (1-based)
    std::vector<Convergent> conv;
    ConvergentStream stream;
    for (unsigned long i = 1; i <= 3ul * max_k + 1; ++i) conv.push_back(stream.next());
    auto at = [&](unsigned long index) -> const Convergent& { return conv[index - 1]; };

    std::vector<CheckReport> reports;
    reports.reserve(3ul * max_k + 1);
    reports.push_back(make_report(table, at(1), 0, IdentityVariant::upper));
    for (unsigned k = 1; k <= max_k; ++k) {
        for (auto v : {IdentityVariant::diag, IdentityVariant::upper, IdentityVariant::lower})
            reports.push_back(make_report(table, at(shape_of(k, v).conv_index), k, v));
    }
    return reports;
}

RationalInterval bracket_e(unsigned k) {
    if (k == 0) throw std::domain_error("bracket_e: k >= 1 required");
    Rational a = convergent_at(3ul * k - 1).value();
    Rational b = convergent_at(3ul * k + 2).value();
    return a < b ? RationalInterval{a, b} : RationalInterval{b, a};
}

EApproximation approx_e(unsigned digits) {
    if (digits == 0) throw std::domain_error("approx_e: digits >= 1 required");
    Rational goal(Int(1), pow10(digits));
    for (unsigned k = 1;; ++k) {
        RationalInterval bracket = bracket_e(k);
        if (bracket.width() >= goal) continue;
        // Both endpoints must truncate identically for the digits to be
        // certified; a bracket straddling a decimal boundary is skipped.
        try {
            std::string decimal = certified_decimal(bracket, digits);
            return {std::move(decimal), k, std::move(bracket)};
        } catch (const enclosure_error&) {
        }
    }
}

}  // namespace econv
