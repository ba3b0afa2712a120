#include "econv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <memory>

#include "econv/bridge.hpp"
#include "econv/pi_analog.hpp"

namespace econv {

namespace {

using ordered_json = nlohmann::ordered_json;

// stdout plus optional --out duplicate
struct Emitter {
    std::ostream& out;
    std::unique_ptr<std::ofstream> file;

    void line(const std::string& s) {
        out << s << '\n';
        if (file) *file << s << '\n';
    }
    void line(const ordered_json& j) { line(j.dump()); }
};

std::string decimal_of_eform(const EForm& f, unsigned digits) {
    unsigned extra = static_cast<unsigned>(mpz_sizeinbase(f.e_coeff.get_mpz_t(), 10));
    unsigned prec = digits + extra + 4;
    for (int attempt = 0; attempt < 6; ++attempt) {
        try {
            return eform_to_decimal(f, digits, e_reference(prec));
        } catch (const enclosure_error&) {
            prec *= 2;
        }
    }
    return eform_to_decimal(f, digits, e_reference(prec));
}

std::string decimal_of_piform(const PiForm& f, unsigned digits) {
    unsigned prec = digits + 8;
    for (int attempt = 0; attempt < 6; ++attempt) {
        try {
            return certified_decimal(
                piform_interval(f, pi_reference(prec), ln2_reference(prec)), digits);
        } catch (const enclosure_error&) {
            prec *= 2;
        }
    }
    return certified_decimal(piform_interval(f, pi_reference(prec), ln2_reference(prec)),
                             digits);
}

std::string decimal_of_rational(const Rational& q, unsigned digits) {
    return truncate_decimal(q, digits);
}

struct Options {
    bool json = false;
    unsigned digits = 12;
    std::string out_path;
};

int cmd_eval(Emitter& em, const Options& opt, unsigned n, unsigned m) {
    IntegralTable table;
    EForm value = table.eval(n, m);
    std::string dec = decimal_of_eform(value, opt.digits);
    if (opt.json) {
        em.line(ordered_json{{"op", "eval"},
                             {"inputs", {{"n", n}, {"m", m}}},
                             {"e_coeff", to_string(value.e_coeff)},
                             {"const_coeff", to_string(value.const_coeff)},
                             {"decimal", dec}});
    } else {
        em.line("I(" + std::to_string(n) + "," + std::to_string(m) + ") = " +
                to_string(value) + " = " + dec);
    }
    return 0;
}

int cmd_convergents(Emitter& em, const Options& opt, unsigned long count) {
    for (const Convergent& c : convergents(count)) {
        if (opt.json) {
            em.line(ordered_json{
                {"k", c.index}, {"p", to_string(c.p)}, {"q", to_string(c.q)}});
        } else {
            em.line("k=" + std::to_string(c.index) + " p=" + to_string(c.p) +
                    " q=" + to_string(c.q) + " ~ " +
                    decimal_of_rational(c.value(), opt.digits));
        }
    }
    return 0;
}

int cmd_verify(Emitter& em, const Options& opt, unsigned max_k) {
    std::vector<CheckReport> reports = verify_range(max_k);
    size_t held = 0;
    for (const CheckReport& r : reports) {
        if (r.holds) ++held;
        if (opt.json) {
            em.line(ordered_json{
                {"k", r.k}, {"variant", variant_name(r.variant)}, {"holds", r.holds}});
        } else {
            em.line("k=" + std::to_string(r.k) + " " + variant_name(r.variant) + ": " +
                    to_string(r.lhs) + (r.holds ? " == " : " != ") + to_string(r.rhs));
        }
    }
    if (!opt.json)
        em.line(std::to_string(held) + "/" + std::to_string(reports.size()) +
                " identities hold");
    return held == reports.size() ? 0 : 1;
}

int cmd_bracket(Emitter& em, const Options& opt, unsigned k) {
    RationalInterval b = bracket_e(k);
    if (opt.json) {
        em.line(ordered_json{{"op", "bracket"},
                             {"k", k},
                             {"lo", to_string(b.lo)},
                             {"hi", to_string(b.hi)},
                             {"width", to_string(b.width())}});
    } else {
        em.line("lo = " + to_string(b.lo) + " ~ " + decimal_of_rational(b.lo, opt.digits));
        em.line("hi = " + to_string(b.hi) + " ~ " + decimal_of_rational(b.hi, opt.digits));
        em.line("width = " + to_string(b.width()) + " ~ " +
                decimal_of_rational(b.width(), opt.digits));
    }
    return 0;
}

int cmd_approx(Emitter& em, const Options& opt, unsigned digits) {
    EApproximation approx = approx_e(digits);
    if (opt.json) {
        em.line(ordered_json{{"op", "approx"},
                             {"digits", digits},
                             {"decimal", approx.decimal},
                             {"witness_k", approx.witness_k},
                             {"lo", to_string(approx.interval.lo)},
                             {"hi", to_string(approx.interval.hi)}});
    } else {
        em.line("e = " + approx.decimal);
        em.line("witness_k = " + std::to_string(approx.witness_k));
        em.line("bracket = [" + to_string(approx.interval.lo) + ", " +
                to_string(approx.interval.hi) + "]");
    }
    return 0;
}

int cmd_pi_eval(Emitter& em, const Options& opt, const PiIntegrandParams& p) {
    PiForm value = pi_eval_exact(p);
    std::string dec = decimal_of_piform(value, opt.digits);
    if (opt.json) {
        em.line(ordered_json{{"op", "pi_eval"},
                             {"n", p.n},
                             {"m", p.m},
                             {"a", p.a},
                             {"b", p.b},
                             {"c", p.c},
                             {"r", to_string(value.r)},
                             {"s", to_string(value.s)},
                             {"t", to_string(value.t)},
                             {"decimal", dec}});
    } else {
        em.line("J(" + std::to_string(p.n) + "," + std::to_string(p.m) + "," +
                std::to_string(p.a) + "," + std::to_string(p.b) + "," +
                std::to_string(p.c) + ") = " + to_string(value) + " = " + dec);
    }
    return 0;
}

int cmd_pi_search(Emitter& em, const Options& opt, const std::string& target_text,
                  unsigned max_nm, unsigned max_coeff) {
    Rational target = parse_rational(target_text);
    std::vector<SearchHit> hits = lucas_search(target, max_nm, max_coeff);
    for (const SearchHit& h : hits) {
        const PiIntegrandParams& p = h.params;
        if (opt.json) {
            em.line(ordered_json{{"n", p.n},
                                 {"m", p.m},
                                 {"a", p.a},
                                 {"b", p.b},
                                 {"c", p.c},
                                 {"r", to_string(h.value.r)},
                                 {"s", to_string(h.value.s)},
                                 {"t", to_string(h.value.t)},
                                 {"scale", to_string(h.scale)}});
        } else {
            em.line("n=" + std::to_string(p.n) + " m=" + std::to_string(p.m) +
                    " a=" + std::to_string(p.a) + " b=" + std::to_string(p.b) +
                    " c=" + std::to_string(p.c) + " value = " + to_string(h.value) +
                    " scale = " + to_string(h.scale) +
                    " side = " + (h.side == Side::above ? "above" : "below"));
        }
    }
    if (!opt.json) em.line(std::to_string(hits.size()) + " hit(s)");
    return 0;
}

std::string check_rational_format(const std::string& text) {
    try {
        parse_rational(text);
        return {};
    } catch (const std::exception&) {
        return "not a rational (expected P/Q or P): " + text;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact integrals I(n,m), continued-fraction convergents of e, certified "
                 "brackets, and the pi-integral family"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output, one JSON object per line");
    app.add_option("--digits", opt.digits, "rendering precision for decimals")
        ->default_val(12)
        ->check(CLI::PositiveNumber);
    app.add_option("--out", opt.out_path, "duplicate stdout to a file");

    unsigned n = 0, m = 0, a = 0, b = 0, c = 0;
    unsigned long count = 0;
    unsigned max_k = 0, k = 0, approx_digits = 0, max_nm = 10, max_coeff = 1000;
    std::string target;

    CLI::App* eval = app.add_subcommand("eval", "evaluate I(n,m) exactly");
    eval->add_option("n", n)->required();
    eval->add_option("m", m)->required();

    CLI::App* conv = app.add_subcommand("convergents", "convergents of e");
    conv->add_option("--count", count)->required()->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "verify the three identities up to k");
    verify->add_option("--max-k", max_k)->required()->check(CLI::PositiveNumber);

    CLI::App* bracket = app.add_subcommand("bracket", "certified bracket of e");
    bracket->add_option("--k", k)->required()->check(CLI::PositiveNumber);

    CLI::App* approx = app.add_subcommand("approx", "certified decimal digits of e");
    approx->add_option("--digits", approx_digits, "certified fractional digits")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* pi = app.add_subcommand("pi", "the pi-integral family");
    pi->require_subcommand(1);
    pi->fallthrough();
    CLI::App* pi_eval = pi->add_subcommand("eval", "evaluate one integral exactly");
    pi_eval->add_option("n", n)->required();
    pi_eval->add_option("m", m)->required();
    pi_eval->add_option("a", a)->required();
    pi_eval->add_option("b", b)->required();
    pi_eval->add_option("c", c)->required();
    CLI::App* pi_search = pi->add_subcommand("search", "search integrands hitting a target");
    pi_search->add_option("--target", target, "target rational P/Q")
        ->required()
        ->check(check_rational_format);
    pi_search->add_option("--max-nm", max_nm, "bound on n and m")->capture_default_str();
    pi_search->add_option("--max-coeff", max_coeff, "bound on a, b, c")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    Emitter em{out, nullptr};
    if (!opt.out_path.empty()) {
        em.file = std::make_unique<std::ofstream>(opt.out_path);
        if (!*em.file) {
            err << "cannot open " << opt.out_path << '\n';
            return 1;
        }
    }

    try {
        if (*eval) return cmd_eval(em, opt, n, m);
        if (*conv) return cmd_convergents(em, opt, count);
        if (*verify) return cmd_verify(em, opt, max_k);
        if (*bracket) return cmd_bracket(em, opt, k);
        if (*approx) return cmd_approx(em, opt, approx_digits);
        if (*pi_eval) return cmd_pi_eval(em, opt, {n, m, a, b, c});
        if (*pi_search) return cmd_pi_search(em, opt, target, max_nm, max_coeff);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace econv
