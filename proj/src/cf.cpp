#include "econv/cf.hpp"

namespace econv {

Int partial_quotient(unsigned long i) {
    if (i == 0) throw std::domain_error("partial_quotient: index is 1-based, got 0");
    if (i == 1) return 2;
    if (i % 3 == 0) return Int(2) * Int(i / 3);
    return 1;
}

Convergent ConvergentStream::next() {
    ++index_;
    Int a = partial_quotient(index_);
    Int p = a * p_ + p_prev_;
    Int q = a * q_ + q_prev_;
    p_prev_ = std::move(p_);
    q_prev_ = std::move(q_);
    p_ = p;
    q_ = q;
    return {index_, p, q};
}

std::vector<Convergent> convergents(unsigned long count) {
    if (count == 0) throw std::domain_error("convergents: count >= 1 required");
    std::vector<Convergent> out;
    out.reserve(count);
    ConvergentStream stream;
    for (unsigned long i = 0; i < count; ++i) out.push_back(stream.next());
    return out;
}

Rational cf_eval(const std::vector<Int>& quotients) {
    if (quotients.empty()) throw std::invalid_argument("cf_eval: empty quotient sequence");
    if (quotients.front() < 0)
        throw std::domain_error("cf_eval: leading quotient must be >= 0");
    for (size_t i = 1; i < quotients.size(); ++i)
        if (quotients[i] < 1) throw std::domain_error("cf_eval: quotients after the first must be >= 1");

    Rational value(quotients.back());
    for (size_t i = quotients.size() - 1; i-- > 0;) {
        value = Rational(quotients[i]) + Rational(1) / value;
    }
    return value;
}

}  // namespace econv
