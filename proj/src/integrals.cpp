#include "econv/integrals.hpp"

namespace econv {

void IntegralTable::ensure(unsigned n, unsigned m) {
    if (n < table_.size() && m < table_[0].size()) return;
    size_t rows = std::max<size_t>(table_.size(), n + 1);
    size_t cols = std::max<size_t>(table_.empty() ? 0 : table_[0].size(), m + 1);

    std::vector<std::vector<EForm>> t(rows, std::vector<EForm>(cols));
    t[0][0] = {1, -1};  // I_{0,0} = e - 1
    for (size_t i = 1; i < rows; ++i)
        t[i][0] = EForm{1, 0} - Int(static_cast<unsigned long>(i)) * t[i - 1][0];
    for (size_t j = 1; j < cols; ++j)
        t[0][j] = Int(static_cast<unsigned long>(j)) * t[0][j - 1] - EForm{0, 1};
    for (size_t i = 1; i < rows; ++i)
        for (size_t j = 1; j < cols; ++j)
            t[i][j] = Int(static_cast<unsigned long>(j)) * t[i][j - 1] -
                      Int(static_cast<unsigned long>(i)) * t[i - 1][j];
    table_ = std::move(t);
}

EForm IntegralTable::eval(IntegralIndex idx) {
    std::lock_guard lock(mu_);
    ensure(idx.n, idx.m);
    return table_[idx.n][idx.m];
}

LemmaCheck IntegralTable::check_lemma(IntegralIndex idx) {
    if (idx.n == 0 || idx.m == 0)
        throw std::domain_error("check_lemma: requires n >= 1 and m >= 1");
    EForm up = eval(idx.n, idx.m - 1);
    EForm left = eval(idx.n - 1, idx.m);
    bool pascal = eval(idx.n - 1, idx.m - 1) == up + left;
    bool parts = eval(idx.n, idx.m) == Int(idx.m) * up - Int(idx.n) * left;
    return {pascal, parts};
}

Rational beta_bound(IntegralIndex idx) {
    return make_rational(1, Int(idx.n + idx.m + 1) * binomial(idx.n + idx.m, idx.n));
}

Rational diagonal_bound(unsigned k) {
    if (k == 0) throw std::domain_error("diagonal_bound: requires k >= 1");
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 4, k);
    return make_rational(1, p);
}

}  // namespace econv
