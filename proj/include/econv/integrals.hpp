#pragma once

#include <mutex>
#include <vector>

#include "econv/eform.hpp"

namespace econv {

struct IntegralIndex {
    unsigned n;
    unsigned m;
};

struct LemmaCheck {
    bool pascal_ok;  // I_{n-1,m-1} = I_{n,m-1} + I_{n-1,m}
    bool parts_ok;   // I_{n,m}     = m I_{n,m-1} - n I_{n-1,m}
};

// Memoized exact evaluation of I_{n,m} = int_0^1 x^n (1-x)^m e^x dx.
// Seeds: I_{0,0} = e - 1, I_{n,0} = e - n I_{n-1,0}, I_{0,m} = m I_{0,m-1} - 1;
// interior cells filled by I_{n,m} = m I_{n,m-1} - n I_{n-1,m}.
// Thread-safe; results are immutable once computed.
class IntegralTable {
  public:
    EForm eval(IntegralIndex idx);
    EForm eval(unsigned n, unsigned m) { return eval({n, m}); }

    // Exact recheck of both Lemma identities at (n,m); requires n,m >= 1.
    LemmaCheck check_lemma(IntegralIndex idx);

  private:
    void ensure(unsigned n, unsigned m);
    std::vector<std::vector<EForm>> table_;  // table_[n][m]
    std::mutex mu_;
};

// Upper bound I_{n,m} <= coeff * e with coeff = 1/((n+m+1) C(n+m,n)).
Rational beta_bound(IntegralIndex idx);

// Upper bound I_{k,k} <= coeff * e with coeff = 1/4^k; requires k >= 1.
Rational diagonal_bound(unsigned k);

}  // namespace econv
