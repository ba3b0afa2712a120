#pragma once

#include <vector>

#include "econv/rational.hpp"

namespace econv {

// Partial quotient a_i of e' = [2, {1, 2k, 1}_{k>=1}], 1-based:
// a_1 = 2, a_{3k} = 2k, a_{3k-1} = a_{3k+1} = 1. Requires i >= 1.
Int partial_quotient(unsigned long i);

struct Convergent {
    unsigned long index;  // 1-based
    Int p;
    Int q;

    Rational value() const { return make_rational(p, q); }
};

// Streams convergents p_k/q_k of e' via p_k = a_k p_{k-1} + p_{k-2} (virtual
// seeds p_0 = 1, q_0 = 0), so callers can walk arbitrarily deep.
class ConvergentStream {
  public:
    Convergent next();

  private:
    unsigned long index_ = 0;
    Int p_prev_{0}, q_prev_{1};  // p_{k-2}, q_{k-2} once index_ >= 2
    Int p_{1}, q_{0};            // p_{k-1}, q_{k-1}
};

// First `count` convergents; count >= 1.
std::vector<Convergent> convergents(unsigned long count);

// Exact value of the finite continued fraction [a_1; a_2, ...].
// Requires a nonempty sequence, entries >= 1 except the first which is >= 0.
Rational cf_eval(const std::vector<Int>& quotients);

}  // namespace econv
