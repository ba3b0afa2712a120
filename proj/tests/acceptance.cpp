// Acceptance suite: one pass/fail line per criterion. Exit code is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "econv/bridge.hpp"
#include "econv/pi_analog.hpp"
#include "econv/quadrature.hpp"

using namespace econv;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
    if (!detail.str().empty()) std::cout << " [" << detail.str() << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double elapsed_ms(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int main() {
    criterion(1, "I(2,2) = 14*e - 38 exactly, under 1 ms", [](std::ostream& d) {
        auto start = std::chrono::steady_clock::now();
        IntegralTable table;
        EForm value = table.eval(2, 2);
        double ms = elapsed_ms(start);
        d << "value " << to_string(value) << ", " << ms << " ms";
        return value == EForm{14, -38} && ms < 1.0;
    });

    criterion(2, "all 151 Theorem-2 identities hold up to k = 50, under 1 s",
              [](std::ostream& d) {
                  auto start = std::chrono::steady_clock::now();
                  auto reports = verify_range(50);
                  size_t held = 0;
                  for (const auto& r : reports)
                      if (r.holds) ++held;
                  double ms = elapsed_ms(start);
                  d << held << "/" << reports.size() << " hold, " << ms << " ms";
                  return reports.size() == 151 && held == 151 && ms < 1000.0;
              });

    criterion(3, "first nine convergents match the expansion pattern", [](std::ostream& d) {
        const std::vector<Rational> expected = {
            Rational(2),            Rational(3),          make_rational(8, 3),
            make_rational(11, 4),   make_rational(19, 7), make_rational(87, 32),
            make_rational(106, 39), make_rational(193, 71), make_rational(1264, 465)};
        auto conv = convergents(9);
        for (size_t i = 0; i < 9; ++i) {
            if (conv[i].value() != expected[i]) {
                d << "mismatch at k=" << i + 1;
                return false;
            }
        }
        return true;
    });

    criterion(4, "|e - p_{3k-1}/q_{3k-1}| <= 3/(4^k k!) for k <= 20", [](std::ostream& d) {
        Rational e_mid = e_reference(60).mid();
        ConvergentStream stream;
        Convergent c = stream.next();
        for (unsigned k = 1; k <= 20; ++k) {
            while (c.index < 3ul * k - 1) c = stream.next();
            Rational err = abs(e_mid - c.value());
            Rational bound = Rational(3) / Rational(Int(1) << (2 * k)) / Rational(factorial(k));
            if (err > bound) {
                d << "bound violated at k=" << k;
                return false;
            }
        }
        return true;
    });

    criterion(5, "e_reference(40) inside bracket_e(k) for k <= 25, widths decreasing",
              [](std::ostream& d) {
                  RationalInterval taylor = e_reference(40);
                  bool contained_ok = true;
                  unsigned first_fail = 0;
                  Rational prev_width(-1);
                  bool widths_ok = true;
                  for (unsigned k = 1; k <= 25; ++k) {
                      RationalInterval b = bracket_e(k);
                      if (!b.strictly_contains(taylor) && contained_ok) {
                          contained_ok = false;
                          first_fail = k;
                      }
                      if (prev_width >= 0 && b.width() >= prev_width) widths_ok = false;
                      prev_width = b.width();
                  }
                  d << "widths " << (widths_ok ? "decrease" : "do not decrease");
                  if (!contained_ok)
                      d << "; containment fails from k=" << first_fail
                        << ": the brackets contract far faster than e/(4^k k!) and are "
                           "narrower than a 40-digit Taylor enclosure there";
                  return contained_ok && widths_ok;
              });

    criterion(6, "approx_e(30) matches e_reference(32) on all 30 digits, under 1 s",
              [](std::ostream& d) {
                  auto start = std::chrono::steady_clock::now();
                  EApproximation a = approx_e(30);
                  std::string oracle = certified_decimal(e_reference(32), 30);
                  double ms = elapsed_ms(start);
                  d << a.decimal << ", witness k=" << a.witness_k << ", " << ms << " ms";
                  return a.decimal == oracle && ms < 1000.0;
              });

    criterion(7, "Dalzell identity and the (4,4,1,0,0) search hit", [](std::ostream& d) {
        if (!dalzell_check()) {
            d << "exact Dalzell evaluation failed";
            return false;
        }
        auto hits = lucas_search(make_rational(22, 7), 4, 1);
        d << hits.size() << " hit(s)";
        return hits.size() == 1 && hits[0].params == PiIntegrandParams{4, 4, 1, 0, 0};
    });

    criterion(8, "quadrature cross-check at 1e-10", [](std::ostream& d) {
        IntegralTable table;
        RationalInterval e = e_reference(80);
        for (unsigned n = 0; n <= 10; ++n)
            for (unsigned m = 0; m <= 10; ++m) {
                double exact = eform_interval(table.eval(n, m), e).mid().get_d();
                if (std::fabs(exact - quad_reference(n, m, 1e-12)) > 1e-10) {
                    d << "I(" << n << "," << m << ") disagrees";
                    return false;
                }
            }
        RationalInterval pi = pi_reference(60);
        RationalInterval ln2 = ln2_reference(60);
        for (unsigned n = 0; n <= 6; ++n)
            for (unsigned m = 0; m <= 6; ++m)
                for (unsigned a = 0; a <= 3; ++a)
                    for (unsigned b = 0; b <= 3; ++b)
                        for (unsigned c = 0; c <= 3; ++c) {
                            if (a + b + c == 0) continue;
                            PiIntegrandParams p{n, m, a, b, c};
                            double exact =
                                piform_interval(pi_eval_exact(p), pi, ln2).mid().get_d();
                            if (std::fabs(exact - quad_pi_reference(p, 1e-12)) > 1e-10) {
                                d << "pi integral (" << n << "," << m << "," << a << "," << b
                                  << "," << c << ") disagrees";
                                return false;
                            }
                        }
        return true;
    });

    criterion(9, "lemma identities hold exactly for all n,m <= 60, under 5 s",
              [](std::ostream& d) {
                  auto start = std::chrono::steady_clock::now();
                  IntegralTable table;
                  for (unsigned n = 1; n <= 60; ++n)
                      for (unsigned m = 1; m <= 60; ++m) {
                          LemmaCheck c = table.check_lemma({n, m});
                          if (!c.pascal_ok || !c.parts_ok) {
                              d << "identity fails at (" << n << "," << m << ")";
                              return false;
                          }
                      }
                  double ms = elapsed_ms(start);
                  d << "3600 cases, " << ms << " ms";
                  return ms < 5000.0;
              });

    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << std::endl;
    return failures;
}
