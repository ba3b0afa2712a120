#include "econv/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace econv {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& f, double a, double fa, double b,
               double fb, double m, double fm, double whole, double tol, int depth) {
    double lm = (a + m) / 2, rm = (m + b) / 2;
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, fa, m, fm, flm);
    double right = simpson(m, fm, b, fb, frm);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return recurse(f, a, fa, m, fm, lm, flm, left, tol / 2, depth - 1) +
           recurse(f, m, fm, b, fb, rm, frm, right, tol / 2, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    double m = (a + b) / 2;
    double fa = f(a), fb = f(b), fm = f(m);
    double whole = simpson(a, fa, b, fb, fm);
    return recurse(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

double quad_reference(unsigned n, unsigned m, double tol) {
    if (tol < 1e-13) throw std::domain_error("quad_reference: tol >= 1e-13 required");
    auto f = [n, m](double x) {
        return std::pow(x, static_cast<int>(n)) * std::pow(1.0 - x, static_cast<int>(m)) *
               std::exp(x);
    };
    return adaptive_simpson(f, 0.0, 1.0, tol);
}

double quad_pi_reference(const PiIntegrandParams& p, double tol) {
    if (tol < 1e-13) throw std::domain_error("quad_pi_reference: tol >= 1e-13 required");
    auto f = [p](double x) {
        double quad = p.a + p.b * x + p.c * x * x;
        return std::pow(x, static_cast<int>(p.n)) * std::pow(1.0 - x, static_cast<int>(p.m)) *
               quad / (1.0 + x * x);
    };
    return adaptive_simpson(f, 0.0, 1.0, tol);
}

}  // namespace econv
