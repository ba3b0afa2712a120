#pragma once

#include <functional>

#include "econv/pi_analog.hpp"

namespace econv {

// Test-support numeric oracle; the only non-exact computation in the project.
// Adaptive Simpson with interval bisection until the local error estimate
// drops below the tolerance budget.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol);

// int_0^1 x^n (1-x)^m e^x dx, within tol of the true value. tol >= 1e-13.
double quad_reference(unsigned n, unsigned m, double tol);

// int_0^1 x^n (1-x)^m (a + b x + c x^2) / (1 + x^2) dx, within tol.
double quad_pi_reference(const PiIntegrandParams& params, double tol);

}  // namespace econv
