#pragma once

#include "morikawa/errors.hpp"

namespace morikawa::minimize {

// Side length of the (possibly virtual) square whose three consecutive
// vertices ride on L, C1 and Cr, parametrized by the height x of the upper
// left vertex:
//   z(x) = sqrt(x^2 + (r - x - sqrt(r^2 - (2*sqrt(r) - x - sqrt(2x - x^2))^2))^2).
// Principal square roots throughout; radicands in [-1e-14, 0) are clamped to
// zero, more negative ones raise DomainError.
double z(double r, double x);

// dz/dx from the closed form of d(z^2)/dx, divided by 2z. Requires both
// radicands strictly positive (DomainError when either is below 1e-13).
double z_prime(double r, double x);

struct MuResult {
    double r = 0.0;
    double x_m = 0.0;  // minimizing height, in (1 - 1/sqrt(2), 1)
    double mu = 0.0;   // minimal side length z(r, x_m)
    int iterations = 0;
    double residual_zprime = 0.0;
};

// Minimum of z over (1 - 1/sqrt(2), 1): a 64-point scout grid brackets the
// single valley (ConvergenceError if the sign pattern of successive
// differences is not a single - to + change), then Brent refines x_m to tol.
MuResult minimize_mu(double r, double tol = 1e-13);

// Left endpoint 1 - 1/sqrt(2) of the minimization interval.
double interval_lo();

// xi(k) = x_m(k^2)
double xi(double k);
// lambda(k) = mu(k^2)^2
double lambda_fn(double k);

}  // namespace morikawa::minimize
