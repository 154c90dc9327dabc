#pragma once

#include "bdz/bigfloat.hpp"

namespace bdz {

// Hurwitz zeta by Euler-Maclaurin with analytic continuation in s.
// Requires a away from {0, -1, -2, ...}; s != 1.
BigComplex hurwitz_zeta(const BigComplex& s, const BigComplex& a, Digits digits);
BigReal hurwitz_zeta(const BigReal& s, const BigReal& a, Digits digits);

BigComplex riemann_zeta(const BigComplex& s, Digits digits);
BigReal riemann_zeta(const BigReal& s, Digits digits);

// d/ds zeta(s) by central difference at elevated internal precision.
BigReal riemann_zeta_derivative(const BigReal& s, Digits digits);

// Hurwitz-Lerch Phi(z, s, a) = sum z^n (n+a)^-s.  Supported for |z| < 1,
// z = 1, and z = -1 (root-of-unity reduction to Hurwitz).
BigComplex lerch_phi(const BigComplex& z, const BigComplex& s, const BigComplex& a,
                     Digits digits);

// Multiple zeta zeta_n(s, z) through the finite Hurwitz combination obtained
// by expanding C(k+n-1, n-1) in powers of (k+z).
BigComplex multiple_zeta(int n, const BigComplex& s, const BigComplex& z, Digits digits);

// ln Gamma_n(z) for n in {1,2,3}, z > 0, via d/ds zeta_n(s,z)|_{s=0} plus the
// binomial correction row built from R_m = sum_{k<=m} d/ds zeta_k(s,1)|_{s=0}.
BigReal log_multiple_gamma(int n, const BigReal& z, Digits digits);

}  // namespace bdz
