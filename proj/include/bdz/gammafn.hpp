#pragma once

#include "bdz/bigfloat.hpp"

namespace bdz {

// Real Gamma family (MPFR-backed; poles raise domain_error).
BigReal gamma(const BigReal& x);
BigReal log_gamma(const BigReal& x);
BigReal digamma(const BigReal& x);

// Complex Gamma family: Stirling series plus upward recurrence, reflection
// for Re z < 1/2.
BigComplex gamma(const BigComplex& z);
BigComplex log_gamma(const BigComplex& z);
BigComplex digamma(const BigComplex& z);
BigComplex polygamma(int m, const BigComplex& z);
BigReal polygamma(int m, const BigReal& x);

// Upper incomplete Gamma(alpha, y) for y >= 0.
BigReal gamma_upper(const BigReal& alpha, const BigReal& y);
BigComplex gamma_upper(const BigComplex& alpha, const BigReal& y);

}  // namespace bdz
