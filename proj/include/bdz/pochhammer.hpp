#pragma once

#include <gmpxx.h>

#include <vector>

#include "bdz/bigfloat.hpp"

namespace bdz {

// P_k(s) = (1-s)_k / k! held exactly in the monomial basis.
struct PochhammerPoly {
    long k = 0;
    std::vector<mpq_class> coeff;  // coeff[i] multiplies s^i

    static PochhammerPoly make(long k);
    mpq_class eval_exact(const mpq_class& s) const;
    BigComplex eval(const BigComplex& s) const;
};

// P_k(s) by the running product prod_{j=0}^{k-1} (j+1-s)/(j+1).
BigComplex pochhammer_eval(long k, const BigComplex& s);
BigReal pochhammer_eval(long k, const BigReal& s);

// d^j/ds^j P_k(s/2) = P_k(s/2) Y_j[g(s), g'(s), ..., g^(j-1)(s)] with
// g(s) = (psi(1-s/2) - psi(k+1-s/2))/2 and
// g^(l)(s) = (-1)^l 2^{-(l+1)} (psi^(l)(1-s/2) - psi^(l)(k+1-s/2)).
BigComplex pochhammer_derivative(long k, const BigComplex& s, int j);

// g^(l)(1) as exact rationals: the finite half-integer sums
// g(1)   = -(1/2) sum_{i<k} 1/(i+1/2)
// g^(l)(1) = -(l!/2^{l+1}) sum_{i<k} (i+1/2)^{-(l+1)}.
mpq_class g_derivative_at_one_exact(long k, int l);

// Exact Taylor coefficients of P_k(s/2) about s=1, orders 0..J, computed from
// the Bell-polynomial derivative formula (rational arithmetic throughout).
std::vector<mpq_class> pochhammer_half_taylor_bell(long k, int J);

// The same coefficients from the Stirling-number expansion of (1-s/2)_k:
// coefficient of (s-1)^j contributed by P_k(s/2) is
// (-1)^k/k! sum_{l=j}^{k} s(k,l) 2^{-l} (-1)^{l-j} C(l,j).
std::vector<mpq_class> pochhammer_half_taylor_stirling(long k, int J);

// Appendix identity checks, exact over the rationals.
struct PowerDerivativeCheck {
    mpq_class lhs;           // x^a D_z^n x^{-a} at z0
    mpq_class rhs;           // sum_j C(-a,j) C(n+a,n-j) x^{-j} D_z^n x^j
    bool sides_equal = false;
    bool product_identity_ok = false;  // C(-a,j)C(n+a,n-j) = prod_{k != j} (k+a)/(k-j)
};
PowerDerivativeCheck faa_di_bruno_check(long n, const mpq_class& a,
                                        const std::vector<mpq_class>& x_coeffs,
                                        const mpq_class& z0);

}  // namespace bdz
