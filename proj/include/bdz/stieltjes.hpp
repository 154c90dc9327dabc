#pragma once

#include <vector>

#include "bdz/bigfloat.hpp"

namespace bdz {

// Laurent data of zeta(s, a) about s = 1:
//   zeta(s,a) = 1/(s-1) + sum_k (-1)^k gamma_k(a) (s-1)^k / k!
struct StieltjesTable {
    BigComplex a;
    std::vector<BigComplex> values;  // gamma_0(a) .. gamma_K(a)
    Digits digits = 0;

    bool all_real() const;
    BigReal real(int k) const { return values.at(k).re; }
};

// Contour-trapezoid extraction on |s-1| = 1/2 at elevated precision.
StieltjesTable stieltjes(const BigComplex& a, int K, Digits target);
StieltjesTable stieltjes_riemann(int K, Digits target);

// Laurent coefficients of zeta'/zeta about s = 1 beyond the pole:
//   zeta'(s)/zeta(s) = -1/(s-1) - sum_p eta_p (s-1)^p
struct EtaTable {
    std::vector<BigReal> values;  // eta_0 .. eta_P
    Digits digits = 0;
};

// Derived from the Stieltjes table by formal log-differentiation of
// (s-1) zeta(s).
EtaTable eta_constants(int P, Digits target);

// Power-series helpers over BigReal coefficient vectors (shared with the
// Taylor-extraction checks).
std::vector<BigReal> series_mul(const std::vector<BigReal>& a, const std::vector<BigReal>& b,
                                size_t n);
std::vector<BigReal> series_inv(const std::vector<BigReal>& a, size_t n);

}  // namespace bdz
