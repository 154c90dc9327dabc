#pragma once

#include <vector>

#include "bdz/bigfloat.hpp"
#include "bdz/coefficients.hpp"
#include "bdz/series.hpp"

namespace bdz {

enum class ArgMap { HalfS, SOverB, SPlusOneHalf, SOverP };

// Which Pochhammer scaling a reciprocal series uses, plus the optional
// (2^s - 1) prefactor of the a = 1/2 specialization.
struct ReciprocalSeriesSpec {
    CoefficientSpec family;
    ArgMap arg_map = ArgMap::HalfS;
    bool half_shift_prefactor = false;

    static ReciprocalSeriesSpec riemann();
    static ReciprocalSeriesSpec hurwitz(const BigReal& a);
    static ReciprocalSeriesSpec half_shift();  // family hurwitz(1/2) with (2^s-1) outside
    static ReciprocalSeriesSpec general(const BigReal& b, const BigReal& a);
    static ReciprocalSeriesSpec odd();
    static ReciprocalSeriesSpec dirichlet(const BigReal& b, DirichletCharacter chi);
    void validate() const;
};

// Series evaluation result with the Levin fallback engaged when the raw
// partial sums refuse to settle (growing-coefficient parameter ranges).
// Accelerated values are heuristic; raw is always reported alongside.
struct EvalResult {
    BigComplex value;
    BigComplex raw;
    long terms_used = 0;
    BigReal tail_estimate;
    bool converged = false;
    bool accelerated = false;
};

EvalResult reciprocal_zeta_series(const ReciprocalSeriesSpec& rspec, const BigComplex& s,
                                  const BigReal& tol,
                                  PrecisionPolicy policy = PrecisionPolicy::identity_default());

// Maslanka-type forward series: f(s) = 1/(s-1) sum_k A_k P_k(s/p).
EvalResult maslanka_series(const CoefficientSpec& spec, const BigComplex& s, const BigReal& tol,
                           PrecisionPolicy policy = PrecisionPolicy::identity_default());

// Entire series F(x,b,a) = sum_{k>=1} (-1)^{k+1} x^k / (zeta(bk,a) (k-1)!)
// with working precision elevated against the e^x-scale cancellation.
BigReal F_function(const BigReal& x, const BigReal& b, const BigReal& a, Digits target);
// G(x) = sum_{k>=1} (-1)^k x^k / (k! zeta(2k+1)).
BigReal G_function(const BigReal& x, Digits target);
// Riesz function R(x) = F(x, 2, 1).
BigReal riesz_function(const BigReal& x, Digits target);

// Mellin-integral cross-check of the reciprocal representation:
//   phi(s,b,a) = int_0^inf x^{-(s/b+1)} F(x,b,a) dx
// evaluated as a tanh-sinh integral over [0,X] plus the analytic remainder.
// For a = 1 the remainder is the independent Moebius sum
// sum mu(n) n^-s GammaUpper(1-s/b, X n^-b) with a partial-summation bound on
// the truncated part; otherwise the remainder is completed through
// Gamma(1-s/b)/zeta(s,a) and the row only verifies machinery + Pochhammer.
struct PhiResult {
    BigReal phi;
    BigReal quadrature_value;    // [0,X] tanh-sinh
    BigReal series_value;        // [0,X] exact term-wise integral
    BigReal machinery_residual;  // |quadrature - series|
    BigReal eq_outer_residual;   // |phi * zeta(s,a) - Gamma(1-s/b)|
    BigReal eq_series_residual;  // |phi - Gamma(1-s/b) sum c_k(b,a) P_k(s/b)|
    BigReal cut;                 // X
    BigReal tail_bound;          // rigorous bound on the truncated tail part
    bool independent_tail = false;
};
PhiResult phi_quadrature(const BigReal& s, const BigReal& b, const BigReal& a,
                         const BigReal& tol, Digits digits);

// Generating-function identity: sum_k c_k(b,a) s^k vs the geometric side
// (1/(1-s)) sum_k (-s/(1-s))^k / zeta(bk+b, a),  -1 <= s < 1/2.
struct IdentityOutcome {
    BigReal lhs_raw;
    BigReal lhs;
    BigReal rhs;
    BigReal residual;
    bool lhs_accelerated = false;
    bool rhs_accelerated = false;
};
IdentityOutcome genfun_identity(const BigReal& s, const BigReal& b, const BigReal& a,
                                PrecisionPolicy policy = PrecisionPolicy::identity_default());

// Logarithmic summatory identity:
//   c_0 ln(1-t) + sum_{k>=1} c_k t^k / k
//     = sum_{k>=1} (-1)^k / (k zeta(bk+b,a)) (t/(1-t))^k,  -1 <= t <= 1/2.
IdentityOutcome log_summatory_identity(const BigReal& t, const BigReal& b, const BigReal& a,
                                       PrecisionPolicy policy = PrecisionPolicy::identity_default());

// Exploratory probe of the Dirichlet-series representation class: builds
// A_k = sum_j (-1)^j C(k,j) (qj+q-1) f(qj+q) and compares the Pochhammer
// series against direct evaluation at each sample.
struct ProbeRow {
    BigReal s;
    BigComplex series;
    BigComplex direct;
    BigReal residual;
};
struct ProbeResult {
    std::vector<ProbeRow> rows;
    long terms = 0;
    BigReal direct_tail;  // truncation estimate of the coefficient-stream oracle
};
// f evaluates the target Dirichlet series exactly (used for the A_k weights).
// When a coefficient stream is supplied, the per-sample reference value is
// the truncated sum over coeff(n) n^-s (the independent oracle); growth
// bounds |coeff(n)| <= n^growth for the tail estimate.  Otherwise f itself
// is the reference.
ProbeResult conjecture_probe(const SigmaFn& f, const std::function<double(long)>& coeff,
                             double growth, long q, const std::vector<BigReal>& s_samples,
                             Digits digits);

// Lemma checks used by the verification suites.
// sum_{k>=j} C(k,j) x^k / k! = x^j e^x / j!
BigReal lemma_binomial_series_residual(const BigReal& x, long j, Digits digits);
// sum_{n=0}^inf F(x/(n+a)^b, b, a) = x e^{-x}, tail completed analytically
// through the truncated coefficient expansion of F at small arguments.
BigReal lemma_scaling_sum_residual(const BigReal& x, const BigReal& b, const BigReal& a,
                                   Digits digits);
// Per-term Fourier form: (2/pi) int cos(kt)/(n^2 t^2 + n^-2) dt = e^{-k/n^2}.
BigReal fourier_term_residual(long k, long n, Digits digits);

// lim_k P_k(s)(k+1)^s = 1/Gamma(1-s), via Richardson extrapolation.
struct LimitCheck {
    BigReal value;
    BigReal target;
    BigReal residual;
};
LimitCheck pochhammer_limit_check(const BigReal& s, long k_max, Digits digits);

}  // namespace bdz
