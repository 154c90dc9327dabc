#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bdz/bigfloat.hpp"
#include "bdz/characters.hpp"

namespace bdz {

enum class Family {
    Riemann,          // alternating binomial transform of 1/zeta(2j+2)
    Hurwitz,          // ... of 1/zeta(2j+2, a)
    General,          // ... of 1/zeta(bj+b, a)
    Odd,              // ... of 1/zeta(2j+1), inner sum from j = 1
    TwoParam,         // ... of 1/zeta(aj+b)
    BernoulliPoly,    // weights 2(2j+2)!/(2 pi)^(2j+2) / B_{2j+2}(x)
    Dirichlet,        // ... of 1/L(bj+b, chi)
    MaslankaHurwitz,  // weights (2j+1) zeta(2j+2, a)
    MaslankaLerch,    // weights (2j+1) Phi(z, 2j+2, a)
    MaslankaGeneral,  // weights (pj+p-1) f(pj+p)
};

enum class Method { Binomial, Mobius, Approx };

// Evaluator for a user-supplied Dirichlet-series style function f(sigma),
// used by the MaslankaGeneral family.
using SigmaFn = std::function<BigComplex(const BigReal& sigma, Digits digits)>;

struct CoefficientSpec {
    Family family = Family::Riemann;
    BigReal a{1L, 30};
    BigReal b{2L, 30};
    BigReal x{0L, 30};
    BigComplex z{BigReal(1L, 30)};
    long p = 2;
    std::optional<DirichletCharacter> chi;
    SigmaFn f;

    static CoefficientSpec riemann();
    static CoefficientSpec hurwitz(const BigReal& a);
    static CoefficientSpec general(const BigReal& b, const BigReal& a);
    static CoefficientSpec odd();
    static CoefficientSpec two_param(const BigReal& a, const BigReal& b);
    static CoefficientSpec bernoulli_poly(const BigReal& x);
    static CoefficientSpec dirichlet(const BigReal& b, DirichletCharacter chi);
    static CoefficientSpec maslanka_hurwitz(const BigReal& a);
    static CoefficientSpec maslanka_lerch(const BigComplex& z, const BigReal& a);
    static CoefficientSpec maslanka_general(long p, SigmaFn f);

    void validate() const;
    bool is_maslanka() const;
    bool complex_valued() const;
    std::string name() const;
};

struct CoefficientRow {
    long k = 0;
    BigComplex value;
    Digits working_precision = 0;
    Method method = Method::Binomial;
    BigReal err_bound;
    std::string error;  // non-empty when the row could not be computed

    bool ok() const { return error.empty(); }
};

// Shared inner-value table for binomial-method evaluation over 0 <= k <= max_k.
// Build it once, then rows are O(k) each and independent across k.
class CoefficientTable {
public:
    CoefficientTable(CoefficientSpec spec, long max_k, PrecisionPolicy policy, int jobs = 0);

    CoefficientRow row(long k) const;
    long max_k() const { return max_k_; }
    Digits working_digits() const { return work_; }
    const CoefficientSpec& spec() const { return spec_; }

    // j-th inner weight (throws if that entry failed); for cross-checks.
    const BigComplex& weight(long j) const;

private:
    CoefficientSpec spec_;
    long max_k_;
    PrecisionPolicy policy_;
    Digits work_;
    std::vector<BigComplex> weights_;
    std::vector<std::string> weight_errors_;
};

// Single-row conveniences (each builds an ephemeral table).
CoefficientRow ck_binomial(const CoefficientSpec& spec, long k,
                           PrecisionPolicy policy = PrecisionPolicy::identity_default());
CoefficientRow maslanka_ak(const CoefficientSpec& spec, long k,
                           PrecisionPolicy policy = PrecisionPolicy::identity_default());

// Moebius-series evaluation of the Riemann-family c_k (direct truncation with
// the unconditional 1/N tail bound).  tol below the 1e-8 cap raises an error
// naming the required N.
CoefficientRow ck_mobius(long k, const BigReal& tol, int jobs = 0);
// Same truncation policy for the large-k approximation sum mu(n)/n^2 e^{-k/n^2}.
CoefficientRow ck_approx(long k, const BigReal& tol, int jobs = 0);

// Batch kernels shared by the per-k wrappers and the sweep (contiguous k
// range [k_lo, k_hi]).  Deterministic block-ordered reduction regardless of
// the thread count; `parallel = false` is the serial reference.
std::vector<double> mobius_kernel(long N, long k_lo, long k_hi, bool approx_exp, int jobs,
                                  bool parallel = true);

// Tail-completed Moebius batch for bulk sweeps: truncates at M with the
// exact remainder sum_{n>M} mu(n)/n^2 folded in through 1/zeta(2), leaving
// the unconditional per-row bound k/(3 M^3) + rounding.
struct CompletedBatch {
    std::vector<double> values;  // c_k for k in [0, K]
    double bound_at(long k) const;
    long M = 0;
};
CompletedBatch ck_batch_completed(long K, const BigReal& tol, int jobs = 0);

// Same construction for the general exponent family at a = 1:
// c_k(b, 1) = sum_n mu(n) n^-b (1 - n^-b)^k, completed through 1/zeta(b).
CompletedBatch ck_batch_completed_general(long K, const BigReal& b, const BigReal& tol,
                                          int jobs = 0);

// d/da c_k(a) per the term-wise differentiated binomial sum.
BigReal ck_hurwitz_da(const BigReal& a, long k,
                      PrecisionPolicy policy = PrecisionPolicy::identity_default());

// Bulk generation: ascending k, binomial method up to k_switch, Moebius
// (tail-completed) beyond for the Riemann family.  Per-row failures are
// recorded in-stream.
struct SweepOptions {
    long k_switch = 2000;
    int jobs = 0;
    bool parallel = true;
};
std::vector<CoefficientRow> sweep(const CoefficientSpec& spec, long k_lo, long k_hi,
                                  PrecisionPolicy policy, SweepOptions opt = {});

}  // namespace bdz
