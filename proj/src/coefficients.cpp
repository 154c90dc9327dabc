#include "bdz/coefficients.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>

#include "bdz/combinatorics.hpp"
#include "bdz/zeta.hpp"

namespace bdz {

CoefficientSpec CoefficientSpec::riemann() { return {}; }

CoefficientSpec CoefficientSpec::hurwitz(const BigReal& a) {
    CoefficientSpec s;
    s.family = Family::Hurwitz;
    s.a = a;
    return s;
}

CoefficientSpec CoefficientSpec::general(const BigReal& b, const BigReal& a) {
    CoefficientSpec s;
    s.family = Family::General;
    s.b = b;
    s.a = a;
    return s;
}

CoefficientSpec CoefficientSpec::odd() {
    CoefficientSpec s;
    s.family = Family::Odd;
    return s;
}

CoefficientSpec CoefficientSpec::two_param(const BigReal& a, const BigReal& b) {
    CoefficientSpec s;
    s.family = Family::TwoParam;
    s.a = a;
    s.b = b;
    return s;
}

CoefficientSpec CoefficientSpec::bernoulli_poly(const BigReal& x) {
    CoefficientSpec s;
    s.family = Family::BernoulliPoly;
    s.x = x;
    return s;
}

CoefficientSpec CoefficientSpec::dirichlet(const BigReal& b, DirichletCharacter chi) {
    CoefficientSpec s;
    s.family = Family::Dirichlet;
    s.b = b;
    s.chi = std::move(chi);
    return s;
}

CoefficientSpec CoefficientSpec::maslanka_hurwitz(const BigReal& a) {
    CoefficientSpec s;
    s.family = Family::MaslankaHurwitz;
    s.a = a;
    return s;
}

CoefficientSpec CoefficientSpec::maslanka_lerch(const BigComplex& z, const BigReal& a) {
    CoefficientSpec s;
    s.family = Family::MaslankaLerch;
    s.z = z;
    s.a = a;
    return s;
}

CoefficientSpec CoefficientSpec::maslanka_general(long p, SigmaFn f) {
    CoefficientSpec s;
    s.family = Family::MaslankaGeneral;
    s.p = p;
    s.f = std::move(f);
    return s;
}

void CoefficientSpec::validate() const {
    switch (family) {
        case Family::Hurwitz:
        case Family::MaslankaHurwitz:
            if (!(a.sign() > 0))
                throw std::invalid_argument(name() + ": requires Re a > 0");
            break;
        case Family::General:
            if (!(b > 1L)) throw std::invalid_argument("general: requires b > 1");
            if (!(a.sign() > 0)) throw std::invalid_argument("general: requires Re a > 0");
            break;
        case Family::TwoParam:
            if (!(b > 1L)) throw std::invalid_argument("two_param: requires b > 1");
            if (!(a.sign() > 0)) throw std::invalid_argument("two_param: requires a > 0");
            break;
        case Family::Dirichlet:
            if (!(b > 1L)) throw std::invalid_argument("dirichlet: requires b > 1");
            if (!chi) throw std::invalid_argument("dirichlet: missing character");
            break;
        case Family::MaslankaLerch:
            if (!(a.sign() > 0))
                throw std::invalid_argument("maslanka_lerch: requires Re a > 0");
            break;
        case Family::MaslankaGeneral:
            if (p <= 1) throw std::invalid_argument("maslanka_general: requires p > 1");
            if (!f) throw std::invalid_argument("maslanka_general: missing evaluator");
            break;
        default:
            break;
    }
}

bool CoefficientSpec::is_maslanka() const {
    return family == Family::MaslankaHurwitz || family == Family::MaslankaLerch ||
           family == Family::MaslankaGeneral;
}

bool CoefficientSpec::complex_valued() const {
    if (family == Family::Dirichlet) return chi && !chi->is_real();
    if (family == Family::MaslankaLerch) return !z.im.is_zero();
    return false;
}

std::string CoefficientSpec::name() const {
    switch (family) {
        case Family::Riemann: return "riemann";
        case Family::Hurwitz: return "hurwitz";
        case Family::General: return "general";
        case Family::Odd: return "odd";
        case Family::TwoParam: return "two_param";
        case Family::BernoulliPoly: return "bernoulli_poly";
        case Family::Dirichlet: return "dirichlet";
        case Family::MaslankaHurwitz: return "maslanka";
        case Family::MaslankaLerch: return "maslanka_lerch";
        case Family::MaslankaGeneral: return "maslanka_general";
    }
    return "?";
}

namespace {

// Inner weight w_j at working precision; c_k = sum_j C(k,j) w_j.
BigComplex family_weight(const CoefficientSpec& spec, long j, Digits work) {
    auto sign = [&](const BigComplex& v) { return (j % 2 == 0) ? v : -v; };
    switch (spec.family) {
        case Family::Riemann: {
            BigReal s(2 * j + 2, work);
            return sign(BigComplex(1L / riemann_zeta(s, work)));
        }
        case Family::Hurwitz: {
            BigReal s(2 * j + 2, work);
            return sign(BigComplex(1L / hurwitz_zeta(s, spec.a.with_digits(work), work)));
        }
        case Family::General: {
            BigReal s = spec.b.with_digits(work) * (j + 1);
            return sign(BigComplex(1L / hurwitz_zeta(s, spec.a.with_digits(work), work)));
        }
        case Family::Odd: {
            if (j == 0) return BigComplex(BigReal(0L, work));
            BigReal s(2 * j + 1, work);
            return sign(BigComplex(1L / riemann_zeta(s, work)));
        }
        case Family::TwoParam: {
            BigReal s = spec.a.with_digits(work) * j + spec.b.with_digits(work);
            return sign(BigComplex(1L / riemann_zeta(s, work)));
        }
        case Family::BernoulliPoly: {
            BigReal bx = bernoulli_poly(2 * j + 2, spec.x.with_digits(work));
            if (abs(bx) < pow10(-(work - 6), work))
                throw std::domain_error("bernoulli_poly family: B_{2j+2}(x) vanishes at j = " +
                                        std::to_string(j));
            BigReal two_pi = const_pi(work) * 2L;
            BigReal w = 2L * factorial(static_cast<unsigned long>(2 * j + 2), work) /
                        pow(two_pi, 2 * j + 2) / bx;
            return BigComplex(w);
        }
        case Family::Dirichlet: {
            BigComplex s(spec.b.with_digits(work) * (j + 1));
            return sign(inv(dirichlet_l(s, *spec.chi, work)));
        }
        case Family::MaslankaHurwitz: {
            BigReal s(2 * j + 2, work);
            BigReal w = hurwitz_zeta(s, spec.a.with_digits(work), work) * (2 * j + 1);
            return sign(BigComplex(w));
        }
        case Family::MaslankaLerch: {
            BigComplex s(BigReal(2 * j + 2, work));
            BigComplex zz(spec.z.re.with_digits(work), spec.z.im.with_digits(work));
            BigComplex aa(spec.a.with_digits(work));
            return sign(lerch_phi(zz, s, aa, work) * (2 * j + 1));
        }
        case Family::MaslankaGeneral: {
            BigReal s(spec.p * (j + 1) - 1 + 1, work);  // p j + p
            BigComplex v = spec.f(s, work) * (spec.p * j + spec.p - 1);
            return sign(v);
        }
    }
    throw std::logic_error("family_weight: unhandled family");
}

// log10 of the largest inner weight, probed at low precision; extends the
// working precision when the weights themselves grow with j.
long probe_growth_digits(const CoefficientSpec& spec, long max_k) {
    if (spec.family == Family::Riemann || spec.family == Family::Odd) return 1;
    double worst = 0.0;
    const Digits d = 12;
    for (long j : {max_k, max_k / 2, std::min<long>(max_k, 8L), 0L}) {
        try {
            double v = abs(family_weight(spec, j, d)).to_double();
            if (v > 0 && std::isfinite(v)) worst = std::max(worst, std::log10(v));
        } catch (const std::exception&) {
            // growth probing is best-effort; table construction reports errors
        }
    }
    return static_cast<long>(std::max(0.0, worst)) + 2;
}

}  // namespace

CoefficientTable::CoefficientTable(CoefficientSpec spec, long max_k, PrecisionPolicy policy,
                                   int jobs)
    : spec_(std::move(spec)), max_k_(max_k), policy_(policy) {
    spec_.validate();
    work_ = policy.working(max_k) + probe_growth_digits(spec_, max_k);
    weights_.assign(max_k + 1, BigComplex(work_));
    weight_errors_.assign(max_k + 1, std::string());

    int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads)
    for (long j = 0; j <= max_k; ++j) {
        try {
            weights_[j] = family_weight(spec_, j, work_);
        } catch (const std::exception& e) {
            weight_errors_[j] = e.what();
        }
    }
}

const BigComplex& CoefficientTable::weight(long j) const {
    if (!weight_errors_.at(j).empty())
        throw std::runtime_error("coefficient weight " + std::to_string(j) + ": " +
                                 weight_errors_[j]);
    return weights_[j];
}

CoefficientRow CoefficientTable::row(long k) const {
    CoefficientRow out;
    out.k = k;
    out.working_precision = work_;
    out.method = Method::Binomial;
    out.err_bound = pow10(-(policy_.target_digits + policy_.guard_digits - 2), 20);
    if (k < 0 || k > max_k_) {
        out.error = "k outside table range";
        return out;
    }
    for (long j = 0; j <= k; ++j) {
        if (!weight_errors_[j].empty()) {
            out.error = "inner weight " + std::to_string(j) + " failed: " + weight_errors_[j];
            return out;
        }
    }
    BigComplex acc(work_);
    mpz_class binom(1);
    for (long j = 0; j <= k; ++j) {
        BigComplex term = weights_[j] * BigReal::from_integer(binom, work_);
        acc += term;
        binom = binom * (k - j) / (j + 1);
    }
    out.value = BigComplex(acc.re.with_digits(policy_.target_digits),
                           acc.im.with_digits(policy_.target_digits));
    return out;
}

CoefficientRow ck_binomial(const CoefficientSpec& spec, long k, PrecisionPolicy policy) {
    if (k < 0) throw std::invalid_argument("ck_binomial: k must be >= 0");
    CoefficientTable table(spec, k, policy);
    return table.row(k);
}

CoefficientRow maslanka_ak(const CoefficientSpec& spec, long k, PrecisionPolicy policy) {
    if (!spec.is_maslanka())
        throw std::invalid_argument("maslanka_ak: spec is not a Maslanka family");
    return ck_binomial(spec, k, policy);
}

// ---------------------------------------------------------------------------
// Moebius kernels

namespace {
constexpr long kMobiusCap = 100'000'000L;
constexpr long kBlock = 1L << 16;
}  // namespace

std::vector<double> mobius_kernel(long N, long k_lo, long k_hi, bool approx_exp, int jobs,
                                  bool parallel) {
    if (N < 1 || k_lo < 0 || k_hi < k_lo)
        throw std::invalid_argument("mobius_kernel: bad arguments");
    const long K = k_hi - k_lo + 1;
    const long nblocks = (N + kBlock - 1) / kBlock;
    std::vector<int32_t> primes;
    {
        long root = 1;
        while ((root + 1) * (root + 1) <= N) ++root;
        primes = small_primes_upto(root);
    }

    // Per-block partial sums, reduced in block order for determinism.
    std::vector<std::vector<double>> partial(nblocks);

    int nthreads = parallel ? (jobs > 0 ? jobs : omp_get_max_threads()) : 1;
#pragma omp parallel num_threads(nthreads) if (parallel)
    {
        std::vector<int8_t> mu(kBlock);
        std::vector<int64_t> rem(kBlock);
        std::vector<double> acc(K), comp(K);
#pragma omp for schedule(dynamic)
        for (long blk = 0; blk < nblocks; ++blk) {
            long lo = 1 + blk * kBlock;
            long len = std::min(N + 1, lo + kBlock) - lo;
            mobius_sieve_block(lo, len, primes, mu.data(), rem.data());
            std::fill(acc.begin(), acc.end(), 0.0);
            std::fill(comp.begin(), comp.end(), 0.0);
            for (long i = 0; i < len; ++i) {
                if (mu[i] == 0) continue;
                long n = lo + i;
                if (n == 1) {
                    // q = 0 term: contributes only at k = 0 (or e^0 = 1 chain)
                    double q1 = approx_exp ? std::exp(-1.0) : 0.0;
                    double t1 = 1.0;
                    if (!approx_exp) {
                        if (k_lo == 0) {
                            double y1 = 1.0 - comp[0];
                            double s1 = acc[0] + y1;
                            comp[0] = (s1 - acc[0]) - y1;
                            acc[0] = s1;
                        }
                        continue;
                    }
                    t1 = std::pow(q1, static_cast<double>(k_lo));
                    for (long k = 0; k < K; ++k) {
                        double y = t1 - comp[k];
                        double s = acc[k] + y;
                        comp[k] = (s - acc[k]) - y;
                        acc[k] = s;
                        t1 *= q1;
                    }
                    continue;
                }
                double inv2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
                double q = approx_exp ? std::exp(-inv2) : 1.0 - inv2;
                double t = static_cast<double>(mu[i]) * inv2 *
                           std::pow(q, static_cast<double>(k_lo));
                for (long k = 0; k < K; ++k) {
                    double y = t - comp[k];
                    double s = acc[k] + y;
                    comp[k] = (s - acc[k]) - y;
                    acc[k] = s;
                    t *= q;
                }
            }
            partial[blk] = acc;
        }
    }

    std::vector<double> out(K, 0.0), comp(K, 0.0);
    for (long blk = 0; blk < nblocks; ++blk) {
        for (long k = 0; k < K; ++k) {
            double y = partial[blk][k] - comp[k];
            double s = out[k] + y;
            comp[k] = (s - out[k]) - y;
            out[k] = s;
        }
    }
    return out;
}

namespace {

long mobius_n_for_tol(const BigReal& tol, const char* who) {
    double t = tol.to_double();
    if (!(t > 0)) throw std::invalid_argument(std::string(who) + ": tol must be positive");
    double needed = 1.0 / t;
    if (needed > static_cast<double>(kMobiusCap))
        throw std::domain_error(std::string(who) + ": tol needs N = " +
                                std::to_string(static_cast<long long>(needed)) +
                                " terms, above the 1e8 cap");
    return std::max<long>(64, static_cast<long>(needed) + 1);
}

CoefficientRow mobius_row(long k, const BigReal& tol, bool approx_exp, int jobs,
                          const char* who) {
    if (k < 0) throw std::invalid_argument(std::string(who) + ": k must be >= 0");
    long N = mobius_n_for_tol(tol, who);
    std::vector<double> v = mobius_kernel(N, k, k, approx_exp, jobs);
    CoefficientRow out;
    out.k = k;
    out.method = approx_exp ? Method::Approx : Method::Mobius;
    out.working_precision = 15;
    out.value = BigComplex(BigReal(v[0], 15));
    out.err_bound = BigReal(1.0 / static_cast<double>(N) + 1e-14, 15);
    return out;
}

}  // namespace

CoefficientRow ck_mobius(long k, const BigReal& tol, int jobs) {
    return mobius_row(k, tol, false, jobs, "ck_mobius");
}

CoefficientRow ck_approx(long k, const BigReal& tol, int jobs) {
    if (k < 1) throw std::invalid_argument("ck_approx: k must be >= 1");
    return mobius_row(k, tol, true, jobs, "ck_approx");
}

double CompletedBatch::bound_at(long k) const {
    double m = static_cast<double>(M);
    return static_cast<double>(k) / (3.0 * m * m * m) + 1e-14;
}

CompletedBatch ck_batch_completed(long K, const BigReal& tol, int jobs) {
    if (K < 0) throw std::invalid_argument("ck_batch_completed: K must be >= 0");
    double t = tol.to_double();
    if (!(t > 0)) throw std::invalid_argument("ck_batch_completed: tol must be positive");
    double m3 = 2.0 * std::max<double>(K, 1) / (3.0 * t);
    long M = static_cast<long>(std::cbrt(m3)) + 1;
    M = std::max<long>(M, 4096);
    M = std::min<long>(M, 1L << 22);

    CompletedBatch out;
    out.M = M;
    out.values = mobius_kernel(M, 0, K, false, jobs);

    // completion: sum_{n>M} mu(n)/n^2 = 1/zeta(2) - partial
    Digits d = 30;
    BigReal partial(0L, d);
    mobius_blocks(M, kBlock, [&](long lo, std::span<const int8_t> mu) {
        BigReal blockacc(0L, d);
        for (size_t i = 0; i < mu.size(); ++i) {
            if (mu[i] == 0) continue;
            long n = lo + static_cast<long>(i);
            BigReal term = BigReal(mu[i], d) / BigReal(n, d) / BigReal(n, d);
            blockacc += term;
        }
        partial += blockacc;
    });
    BigReal pi = const_pi(d);
    BigReal completion = 6L / (pi * pi) - partial;
    double c = completion.to_double();
    for (double& v : out.values) v += c;
    return out;
}

CompletedBatch ck_batch_completed_general(long K, const BigReal& b, const BigReal& tol,
                                          int jobs) {
    if (K < 0) throw std::invalid_argument("ck_batch_completed_general: K must be >= 0");
    double bd = b.to_double();
    if (!(bd > 1.0)) throw std::invalid_argument("ck_batch_completed_general: b must be > 1");
    double t = tol.to_double();
    if (!(t > 0)) throw std::invalid_argument("ck_batch_completed_general: tol must be positive");
    // remainder of the (q^k - 1) part: k M^{1-2b} / (2b-1) <= tol/2
    double expo = 1.0 / (2.0 * bd - 1.0);
    long M = static_cast<long>(std::pow(2.0 * std::max<double>(K, 1) / ((2 * bd - 1) * t), expo)) + 1;
    M = std::max<long>(M, 4096);
    M = std::min<long>(M, 1L << 23);

    CompletedBatch out;
    out.M = M;

    const long nblocks = (M + kBlock - 1) / kBlock;
    std::vector<std::vector<double>> partial(nblocks);
    std::vector<double> zpart(nblocks, 0.0);  // mu(n) n^-b partial per block
    long root = 1;
    while ((root + 1) * (root + 1) <= M) ++root;
    auto primes = small_primes_upto(root);

    int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
    {
        std::vector<int8_t> mu(kBlock);
        std::vector<int64_t> rem(kBlock);
        std::vector<double> acc(K + 1), comp(K + 1);
#pragma omp for schedule(dynamic)
        for (long blk = 0; blk < nblocks; ++blk) {
            long lo = 1 + blk * kBlock;
            long len = std::min(M + 1, lo + kBlock) - lo;
            mobius_sieve_block(lo, len, primes, mu.data(), rem.data());
            std::fill(acc.begin(), acc.end(), 0.0);
            std::fill(comp.begin(), comp.end(), 0.0);
            double zacc = 0.0, zcomp = 0.0;
            for (long i = 0; i < len; ++i) {
                if (mu[i] == 0) continue;
                long n = lo + i;
                double nb = std::pow(static_cast<double>(n), -bd);
                {
                    double y = mu[i] * nb - zcomp;
                    double s = zacc + y;
                    zcomp = (s - zacc) - y;
                    zacc = s;
                }
                if (n == 1) {  // q = 0: only k = 0 contributes
                    double y = 1.0 - comp[0];
                    double s = acc[0] + y;
                    comp[0] = (s - acc[0]) - y;
                    acc[0] = s;
                    continue;
                }
                double q = 1.0 - nb;
                double tt = mu[i] * nb;
                for (long k = 0; k <= K; ++k) {
                    double y = tt - comp[k];
                    double s = acc[k] + y;
                    comp[k] = (s - acc[k]) - y;
                    acc[k] = s;
                    tt *= q;
                }
            }
            partial[blk] = acc;
            zpart[blk] = zacc;
        }
    }

    out.values.assign(K + 1, 0.0);
    std::vector<double> comp(K + 1, 0.0);
    double zsum = 0.0, zc = 0.0;
    for (long blk = 0; blk < nblocks; ++blk) {
        for (long k = 0; k <= K; ++k) {
            double y = partial[blk][k] - comp[k];
            double s = out.values[k] + y;
            comp[k] = (s - out.values[k]) - y;
            out.values[k] = s;
        }
        double y = zpart[blk] - zc;
        double s = zsum + y;
        zc = (s - zsum) - y;
        zsum = s;
    }

    Digits d = 30;
    double completion = (1L / riemann_zeta(b.with_digits(d), d)).to_double() - zsum;
    for (double& v : out.values) v += completion;
    // reuse bound_at through an effective M: k/(3 M_eff^3) = k M^{1-2b}/(2b-1)
    double meff = std::pow(std::pow(static_cast<double>(M), 2.0 * bd - 1.0) * (2 * bd - 1) / 3.0,
                           1.0 / 3.0);
    out.M = static_cast<long>(meff) + 1;
    return out;
}

BigReal ck_hurwitz_da(const BigReal& a, long k, PrecisionPolicy policy) {
    if (!(a.sign() > 0)) throw std::domain_error("ck_hurwitz_da: requires Re a > 0");
    Digits work = policy.working(k) + 2;
    BigReal aw = a.with_digits(work);
    BigReal acc(0L, work);
    mpz_class binom(1);
    for (long j = 0; j <= k; ++j) {
        BigReal z3 = hurwitz_zeta(BigReal(2 * j + 3, work), aw, work);
        BigReal z2 = hurwitz_zeta(BigReal(2 * j + 2, work), aw, work);
        BigReal term = BigReal::from_integer(binom, work) * (2 * j + 2) * z3 / (z2 * z2);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
        binom = binom * (k - j) / (j + 1);
    }
    return acc.with_digits(policy.target_digits);
}

std::vector<CoefficientRow> sweep(const CoefficientSpec& spec, long k_lo, long k_hi,
                                  PrecisionPolicy policy, SweepOptions opt) {
    if (k_hi < k_lo || k_lo < 0) throw std::invalid_argument("sweep: empty k range");
    spec.validate();
    std::vector<CoefficientRow> rows(k_hi - k_lo + 1);

    const bool riemann_like = spec.family == Family::Riemann;
    long binom_hi = riemann_like ? std::min(k_hi, opt.k_switch) : k_hi;

    if (k_lo <= binom_hi) {
        CoefficientTable table(spec, binom_hi, policy, opt.jobs);
        int nthreads = opt.parallel ? (opt.jobs > 0 ? opt.jobs : omp_get_max_threads()) : 1;
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads) if (opt.parallel)
        for (long k = k_lo; k <= binom_hi; ++k) rows[k - k_lo] = table.row(k);
    }

    if (riemann_like && k_hi > opt.k_switch) {
        long lo = std::max(k_lo, opt.k_switch + 1);
        BigReal tol = pow10(-policy.target_digits, 20);
        CompletedBatch batch = ck_batch_completed(k_hi, tol, opt.jobs);
        for (long k = lo; k <= k_hi; ++k) {
            CoefficientRow r;
            r.k = k;
            r.method = Method::Mobius;
            r.working_precision = 15;
            r.value = BigComplex(BigReal(batch.values[k], 15));
            r.err_bound = BigReal(batch.bound_at(k), 15);
            rows[k - k_lo] = std::move(r);
        }
    }
    return rows;
}

}  // namespace bdz
