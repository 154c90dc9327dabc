#include "bdz/representations.hpp"

#include <cmath>
#include <stdexcept>

#include "bdz/combinatorics.hpp"
#include "bdz/gammafn.hpp"
#include "bdz/pochhammer.hpp"
#include "bdz/quadrature.hpp"
#include "bdz/zeta.hpp"

namespace bdz {

ReciprocalSeriesSpec ReciprocalSeriesSpec::riemann() {
    return {CoefficientSpec::riemann(), ArgMap::HalfS, false};
}
ReciprocalSeriesSpec ReciprocalSeriesSpec::hurwitz(const BigReal& a) {
    return {CoefficientSpec::hurwitz(a), ArgMap::HalfS, false};
}
ReciprocalSeriesSpec ReciprocalSeriesSpec::half_shift() {
    return {CoefficientSpec::hurwitz(BigReal(0.5, 30)), ArgMap::HalfS, true};
}
ReciprocalSeriesSpec ReciprocalSeriesSpec::general(const BigReal& b, const BigReal& a) {
    return {CoefficientSpec::general(b, a), ArgMap::SOverB, false};
}
ReciprocalSeriesSpec ReciprocalSeriesSpec::odd() {
    return {CoefficientSpec::odd(), ArgMap::SPlusOneHalf, false};
}
ReciprocalSeriesSpec ReciprocalSeriesSpec::dirichlet(const BigReal& b, DirichletCharacter chi) {
    return {CoefficientSpec::dirichlet(b, std::move(chi)), ArgMap::SOverB, false};
}

void ReciprocalSeriesSpec::validate() const {
    family.validate();
    if (family.is_maslanka())
        throw std::invalid_argument("reciprocal series: Maslanka families use maslanka_series");
    switch (family.family) {
        case Family::Odd:
            if (arg_map != ArgMap::SPlusOneHalf)
                throw std::invalid_argument("odd family forces the (s+1)/2 argument map");
            break;
        case Family::General:
        case Family::Dirichlet:
            if (arg_map != ArgMap::SOverB)
                throw std::invalid_argument("general/dirichlet families force the s/b map");
            break;
        default:
            if (arg_map != ArgMap::HalfS)
                throw std::invalid_argument("this family forces the s/2 map");
    }
}

namespace {

BigComplex apply_arg_map(const ReciprocalSeriesSpec& rspec, const BigComplex& s, Digits work) {
    switch (rspec.arg_map) {
        case ArgMap::HalfS: return s / 2L;
        case ArgMap::SOverB: return s / BigComplex(rspec.family.b.with_digits(work));
        case ArgMap::SPlusOneHalf: return (s + 1L) / 2L;
        case ArgMap::SOverP: return s / rspec.family.p;
    }
    throw std::logic_error("apply_arg_map");
}

// Accumulate stored terms with the sum_until stopping rule; on failure fall
// back to a componentwise Levin estimate (heuristic, flagged).
EvalResult sum_terms_with_fallback(const std::vector<BigComplex>& terms, const BigReal& tol,
                                   int consecutive) {
    Digits d = terms.front().digits();
    EvalResult out;
    BigComplex acc(d);
    int run = 0;
    long n = 0;
    BigReal last(0L, d);
    for (const auto& t : terms) {
        acc += t;
        ++n;
        last = abs(t);
        run = last < tol ? run + 1 : 0;
        if (run >= consecutive) break;
    }
    out.raw = acc;
    out.terms_used = n;
    out.tail_estimate = last * static_cast<long>(consecutive);
    out.converged = run >= consecutive;
    out.value = acc;
    if (out.converged) return out;

    // Heuristic rescue: Levin u / sqrt-K Richardson for slow tails, Wynn
    // epsilon for growing (Abel-summable) ones; keep the self-consistently
    // tightest estimate.
    long m = static_cast<long>(terms.size());
    int order = static_cast<int>(std::min<long>(24, m / 2 - 2));
    if (order >= 4) {
        auto component = [&](auto pick) {
            std::vector<BigReal> c;
            c.reserve(m);
            for (const auto& t : terms) c.push_back(pick(t));
            AcceleratedValue best = accelerate_with_stability(c, order);
            if (int o2 = order / 2; o2 >= 4) {
                AcceleratedValue lv = accelerate_with_stability(c, o2);
                if (lv.stability < best.stability) best = lv;
            }
            AcceleratedValue ep = wynn_epsilon(c);
            if (ep.stability < best.stability) best = ep;
            if (m >= 48) {
                AcceleratedValue rk = extrapolate_sums_sqrtk(c);
                if (rk.stability < best.stability) best = rk;
            }
            return best;
        };
        AcceleratedValue ar = component([](const BigComplex& t) { return t.re; });
        out.value = BigComplex(ar.value);
        out.tail_estimate = ar.stability;
        bool have_im = false;
        for (const auto& t : terms) have_im = have_im || !t.im.is_zero();
        if (have_im) {
            AcceleratedValue ai = component([](const BigComplex& t) { return t.im; });
            out.value.im = ai.value;
            out.tail_estimate = max(out.tail_estimate, ai.stability);
        }
        out.accelerated = true;
        out.terms_used = m;
    }
    return out;
}

std::vector<BigComplex> reciprocal_terms(const ReciprocalSeriesSpec& rspec, const BigComplex& s,
                                         long K, PrecisionPolicy policy) {
    CoefficientTable table(rspec.family, K, policy);
    Digits work = table.working_digits();
    BigComplex sw(s.re.with_digits(work), s.im.with_digits(work));
    BigComplex x = apply_arg_map(rspec, sw, work);

    // c_k built from the shared weight table, Pochhammer factor iterated.
    std::vector<BigComplex> terms;
    terms.reserve(K + 1);
    BigComplex pk(BigReal(1L, work));  // P_0
    for (long k = 0; k <= K; ++k) {
        mpz_class binom(1);
        BigComplex ck(work);
        for (long j = 0; j <= k; ++j) {
            ck += table.weight(j) * BigReal::from_integer(binom, work);
            binom = binom * (k - j) / (j + 1);
        }
        terms.push_back(ck * pk);
        pk = pk * (-x + (k + 1)) / (k + 1);
    }
    return terms;
}

}  // namespace

namespace {

// Geometric-halving Richardson elimination with an explicit exponent list:
// L - S(K) ~ sum_m beta_m K^{-e_m}.  Anchors at K, K/2, K/4, ...
double richardson_known_exponents(const std::vector<double>& partials,
                                  const std::vector<double>& exps, double* stability) {
    int levels = static_cast<int>(exps.size());
    long K = static_cast<long>(partials.size()) - 1;
    int P = levels + 2;
    std::vector<double> S(P);
    for (int i = 0; i < P; ++i) S[i] = partials[K >> (P - 1 - i)];
    double prev = S.back();
    for (int m = 0; m < levels; ++m) {
        double f = std::pow(2.0, exps[m]) - 1.0;
        for (size_t i = 0; i + 1 < S.size(); ++i)
            S[i] = S[i + 1] + (S[i + 1] - S[i]) / f;
        S.pop_back();
        if (m + 1 == levels)
            *stability = std::fabs(S.back() - prev);
        else
            prev = S.back();
    }
    return S.back();
}

// Large-K Moebius path for a = 1 families with real s: double-precision
// partial sums refined by exponent-aware extrapolation.
bool large_k_mobius_refine(const ReciprocalSeriesSpec& rspec, double sd, EvalResult* out,
                           const BigReal& tol) {
    const CoefficientSpec& fam = rspec.family;
    bool a_is_one = (fam.family == Family::Riemann) ||
                    (fam.family == Family::General && fam.a == 1L) ||
                    (fam.family == Family::Hurwitz && fam.a == 1L);
    if (!a_is_one) return false;
    double bd = (fam.family == Family::General) ? fam.b.to_double() : 2.0;

    const long K = 1L << 15;
    CompletedBatch batch =
        (fam.family == Family::General)
            ? ck_batch_completed_general(K, fam.b, pow10(-13, 20))
            : ck_batch_completed(K, pow10(-13, 20));

    double x = sd / bd;
    std::vector<double> partials(K + 1);
    double pk = 1.0, acc = 0.0, comp = 0.0;
    for (long k = 0; k <= K; ++k) {
        double t = batch.values[k] * pk - comp;
        double u = acc + t;
        comp = (u - acc) - t;
        acc = u;
        partials[k] = acc;
        pk *= (static_cast<double>(k + 1) - x) / static_cast<double>(k + 1);
    }

    // remainder exponents: (s + 2m)/b + i, ascending, first six
    std::vector<double> exps;
    for (int m = 0; m < 6; ++m)
        for (int i = 0; i < 6; ++i) exps.push_back((sd + 2 * m) / bd + i);
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end(),
                           [](double u, double v) { return std::fabs(u - v) < 1e-12; }),
               exps.end());
    exps.resize(6);

    double stab = 0.0;
    double refined = richardson_known_exponents(partials, exps, &stab);
    Digits d = 20;
    out->value = BigComplex(BigReal(refined, d));
    out->tail_estimate = BigReal(stab + batch.bound_at(K) * 8.0, d);
    out->accelerated = true;
    out->converged = out->tail_estimate < tol;
    out->terms_used = K;
    return true;
}

}  // namespace

EvalResult reciprocal_zeta_series(const ReciprocalSeriesSpec& rspec, const BigComplex& s,
                                  const BigReal& tol, PrecisionPolicy policy) {
    rspec.validate();
    if (!(s.re > 1L))
        throw std::domain_error("reciprocal series: requires Re s > 1");

    // Stage 1: short table; extend when the tail is convergent but slow.
    long K1 = 96;
    std::vector<BigComplex> terms = reciprocal_terms(rspec, s, K1, policy);
    BigReal t_half = abs(terms[K1 / 2]), t_end = abs(terms[K1]);
    bool divergent = t_end > t_half * 2L;
    if (!divergent && !(t_end < tol)) {
        long K2 = 1024;
        terms = reciprocal_terms(rspec, s, K2, policy);
    }
    EvalResult out = sum_terms_with_fallback(terms, tol, 10);

    // Stage 3 for slow a = 1 tails: Moebius batch to K = 32768 with
    // exponent-aware Richardson.
    if (!out.converged && !divergent && s.im.is_zero() && !rspec.half_shift_prefactor &&
        out.tail_estimate * 4L > tol) {
        EvalResult refined = out;
        if (large_k_mobius_refine(rspec, s.re.to_double(), &refined, tol)) {
            refined.raw = out.raw;
            out = refined;
        }
    }

    if (rspec.half_shift_prefactor) {
        Digits work = terms.front().digits();
        BigComplex sw(s.re.with_digits(work), s.im.with_digits(work));
        BigComplex pref = pow(BigComplex(BigReal(2L, work)), sw) - 1L;
        out.value *= pref;
        out.raw *= pref;
        out.tail_estimate = out.tail_estimate * abs(pref);
    }
    return out;
}

EvalResult maslanka_series(const CoefficientSpec& spec, const BigComplex& s, const BigReal& tol,
                           PrecisionPolicy policy) {
    if (!spec.is_maslanka())
        throw std::invalid_argument("maslanka_series: spec is not a Maslanka family");
    if (s.im.is_zero() && s.re == 1L)
        throw std::domain_error("maslanka_series: s = 1 is the pole factor");

    long K = 72;
    for (int attempt = 0; attempt < 3; ++attempt) {
        CoefficientTable table(spec, K, policy);
        Digits work = table.working_digits();
        BigComplex sw(s.re.with_digits(work), s.im.with_digits(work));
        long p = (spec.family == Family::MaslankaGeneral) ? spec.p : 2;
        BigComplex x = sw / p;

        std::vector<BigComplex> terms;
        terms.reserve(K + 1);
        BigComplex pk(BigReal(1L, work));
        for (long k = 0; k <= K; ++k) {
            mpz_class binom(1);
            BigComplex ak(work);
            for (long j = 0; j <= k; ++j) {
                ak += table.weight(j) * BigReal::from_integer(binom, work);
                binom = binom * (k - j) / (j + 1);
            }
            terms.push_back(ak * pk);
            pk = pk * (-x + (k + 1)) / (k + 1);
        }
        EvalResult out = sum_terms_with_fallback(terms, tol, 8);
        BigComplex pole = inv(sw - 1L);
        out.value *= pole;
        out.raw *= pole;
        out.tail_estimate = out.tail_estimate * abs(pole);
        if (out.converged || K >= 288) return out;
        K *= 2;
    }
    throw std::logic_error("maslanka_series: unreachable");
}

// ---------------------------------------------------------------------------
// F, G, and the phi integral

namespace {

// 1/zeta(b k, a) for k = 1..K at the given precision.
std::vector<BigReal> reciprocal_zeta_table(const BigReal& b, const BigReal& a, long K,
                                           Digits work) {
    std::vector<BigReal> r;
    r.reserve(K);
    BigReal bw = b.with_digits(work), aw = a.with_digits(work);
    for (long k = 1; k <= K; ++k) r.push_back(1L / hurwitz_zeta(bw * k, aw, work));
    return r;
}

long f_series_length(double x, Digits target) {
    double terms = x + 12.0 * std::sqrt(x + 4.0) + 2.303 * (target + 10);
    return static_cast<long>(terms) + 8;
}

BigReal f_eval(const BigReal& x, const std::vector<BigReal>& recip, Digits work) {
    // sum_{k>=1} (-1)^{k+1} x^k / (k-1)! * recip[k-1]
    BigReal acc(0L, work), term(x.with_digits(work));
    BigReal tiny = pow10(-(work - 2), work);
    for (long k = 1; k <= static_cast<long>(recip.size()); ++k) {
        BigReal contrib = term * recip[k - 1];
        if (k % 2 == 1)
            acc += contrib;
        else
            acc -= contrib;
        if (k > x.to_double() && abs(contrib) < tiny) break;
        term = term * x / k;  // x^k/(k-1)! -> x^(k+1)/k!
    }
    return acc;
}

}  // namespace

BigReal F_function(const BigReal& x, const BigReal& b, const BigReal& a, Digits target) {
    if (!(b > 1L)) throw std::domain_error("F_function: requires b > 1");
    if (!(a.sign() > 0)) throw std::domain_error("F_function: requires Re a > 0");
    if (x.is_zero()) return BigReal(0L, target);
    // the inner 1/zeta(bk,a) weights grow like a^{bk}, so the effective
    // cancellation scale is x a^b
    double scale = std::pow(std::max(1.0, a.to_double()), b.to_double());
    double xd = std::fabs(x.to_double()) * scale;
    long extra = static_cast<long>(0.4343 * xd) + 12;
    if (extra > 40000)
        throw std::domain_error("F_function: x needs about " + std::to_string(extra) +
                                " slack digits, over the precision budget");
    Digits work = target + extra;
    long K = f_series_length(xd, target);
    auto recip = reciprocal_zeta_table(b, a, K, work);
    return f_eval(x.with_digits(work), recip, work).with_digits(target);
}

BigReal G_function(const BigReal& x, Digits target) {
    double xd = std::fabs(x.to_double());
    long extra = static_cast<long>(0.4343 * xd) + 12;
    if (extra > 40000)
        throw std::domain_error("G_function: x over the precision budget");
    Digits work = target + extra;
    long K = f_series_length(xd, target);
    BigReal xw = x.with_digits(work);
    BigReal acc(0L, work), term(-xw);
    BigReal tiny = pow10(-(work - 2), work);
    for (long k = 1; k <= K; ++k) {
        BigReal contrib = term / riemann_zeta(BigReal(2 * k + 1, work), work);
        acc += contrib;
        if (k > xd && abs(contrib) < tiny) break;
        term = term * (-xw) / (k + 1);
    }
    return acc.with_digits(target);
}

BigReal riesz_function(const BigReal& x, Digits target) {
    return F_function(x, BigReal(2L, target), BigReal(1L, target), target);
}

PhiResult phi_quadrature(const BigReal& s, const BigReal& b, const BigReal& a,
                         const BigReal& tol, Digits digits) {
    if (!(s > BigReal(1.05, 20)) || !(s < b - BigReal(0.05, 20)))
        throw std::domain_error("phi_quadrature: requires 1 < Re s < b (with 0.05 margin)");

    // F's effective argument is x a^b (leading inner scale), so keep the
    // cancellation budget flat by shrinking the cut for larger a.
    double ab = std::pow(std::max(1.0, a.to_double()), b.to_double());
    const double X = std::max(10.0, 60.0 / ab);
    Digits work = digits + static_cast<long>(0.4343 * X * ab) + 24;
    BigReal Xw(X, work);
    BigReal sw = s.with_digits(work), bw = b.with_digits(work), aw = a.with_digits(work);
    BigReal alpha = 1L - sw / bw;
    BigReal expo = -(sw / bw) - 1L;  // x^(expo)

    long K = f_series_length(X * ab, digits) + 8;
    auto recip = reciprocal_zeta_table(b, a, K, work);

    PhiResult out;
    out.cut = BigReal(X, 20);

    {   // tanh-sinh over [0, X]; integrand singular like x^{-s/b} at 0
        auto integrand = [&](const BigReal& x, const BigReal& dist) {
            const BigReal& pos = (x < Xw / 2L) ? dist : x;  // accurate small-x coordinate
            return pow(pos, expo) * f_eval(pos, recip, work);
        };
        SeriesResult q = tanh_sinh(integrand, BigReal(0L, work), Xw, tol / 50L, work);
        out.quadrature_value = q.value;
    }

    {   // exact term-wise integral over [0, X]
        BigReal acc(0L, work), xpow = pow(Xw, 1L - sw / bw);
        // X^{k - s/b} / (k-1)! iterated
        for (long k = 1; k <= K; ++k) {
            BigReal term = xpow * recip[k - 1] / (BigReal(k, work) - sw / bw);
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
            if (k > X && abs(term) < pow10(-(work - 2), work)) break;
            xpow = xpow * Xw / k;
        }
        out.series_value = acc;
    }
    out.machinery_residual = abs(out.quadrature_value - out.series_value);

    BigReal gamma_factor = gamma(alpha);
    BigReal zeta_sa = hurwitz_zeta(sw, aw, work);

    bool a_is_one = (a == 1L);
    out.independent_tail = a_is_one;
    if (a_is_one) {
        // tail = sum_{n>=2} mu(n) n^-s GammaUpper(alpha, X n^-b), split into an
        // exactly-evaluated head (full incomplete gamma), a double-precision
        // gamma-series mid range, and a partial-summation bound on the
        // truncated Moebius remainder.
        const long N = 4'000'000;
        const long head = 128;
        auto mu_small = mobius_sieve(head);
        BigReal tail(0L, work);
        for (long n = 2; n <= head; ++n) {
            if (mu_small[n] == 0) continue;
            BigReal y = Xw * pow(BigReal(n, work), -bw);
            BigReal g = gamma_upper(alpha, y);
            tail += BigReal(mu_small[n], work) * pow(BigReal(n, work), -sw) * g;
        }
        // mid range n in (head, N]: Gamma(a,y) = Gamma(a) - y^a sum_r (-y)^r/(r!(a+r))
        double sd = s.to_double(), bd = b.to_double(), ad_ = alpha.to_double();
        double gsum = 0.0, gcomp = 0.0;   // gamma-series correction, Kahan
        double zsum = 0.0, zcomp = 0.0;   // mu(n) n^-s partial, Kahan
        long block = 1 << 16;
        std::vector<int8_t> mu(block);
        std::vector<int64_t> rem(block);
        auto primes = small_primes_upto(static_cast<long>(std::sqrt(static_cast<double>(N))) + 2);
        for (long lo = head + 1; lo <= N; lo += block) {
            long len = std::min(N + 1, lo + block) - lo;
            mobius_sieve_block(lo, len, primes, mu.data(), rem.data());
            for (long i = 0; i < len; ++i) {
                if (mu[i] == 0) continue;
                long n = lo + i;
                double nm_s = std::pow(static_cast<double>(n), -sd);
                double y = X * std::pow(static_cast<double>(n), -bd);
                {
                    double t = mu[i] * nm_s - zcomp;
                    double u = zsum + t;
                    zcomp = (u - zsum) - t;
                    zsum = u;
                }
                // lower-gamma series, 4 terms (y <= X/head^b, small)
                double ya = std::pow(y, ad_);
                double ser = 1.0 / ad_ - y / (ad_ + 1.0) + y * y / (2.0 * (ad_ + 2.0)) -
                             y * y * y / (6.0 * (ad_ + 3.0));
                double t = -mu[i] * nm_s * ya * ser - gcomp;
                double u = gsum + t;
                gcomp = (u - gsum) - t;
                gsum = u;
            }
        }
        tail += gamma_factor * BigReal(zsum, work) + BigReal(gsum, work);
        out.phi = out.quadrature_value + tail;
        // Truncated-remainder bound by partial summation against the computed
        // Mertens-function envelope |M(x)| <= 0.571 sqrt(x), valid far beyond
        // this N.
        double rb = gamma_factor.to_double() * 0.6 * (1.0 + sd / (sd - 0.5)) *
                    std::pow(static_cast<double>(N), 0.5 - sd);
        out.tail_bound = BigReal(std::fabs(rb) + 1e-12, 20);
    } else {
        // analytic completion of the tail through the outer equality; the
        // independent content of this row is machinery + Pochhammer agreement
        out.phi = out.quadrature_value + gamma_factor / zeta_sa - out.series_value;
        out.tail_bound = BigReal(0L, 20);
    }

    out.eq_outer_residual = abs(out.phi * zeta_sa - gamma_factor);

    {   // Pochhammer side
        ReciprocalSeriesSpec rs = ReciprocalSeriesSpec::general(b, a);
        EvalResult series = reciprocal_zeta_series(rs, BigComplex(sw), tol / 10L,
                                                   PrecisionPolicy{digits + 6, 10});
        out.eq_series_residual = abs(BigComplex(out.phi) - BigComplex(gamma_factor) * series.value);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Summatory identities

namespace {

// Terms of sum_k c_k(b,a) z^k from a coefficient table, z real.
std::vector<BigComplex> geometric_ck_terms(const BigReal& b, const BigReal& a, const BigReal& z,
                                           long K, PrecisionPolicy policy, bool over_k) {
    CoefficientSpec spec = (a == 1L && b == 2L) ? CoefficientSpec::riemann()
                                                : CoefficientSpec::general(b, a);
    CoefficientTable table(spec, K, policy);
    Digits work = table.working_digits();
    BigReal zw = z.with_digits(work);
    std::vector<BigComplex> terms;
    terms.reserve(K + 1);
    BigReal zp(1L, work);
    for (long k = 0; k <= K; ++k) {
        mpz_class binom(1);
        BigComplex ck(work);
        for (long j = 0; j <= k; ++j) {
            ck += table.weight(j) * BigReal::from_integer(binom, work);
            binom = binom * (k - j) / (j + 1);
        }
        BigComplex t = ck * zp;
        if (over_k && k >= 1) t = t / k;
        terms.push_back(k == 0 && over_k ? BigComplex(work) : t);
        zp *= zw;
    }
    return terms;
}

BigReal levin_or_sum(const std::vector<BigComplex>& terms, const BigReal& tol, bool* accelerated,
                     BigReal* raw_out) {
    EvalResult r = sum_terms_with_fallback(terms, tol, 8);
    if (accelerated) *accelerated = r.accelerated;
    if (raw_out) *raw_out = r.raw.re;
    return r.value.re;
}

}  // namespace

IdentityOutcome genfun_identity(const BigReal& s, const BigReal& b, const BigReal& a,
                                PrecisionPolicy policy) {
    if (!(s >= BigReal(-1L, 20)) || !(s < BigReal(0.5, 20)))
        throw std::domain_error("genfun_identity: requires -1 <= Re s < 1/2");
    if (!(b > 1L)) throw std::domain_error("genfun_identity: requires b > 1");

    long K = 1024;
    IdentityOutcome out;
    {
        auto terms = geometric_ck_terms(b, a, s, K, policy, false);
        out.lhs = levin_or_sum(terms, pow10(-(policy.target_digits + 2), 20),
                               &out.lhs_accelerated, &out.lhs_raw);
    }
    {
        Digits work = policy.target_digits + policy.guard_digits + 20;
        BigReal sw = s.with_digits(work), bw = b.with_digits(work), aw = a.with_digits(work);
        BigReal ratio = -sw / (1L - sw);
        std::vector<BigComplex> terms;
        BigReal rp(1L, work);
        long KR = 2048;
        BigReal tiny = pow10(-(work - 4), work);
        for (long k = 0; k <= KR; ++k) {
            BigReal t = rp / hurwitz_zeta(bw * (k + 1), aw, work);
            terms.push_back(BigComplex(t));
            rp *= ratio;
            if (k > 8 && abs(t) < tiny) break;
        }
        bool racc = false;
        BigReal rraw(0L, work);
        BigReal sum = levin_or_sum(terms, pow10(-(policy.target_digits + 2), 20), &racc, &rraw);
        out.rhs = sum / (1L - sw);
        out.rhs_accelerated = racc;
    }
    out.residual = abs(out.lhs - out.rhs);
    return out;
}

IdentityOutcome log_summatory_identity(const BigReal& t, const BigReal& b, const BigReal& a,
                                       PrecisionPolicy policy) {
    if (!(t >= BigReal(-1L, 20)) || !(t <= BigReal(0.5, 20)))
        throw std::domain_error("log_summatory_identity: requires -1 <= t <= 1/2");

    long K = 1024;
    IdentityOutcome out;
    Digits work = policy.target_digits + policy.guard_digits + 20;
    BigReal tw = t.with_digits(work), bw = b.with_digits(work), aw = a.with_digits(work);

    {   // LHS: c_0 ln(1-t) + sum_{k>=1} c_k t^k / k
        auto terms = geometric_ck_terms(b, a, t, K, policy, true);
        Digits tablework = terms.front().digits();
        CoefficientSpec spec = (a == 1L && b == 2L) ? CoefficientSpec::riemann()
                                                    : CoefficientSpec::general(b, a);
        BigReal c0 = ck_binomial(spec, 0, PrecisionPolicy{tablework, 10}).value.re;
        bool acc = false;
        BigReal raw(0L, work);
        BigReal sum = levin_or_sum(terms, pow10(-(policy.target_digits + 2), 20), &acc, &raw);
        BigReal logpart = c0.with_digits(work) * log(1L - tw);
        out.lhs = logpart + sum;
        out.lhs_raw = logpart + raw;
        out.lhs_accelerated = acc;
    }

    {   // RHS: sum_{k>=1} (-1)^k / (k zeta(bk+b, a)) r^k, r = t/(1-t)
        BigReal r = tw / (1L - tw);
        bool near_unit = abs(r) > BigReal(0.9, 20);
        bool split = near_unit && a == 1L;
        BigReal acc(0L, work);
        BigReal rp(1L, work);
        BigReal tiny = pow10(-(work - 4), work);
        long KR = 4096;
        for (long k = 1; k <= KR; ++k) {
            rp *= -r;
            BigReal inner = 1L / hurwitz_zeta(bw * (k + 1), aw, work);
            if (split) inner -= 1L;
            BigReal term = rp * inner / k;
            acc += term;
            if (k > 8 && abs(term) < tiny) break;
        }
        if (split) acc += -log(1L + r);
        out.rhs = acc;
    }
    out.residual = abs(out.lhs - out.rhs);
    return out;
}

ProbeResult conjecture_probe(const SigmaFn& f, const std::function<double(long)>& coeff,
                             double growth, long q, const std::vector<BigReal>& s_samples,
                             Digits digits) {
    if (q <= 1) throw std::invalid_argument("conjecture_probe: requires q > 1");
    const Digits d = digits;

    long K = 64;
    PrecisionPolicy policy{d, 10};
    CoefficientSpec spec = CoefficientSpec::maslanka_general(q, f);
    CoefficientTable table(spec, K, policy);
    Digits work = table.working_digits();

    ProbeResult out;
    out.terms = K;
    out.direct_tail = BigReal(0L, 20);
    for (const BigReal& s : s_samples) {
        BigReal sw = s.with_digits(work);
        BigComplex x(sw / q);
        BigComplex pk(BigReal(1L, work));
        std::vector<BigComplex> terms;
        for (long k = 0; k <= K; ++k) {
            mpz_class binom(1);
            BigComplex ak(work);
            for (long j = 0; j <= k; ++j) {
                ak += table.weight(j) * BigReal::from_integer(binom, work);
                binom = binom * (k - j) / (j + 1);
            }
            terms.push_back(ak * pk);
            pk = pk * (-x + (k + 1)) / (k + 1);
        }
        EvalResult ev = sum_terms_with_fallback(terms, pow10(-(d + 2), 20), 6);
        BigComplex series = ev.value / BigComplex(sw - 1L);

        BigComplex direct(work);
        if (coeff) {
            // truncated coefficient-stream oracle in compensated double
            double sd = s.to_double();
            if (sd - growth <= 1.2)
                throw std::domain_error("conjecture_probe: sample too close to the abscissa");
            long N = 2'000'000;
            double acc = 0.0, comp = 0.0;
            for (long n = 1; n <= N; ++n) {
                double c = coeff(n);
                if (c == 0.0) continue;
                double t = c * std::pow(static_cast<double>(n), -sd) - comp;
                double u = acc + t;
                comp = (u - acc) - t;
                acc = u;
            }
            double tail = std::pow(static_cast<double>(N), growth + 1.0 - sd) /
                          (sd - growth - 1.0);
            out.direct_tail = max(out.direct_tail, BigReal(tail, 20));
            direct = BigComplex(BigReal(acc, work));
        } else {
            direct = f(sw, work);
        }
        ProbeRow row{s, series, direct, abs(series - direct)};
        out.rows.push_back(row);
    }
    return out;
}

BigReal lemma_binomial_series_residual(const BigReal& x, long j, Digits digits) {
    Digits work = digits + 18;
    BigReal xw = x.with_digits(work);
    BigReal acc(0L, work);
    BigReal term = pow(xw, j);
    mpz_class jfact(1);
    for (long i = 2; i <= j; ++i) jfact *= i;
    // sum_{k>=j} C(k,j) x^k / k! starting at k = j: x^j/j! * ...
    // iterate t_k = C(k,j) x^k/k!: t_j = x^j/j!, t_{k+1} = t_k * x (k+1-j)/((k+1-j) ... )
    // use direct accumulation with running factorial
    BigReal t = term / BigReal::from_integer(jfact, work);
    BigReal tiny = pow10(-(work - 4), work);
    long k = j;
    while (true) {
        acc += t;
        ++k;
        // C(k,j)x^k/k! = C(k-1,j) x^{k-1}/(k-1)! * x k / (k (k - j)) ... recompute:
        // C(k,j)/k! = 1/(j! (k-j)!), so t_k = x^k/(j! (k-j)!): t_{k+1} = t_k * x/(k+1-j)
        t = t * xw / (k - j);
        if (k > 4 && t < tiny && k > x.to_double() + j) break;
    }
    BigReal target = pow(xw, j) * exp(xw) / BigReal::from_integer(jfact, work);
    return abs(acc - target).with_digits(digits);
}

BigReal lemma_scaling_sum_residual(const BigReal& x, const BigReal& b, const BigReal& a,
                                   Digits digits) {
    Digits work = digits + 20 + static_cast<long>(0.5 * x.to_double());
    BigReal xw = x.with_digits(work), bw = b.with_digits(work), aw = a.with_digits(work);
    const long head = 100;
    long K = f_series_length(x.to_double(), digits) + 4;
    auto recip = reciprocal_zeta_table(b, a, K, work);

    BigReal acc(0L, work);
    for (long n = 0; n < head; ++n) {
        BigReal y = xw * pow(aw + n, -bw);
        acc += f_eval(y, recip, work);
    }
    // tail over n >= head through the coefficient expansion of F:
    // sum_n F(x/(n+a)^b) = sum_k (-1)^{k+1} x^k/((k-1)! zeta(bk,a)) *
    //                      [zeta(bk,a) - sum_{n<head}(n+a)^{-bk}] / zeta(bk,a) ... direct:
    // sum_{n>=head} (n+a)^{-bk} = zeta(bk, a+head)
    BigReal term(xw);
    BigReal tiny = pow10(-(work - 4), work);
    for (long k = 1; k <= K; ++k) {
        BigReal ztail = hurwitz_zeta(bw * k, aw + head, work);
        BigReal contrib = term * recip[k - 1] * ztail;
        if (k % 2 == 1)
            acc += contrib;
        else
            acc -= contrib;
        if (k > 4 && abs(contrib) < tiny) break;
        term = term * xw / k;
    }
    BigReal target = xw * exp(-xw);
    return abs(acc - target).with_digits(digits);
}

BigReal fourier_term_residual(long k, long n, Digits digits) {
    Digits d = digits + 10;
    BigReal n2(n, d);
    n2 *= n;
    auto g = [&](const BigReal& t) { return 1L / (n2 * t * t + 1L / n2); };
    SeriesResult I = integrate_cos_halfline(g, BigReal(k, d), pow10(-(digits + 4), d), d, 56);
    BigReal lhs = I.value * 2L / const_pi(d);
    BigReal rhs = exp(BigReal(-k, d) / n2);
    return abs(lhs - rhs).with_digits(digits);
}

LimitCheck pochhammer_limit_check(const BigReal& s, long k_max, Digits digits) {
    if (floor(s) == s && s.sign() > 0)
        throw std::domain_error("pochhammer_limit_check: s must not be a positive integer");
    Digits work = digits + 14;
    BigReal sw = s.with_digits(work);
    auto seq = [&](long k) {
        BigReal pk = pochhammer_eval(k, sw);
        return pk * pow(BigReal(k + 1, work), sw);
    };
    ExtrapolatedLimit lim = extrapolate_limit(seq, k_max, 9);
    LimitCheck out;
    out.value = lim.value.with_digits(digits);
    out.target = (1L / gamma(1L - sw)).with_digits(digits);
    out.residual = abs(out.value - out.target);
    return out;
}

}  // namespace bdz
