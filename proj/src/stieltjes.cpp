#include "bdz/stieltjes.hpp"

#include <stdexcept>

#include "bdz/zeta.hpp"

namespace bdz {

bool StieltjesTable::all_real() const {
    for (const auto& v : values)
        if (!v.im.is_zero()) return false;
    return true;
}

// f(s) = zeta(s,a) - 1/(s-1) is entire; its Taylor coefficient t_k at s=1 is
// recovered from M equispaced samples on |s-1| = r as
//   t_k ~= r^-k (1/M) sum_m f(1 + r w^m) w^{-km},  w = e^{2 pi i / M}.
// Exponential aliasing decay; round-off amplification r^-k = 2^k absorbed by
// the elevated working precision.
StieltjesTable stieltjes(const BigComplex& a, int K, Digits target) {
    if (K < 0) throw std::invalid_argument("stieltjes: K must be >= 0");
    Digits work = target + PrecisionPolicy::cancellation_slack(K) + 15;
    long M = 8 * std::max<long>(16, target / 2) ;
    while (M < 4 * (K + 1)) M *= 2;

    BigReal r(0.5, work);
    BigReal two_pi = const_pi(work) * 2L;
    BigComplex aw(a.re.with_digits(work), a.im.with_digits(work));

    std::vector<BigComplex> samples;
    samples.reserve(M);
    for (long m = 0; m < M; ++m) {
        BigReal ang = two_pi * m / M;
        BigComplex sm(1L + r * cos(ang), r * sin(ang));
        BigComplex f = hurwitz_zeta(sm, aw, work) - inv(sm - 1L);
        samples.push_back(f);
    }

    StieltjesTable out;
    out.a = a;
    out.digits = target;
    BigReal rk(1L, work);
    mpz_class kfact(1);
    for (int k = 0; k <= K; ++k) {
        if (k > 0) kfact *= k;
        BigComplex acc(work);
        for (long m = 0; m < M; ++m) {
            BigReal ang = two_pi * ((-static_cast<long>(k) * m) % M) / M;
            BigComplex w(cos(ang), sin(ang));
            acc += samples[m] * w;
        }
        acc = acc / BigReal(M, work) / rk;
        // gamma_k = (-1)^k k! t_k
        BigComplex g = acc * BigReal::from_integer(kfact, work);
        if (k % 2 == 1) g = -g;
        out.values.push_back(
            BigComplex(g.re.with_digits(target), g.im.with_digits(target)));
        rk *= r;
    }
    return out;
}

StieltjesTable stieltjes_riemann(int K, Digits target) {
    return stieltjes(BigComplex(BigReal(1L, target)), K, target);
}

std::vector<BigReal> series_mul(const std::vector<BigReal>& a, const std::vector<BigReal>& b,
                                size_t n) {
    Digits d = a.empty() ? 30 : a[0].digits();
    std::vector<BigReal> r(n, BigReal(0L, d));
    for (size_t i = 0; i < a.size() && i < n; ++i)
        for (size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<BigReal> series_inv(const std::vector<BigReal>& a, size_t n) {
    if (a.empty() || a[0].is_zero())
        throw std::invalid_argument("series_inv: constant term must be nonzero");
    Digits d = a[0].digits();
    std::vector<BigReal> r(n, BigReal(0L, d));
    r[0] = 1L / a[0];
    for (size_t m = 1; m < n; ++m) {
        BigReal acc(0L, d);
        for (size_t j = 1; j <= m && j < a.size(); ++j) acc += a[j] * r[m - j];
        r[m] = -acc / a[0];
    }
    return r;
}

EtaTable eta_constants(int P, Digits target) {
    if (P < 0) throw std::invalid_argument("eta_constants: P must be >= 0");
    Digits work = target + 12;
    StieltjesTable st = stieltjes_riemann(P + 1, work);

    // g(u) = (s-1) zeta(s) at u = s-1:  1 + sum_k (-1)^k gamma_k u^{k+1}/k!
    size_t n = static_cast<size_t>(P) + 2;
    std::vector<BigReal> g(n, BigReal(0L, work));
    g[0] = BigReal(1L, work);
    mpz_class kfact(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (k > 0) kfact *= k;
        BigReal c = st.real(static_cast<int>(k)) / BigReal::from_integer(kfact, work);
        g[k + 1] = (k % 2 == 0) ? c : -c;
    }

    // zeta'/zeta = g'/g - 1/u  =>  eta_p = -[u^p] g'/g
    std::vector<BigReal> gp(n - 1, BigReal(0L, work));
    for (size_t k = 1; k < n; ++k) gp[k - 1] = g[k] * static_cast<long>(k);
    std::vector<BigReal> ratio = series_mul(gp, series_inv(g, n - 1), n - 1);

    EtaTable out;
    out.digits = target;
    for (int p = 0; p <= P; ++p)
        out.values.push_back((-ratio[static_cast<size_t>(p)]).with_digits(target));
    return out;
}

}  // namespace bdz
