#include "bdz/zeta.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bdz/combinatorics.hpp"
#include "bdz/gammafn.hpp"

namespace bdz {

namespace {

void check_hurwitz_a(const BigReal& re, const BigReal& im) {
    if (!im.is_zero()) return;
    if (re.sign() > 0) return;
    if (floor(re) == re)
        throw std::domain_error("hurwitz_zeta: a must avoid {0, -1, -2, ...}");
}

BigReal inv_square(const BigReal& x) { return 1L / (x * x); }
BigComplex inv_square(const BigComplex& x) { return inv(x * x); }

// Shared Euler-Maclaurin core; T is BigReal or BigComplex.
template <class T>
T hurwitz_em(const T& s, const T& a, Digits d, double re_s, double im_s, double re_a) {
    const BigReal tol = pow10(-(d + 2), d);

    // Shift a into Re a >= 1/2 territory.
    if (re_a < 0.5) {
        long m = static_cast<long>(std::ceil(0.5 - re_a)) + 1;
        T acc = hurwitz_em(s, a + m, d, re_s, im_s, re_a + m);
        for (long i = 0; i < m; ++i) acc += pow(a + i, -s);
        return acc;
    }

    long N = std::max<long>(10, static_cast<long>(0.7 * d + 0.4 * std::fabs(im_s)) + 1);
    N = std::max(N, static_cast<long>(std::hypot(re_s, im_s) / 2) + 1);
    if (re_s > 2.5) {
        // Large Re s needs only a short direct sum before the tail dies.
        double n_small = std::pow(10.0, (d + 4.0) / (re_s - 1.0)) - re_a + 2.0;
        if (n_small < static_cast<double>(N))
            N = std::max<long>(4, static_cast<long>(n_small) + 1);
    }

    T sum0 = pow(a, -s);
    for (long n = 1; n < N; ++n) sum0 += pow(a + n, -s);

    T x = a + N;
    T xs = pow(x, -s);                    // (N+a)^-s
    T t1 = xs * x / (s - 1L);             // (N+a)^(1-s)/(s-1)
    T t2 = xs / 2L;
    T acc = sum0 + t1 + t2;

    // Correction terms B_2j/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1}
    T x2inv = inv_square(x);
    T w = s / 2L;                         // (s)_1 / 2!
    T pw = xs / x;                        // x^{-s-1}
    BigReal scale = max(abs(acc), BigReal(1L, d));
    bool done = false;
    for (long j = 1; j <= 2 * d + 64; ++j) {
        T term = pw * w * BigReal::from_rational(bernoulli_number(2 * j), d);
        acc += term;
        if (abs(term) < tol * scale) {
            done = true;
            break;
        }
        w = w * (s + (2 * j - 1)) * (s + (2 * j)) / ((2 * j + 1) * (2 * j + 2));
        pw = pw * x2inv;
    }
    if (!done)
        throw std::runtime_error("hurwitz_zeta: Euler-Maclaurin correction failed to converge");
    return acc;
}

}  // namespace

BigReal hurwitz_zeta(const BigReal& s, const BigReal& a, Digits digits) {
    check_hurwitz_a(a, BigReal(0L, 8));
    if (s == 1L) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    BigReal sw = s.with_digits(digits), aw = a.with_digits(digits);
    return hurwitz_em<BigReal>(sw, aw, digits, s.to_double(), 0.0, a.to_double());
}

BigComplex hurwitz_zeta(const BigComplex& s, const BigComplex& a, Digits digits) {
    check_hurwitz_a(a.re, a.im);
    if (s.im.is_zero() && a.im.is_zero())
        return BigComplex(hurwitz_zeta(s.re, a.re, digits));
    if (s.im.is_zero() && s.re == 1L) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    BigComplex sw(s.re.with_digits(digits), s.im.with_digits(digits));
    BigComplex aw(a.re.with_digits(digits), a.im.with_digits(digits));
    return hurwitz_em<BigComplex>(sw, aw, digits, s.re.to_double(), s.im.to_double(),
                                  a.re.to_double());
}

BigReal riemann_zeta(const BigReal& s, Digits digits) {
    return hurwitz_zeta(s, BigReal(1L, digits), digits);
}

BigComplex riemann_zeta(const BigComplex& s, Digits digits) {
    return hurwitz_zeta(s, BigComplex(BigReal(1L, digits)), digits);
}

BigReal riemann_zeta_derivative(const BigReal& s, Digits digits) {
    Digits work = 2 * digits + 12;
    BigReal h = pow10(-(digits / 2 + 3), work);
    BigReal sw = s.with_digits(work);
    BigReal up = riemann_zeta(sw + h, work);
    BigReal dn = riemann_zeta(sw - h, work);
    return ((up - dn) / (2L * h)).with_digits(digits);
}

BigComplex lerch_phi(const BigComplex& z, const BigComplex& s, const BigComplex& a,
                     Digits digits) {
    check_hurwitz_a(a.re, a.im);
    BigReal zmag = abs(z);
    Digits d = digits;

    if (z.im.is_zero() && z.re == 1L) return hurwitz_zeta(s, a, d);
    if (z.im.is_zero() && z.re == -1L) {
        // Phi(-1, s, a) = 2^-s [zeta(s, a/2) - zeta(s, (a+1)/2)]
        if (!(s.re > 1L))
            throw std::domain_error("lerch_phi: |z| = 1 requires Re s > 1");
        BigComplex two_s = pow(BigComplex(BigReal(2L, d)), s);
        return (hurwitz_zeta(s, a / 2L, d) - hurwitz_zeta(s, (a + 1L) / 2L, d)) / two_s;
    }
    if (!(zmag < BigReal(1L, d)))
        throw std::domain_error("lerch_phi: requires |z| < 1 or z in {1, -1}");

    double lz = -std::log(zmag.to_double());
    long N = static_cast<long>((d + 4) * 2.303 / lz) + 8 +
             4 * static_cast<long>(std::fabs(s.re.to_double()));
    BigComplex acc = pow(a, -s);
    BigComplex zp(BigReal(1L, d));
    for (long n = 1; n <= N; ++n) {
        zp *= z;
        acc += zp * pow(a + n, -s);
    }
    return acc;
}

BigComplex multiple_zeta(int n, const BigComplex& s, const BigComplex& z, Digits digits) {
    if (n < 1) throw std::invalid_argument("multiple_zeta: n must be >= 1");
    check_hurwitz_a(z.re, z.im);
    if (s.im.is_zero()) {
        BigReal sr = s.re;
        if (floor(sr) == sr && sr >= 1L && sr <= static_cast<long>(n))
            throw std::domain_error("multiple_zeta: pole at integer s in [1, n]");
    }
    Digits d = digits;

    // p(k) = C(k+n-1, n-1) as an exact polynomial in k.
    std::vector<mpq_class> p{mpq_class(1)};
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<mpq_class> next(p.size() + 1, mpq_class(0));
        for (size_t m = 0; m < p.size(); ++m) {
            next[m] += p[m] * i;      // * (k + i): constant part
            next[m + 1] += p[m];      // k part
        }
        for (auto& c : next) {
            c /= i;
            c.canonicalize();
        }
        p = std::move(next);
    }

    // Re-express in powers of (k+z): q_j = p^(j)(-z)/j!.
    BigComplex acc(d);
    std::vector<mpq_class> deriv = p;
    BigComplex mz = -z;
    for (int j = 0; j <= n - 1; ++j) {
        // evaluate deriv at -z by Horner
        BigComplex qj(d);
        for (size_t m = deriv.size(); m-- > 0;)
            qj = qj * mz + BigComplex(BigReal::from_rational(deriv[m], d));
        mpz_class jfact(1);
        for (int i = 2; i <= j; ++i) jfact *= i;
        qj = qj / BigReal::from_integer(jfact, d);
        acc += qj * hurwitz_zeta(s - static_cast<long>(j), z, d);
        // differentiate
        std::vector<mpq_class> dnext;
        for (size_t m = 1; m < deriv.size(); ++m) dnext.push_back(deriv[m] * static_cast<long>(m));
        deriv = std::move(dnext);
        if (deriv.empty()) break;
    }
    return acc;
}

namespace {

BigReal multiple_zeta_sderiv_at0(int n, const BigReal& z, Digits d) {
    Digits work = 2 * d + 14;
    BigReal h = pow10(-(d / 2 + 3), work);
    BigComplex zz(z.with_digits(work));
    BigComplex up = multiple_zeta(n, BigComplex(h), zz, work);
    BigComplex dn = multiple_zeta(n, BigComplex(-h), zz, work);
    return ((up.re - dn.re) / (2L * h)).with_digits(d + 6);
}

}  // namespace

BigReal log_multiple_gamma(int n, const BigReal& z, Digits digits) {
    if (n < 1 || n > 3) throw std::invalid_argument("log_multiple_gamma: n must be in {1,2,3}");
    if (!(z.sign() > 0)) throw std::domain_error("log_multiple_gamma: requires z > 0");
    Digits d = digits;

    BigReal main = multiple_zeta_sderiv_at0(n, z, d);

    std::vector<BigReal> R;  // R[m] = sum_{k<=m} zeta_k'(0, 1), 1-based
    R.push_back(BigReal(0L, d));
    BigReal one(1L, d);
    BigReal racc(0L, d);
    for (int m = 1; m <= n; ++m) {
        racc += multiple_zeta_sderiv_at0(m, one, d);
        R.push_back(racc);
    }

    BigReal corr(0L, d);
    for (int k = 1; k <= n; ++k) {
        // C(z, k-1)
        BigReal binom(1L, d);
        for (int i = 0; i < k - 1; ++i) binom = binom * (z - i) / (i + 1);
        BigReal term = binom * R[n + 1 - k];
        if (k % 2 == 1)
            corr -= term;
        else
            corr += term;
    }
    return (main + corr).with_digits(d);
}

}  // namespace bdz
