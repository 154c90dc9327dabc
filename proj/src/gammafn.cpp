#include "bdz/gammafn.hpp"

#include <stdexcept>

#include "bdz/combinatorics.hpp"

namespace bdz {

namespace {

bool is_nonpositive_integer(const BigReal& x) {
    if (x.sign() > 0) return false;
    BigReal f = floor(x);
    return f == x;
}

void check_real_pole(const BigReal& x, const char* who) {
    if (is_nonpositive_integer(x))
        throw std::domain_error(std::string(who) + ": pole at non-positive integer");
}

bool is_complex_pole(const BigComplex& z) {
    return z.im.is_zero() && is_nonpositive_integer(z.re);
}

// |z| threshold above which the Stirling tail reaches the target precision.
double stirling_threshold(Digits d) { return 0.3665 * static_cast<double>(d) + 6.0; }

BigComplex pi_cot_pi(const BigComplex& z, Digits d) {
    // pi * cot(pi z) = pi * cos(pi z)/sin(pi z), stable for moderate |Im z|.
    BigReal pi = const_pi(d);
    BigReal x = pi * z.re, y = pi * z.im;
    BigReal ey = exp(y), emy = 1L / ey;
    BigReal ch = (ey + emy) / 2L, sh = (ey - emy) / 2L;
    BigComplex s(sin(x) * ch, cos(x) * sh);
    BigComplex c(cos(x) * ch, -sin(x) * sh);
    return pi * (c / s);
}

BigComplex sin_pi(const BigComplex& z, Digits d) {
    BigReal pi = const_pi(d);
    BigReal x = pi * z.re, y = pi * z.im;
    BigReal ey = exp(y), emy = 1L / ey;
    return {sin(x) * (ey + emy) / 2L, cos(x) * (ey - emy) / 2L};
}

}  // namespace

BigReal gamma(const BigReal& x) {
    check_real_pole(x, "gamma");
    BigReal r(x.digits());
    mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal log_gamma(const BigReal& x) {
    check_real_pole(x, "log_gamma");
    if (x.sign() <= 0) throw std::domain_error("log_gamma: requires positive argument");
    BigReal r(x.digits());
    mpfr_lngamma(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal digamma(const BigReal& x) {
    check_real_pole(x, "digamma");
    BigReal r(x.digits());
    mpfr_digamma(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigComplex log_gamma(const BigComplex& z) {
    if (is_complex_pole(z)) throw std::domain_error("log_gamma: pole at non-positive integer");
    Digits d = z.digits();
    if (z.im.is_zero() && z.re.sign() > 0) return BigComplex(log_gamma(z.re));

    if (z.re < BigReal(0.5, d)) {
        // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        BigComplex s = sin_pi(z, d);
        return log(BigComplex(const_pi(d)) / s) - log_gamma(1L - z);
    }

    BigReal threshold(stirling_threshold(d), d);
    BigComplex w = z;
    BigComplex shift_log(d);  // log of prod (z) (z+1) ... shifted out
    while (abs(w) < threshold) {
        shift_log += log(w);
        w = w + 1L;
    }

    // Stirling: (w - 1/2) log w - w + log(2 pi)/2 + sum B_2j / (2j(2j-1) w^(2j-1))
    BigComplex acc = (w - BigReal(0.5, d)) * log(w) - w +
                     BigComplex(log(const_pi(d) * 2L) / 2L);
    BigComplex w2 = w * w;
    BigComplex wpow = inv(w);
    BigReal tiny = pow10(-(d + 5), d);
    for (long j = 1; j <= 4 * d; ++j) {
        mpq_class c = bernoulli_number(2 * j) / mpq_class((2 * j) * (2 * j - 1));
        BigComplex term = BigComplex(BigReal::from_rational(c, d)) * wpow;
        acc += term;
        if (abs(term) < tiny) break;
        wpow = wpow / w2;
    }
    return acc - shift_log;
}

BigComplex gamma(const BigComplex& z) {
    if (z.im.is_zero()) return BigComplex(gamma(z.re));
    return exp(log_gamma(z));
}

BigComplex digamma(const BigComplex& z) {
    if (is_complex_pole(z)) throw std::domain_error("digamma: pole at non-positive integer");
    Digits d = z.digits();
    if (z.im.is_zero()) return BigComplex(digamma(z.re));

    if (z.re < BigReal(0L, d))
        return digamma(1L - z) - pi_cot_pi(z, d);

    BigReal threshold(stirling_threshold(d), d);
    BigComplex w = z;
    BigComplex shift(d);
    while (abs(w) < threshold) {
        shift += inv(w);
        w = w + 1L;
    }
    BigComplex acc = log(w) - inv(w * 2L);
    BigComplex w2 = w * w;
    BigComplex wpow = inv(w2);
    BigReal tiny = pow10(-(d + 5), d);
    for (long j = 1; j <= 4 * d; ++j) {
        mpq_class c = bernoulli_number(2 * j) / mpq_class(2 * j);
        BigComplex term = BigComplex(BigReal::from_rational(c, d)) * wpow;
        acc -= term;
        if (abs(term) < tiny) break;
        wpow = wpow / w2;
    }
    return acc - shift;
}

BigComplex polygamma(int m, const BigComplex& z) {
    if (m < 0) throw std::invalid_argument("polygamma: negative order");
    if (m == 0) return digamma(z);
    if (is_complex_pole(z)) throw std::domain_error("polygamma: pole at non-positive integer");
    Digits d = z.digits();
    if (z.re.sign() < 0 && z.im.is_zero() == false) {
        // not needed in this codebase; keep the domain honest
        throw std::domain_error("polygamma: Re z < 0 with nonzero Im unsupported");
    }
    if (z.im.is_zero() && z.re.sign() < 0)
        throw std::domain_error("polygamma: negative real argument unsupported");

    BigReal threshold(stirling_threshold(d) + m, d);
    BigComplex w = z;
    BigComplex shift(d);  // sum (z+i)^(-m-1)
    while (abs(w) < threshold) {
        shift += pow(inv(w), static_cast<long>(m) + 1);
        w = w + 1L;
    }

    // psi^(m)(w) = (-1)^(m-1) [ (m-1)!/w^m + m!/(2 w^(m+1))
    //              + sum_j B_2j (2j+m-1)!/(2j)! w^-(2j+m) ]
    mpz_class mfact(1);
    for (int i = 2; i <= m; ++i) mfact *= i;
    BigComplex invw = inv(w);
    BigComplex wm = pow(invw, static_cast<long>(m));
    BigComplex acc = wm * BigReal::from_integer(mfact / m, d) +
                     wm * invw * BigReal::from_integer(mfact, d) / 2L;
    BigComplex w2 = w * w;
    BigComplex wpow = wm * invw * invw;
    BigReal tiny = pow10(-(d + 5), d);
    mpz_class rising(1);  // (2j+m-1)!/(2j)! built incrementally
    for (long j = 1; j <= 4 * d; ++j) {
        // (2j+m-1)!/(2j)! = prod_{i=2j+1}^{2j+m-1} i
        rising = 1;
        for (long i = 2 * j + 1; i <= 2 * j + m - 1; ++i) rising *= i;
        mpq_class c = bernoulli_number(2 * j) * mpq_class(rising);
        BigComplex term = BigComplex(BigReal::from_rational(c, d)) * wpow;
        acc += term;
        if (abs(term) < tiny) break;
        wpow = wpow / w2;
    }
    BigComplex result = acc * BigReal((m % 2 == 1) ? 1L : -1L, d);
    BigComplex shift_part = shift * BigReal::from_integer(mfact, d);
    // psi^(m)(z) = psi^(m)(z+n) + (-1)^(m-1)? ... recurrence:
    // psi^(m)(z) = psi^(m)(w) - (-1)^m m! sum (z+i)^-(m+1)
    if (m % 2 == 0)
        result = result - shift_part;
    else
        result = result + shift_part;
    return result;
}

BigReal polygamma(int m, const BigReal& x) {
    return polygamma(m, BigComplex(x)).re;
}

BigReal gamma_upper(const BigReal& alpha, const BigReal& y) {
    if (y.sign() < 0) throw std::domain_error("gamma_upper: y must be >= 0");
    BigReal r(std::min(alpha.digits(), y.digits()));
    mpfr_gamma_inc(r.raw(), alpha.raw(), y.raw(), MPFR_RNDN);
    return r;
}

BigComplex gamma_upper(const BigComplex& alpha, const BigReal& y) {
    if (alpha.im.is_zero()) return BigComplex(gamma_upper(alpha.re, y));
    Digits d = std::min(alpha.digits(), y.digits());
    if (y.sign() < 0) throw std::domain_error("gamma_upper: y must be >= 0");
    if (y < alpha.re + 4L || y < BigReal(16L, d)) {
        // Gamma(alpha) - y^alpha sum_r (-y)^r / (r! (alpha + r))
        BigComplex acc(d);
        BigReal term(1L, d);
        BigReal tiny = pow10(-(d + 5), d);
        for (long r = 0; r <= 40 * d; ++r) {
            acc += BigComplex(term) / (alpha + r);
            term = term * (-y) / (r + 1);
            if (abs(term) < tiny && r > y.to_double()) break;
        }
        BigComplex ya = pow(BigComplex(y), alpha);
        return gamma(alpha) - ya * acc;
    }
    // Lentz continued fraction for the upper function.
    BigReal tiny = pow10(-(d + 8), d);
    BigComplex b = BigComplex(y) + 1L - alpha;
    BigComplex c(BigReal(1L, d) / pow10(-(2 * d), d));
    BigComplex dd = inv(b);
    BigComplex h = dd;
    for (long i = 1; i <= 200 * d; ++i) {
        BigComplex an = (alpha - i) * BigReal(i, d);
        b = b + 2L;
        dd = an * dd + b;
        if (abs(dd) < tiny) dd = BigComplex(tiny);
        c = b + an / c;
        if (abs(c) < tiny) c = BigComplex(tiny);
        dd = inv(dd);
        BigComplex delta = dd * c;
        h *= delta;
        if (abs(delta - 1L) < tiny) break;
    }
    return exp(BigComplex(-y) + alpha * log(BigComplex(y))) * h;
}

}  // namespace bdz
