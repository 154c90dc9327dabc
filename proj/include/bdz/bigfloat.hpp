#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace bdz {

using Digits = long;

// Decimal digits -> mpfr bits.  The extra guard bits keep (a+b)-b style
// identities good to within two decimal digits of the nominal precision.
inline mpfr_prec_t bits_for_digits(Digits d) {
    if (d < 2) d = 2;
    return static_cast<mpfr_prec_t>(d * 3.3219280948873623 + 1.0) + 32;
}

// Arbitrary-precision real.  Every value carries its working precision in
// decimal digits; binary operations round once, at the minimum of the two
// operand precisions.
class BigReal {
public:
    explicit BigReal(Digits digits = 30) : digits_(digits) {
        mpfr_init2(v_, bits_for_digits(digits));
        mpfr_set_nan(v_);
    }
    BigReal(double x, Digits digits) : digits_(digits) {
        mpfr_init2(v_, bits_for_digits(digits));
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    BigReal(long x, Digits digits) : digits_(digits) {
        mpfr_init2(v_, bits_for_digits(digits));
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    BigReal(int x, Digits digits) : BigReal(static_cast<long>(x), digits) {}

    BigReal(const BigReal& o) : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept : digits_(o.digits_) {
        v_[0] = o.v_[0];
        mpfr_init2(o.v_, MPFR_PREC_MIN);
        o.digits_ = 2;
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
            digits_ = o.digits_;
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) {
            mpfr_swap(v_, o.v_);
            std::swap(digits_, o.digits_);
        }
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal from_string(const std::string& s, Digits digits) {
        BigReal r(digits);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("BigReal: unparsable literal '" + s + "'");
        return r;
    }
    static BigReal from_rational(const mpq_class& q, Digits digits) {
        BigReal r(digits);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigReal from_integer(const mpz_class& z, Digits digits) {
        BigReal r(digits);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    Digits digits() const { return digits_; }
    BigReal with_digits(Digits d) const {
        BigReal r(d);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Shortest-style decimal rendering at `significant` digits (defaults to
    // the value's own precision).
    std::string str(int significant = -1) const {
        int p = significant > 0 ? significant : static_cast<int>(digits_);
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", p, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    BigReal& operator+=(const BigReal& o) { return apply2(o, mpfr_add); }
    BigReal& operator-=(const BigReal& o) { return apply2(o, mpfr_sub); }
    BigReal& operator*=(const BigReal& o) { return apply2(o, mpfr_mul); }
    BigReal& operator/=(const BigReal& o) { return apply2(o, mpfr_div); }

    BigReal& operator+=(long x) { mpfr_add_si(v_, v_, x, MPFR_RNDN); return *this; }
    BigReal& operator-=(long x) { mpfr_sub_si(v_, v_, x, MPFR_RNDN); return *this; }
    BigReal& operator*=(long x) { mpfr_mul_si(v_, v_, x, MPFR_RNDN); return *this; }
    BigReal& operator/=(long x) { mpfr_div_si(v_, v_, x, MPFR_RNDN); return *this; }

    BigReal operator-() const {
        BigReal r(digits_);
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_add); }
    friend BigReal operator-(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_sub); }
    friend BigReal operator*(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_mul); }
    friend BigReal operator/(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_div); }

    friend BigReal operator+(const BigReal& a, long b) { BigReal r(a); r += b; return r; }
    friend BigReal operator-(const BigReal& a, long b) { BigReal r(a); r -= b; return r; }
    friend BigReal operator*(const BigReal& a, long b) { BigReal r(a); r *= b; return r; }
    friend BigReal operator/(const BigReal& a, long b) { BigReal r(a); r /= b; return r; }
    friend BigReal operator+(long a, const BigReal& b) { return b + a; }
    friend BigReal operator*(long a, const BigReal& b) { return b * a; }
    friend BigReal operator-(long a, const BigReal& b) {
        BigReal r(b.digits_);
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(long a, const BigReal& b) {
        BigReal r(b.digits_);
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

private:
    using mpfr_op2 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

    BigReal& apply2(const BigReal& o, mpfr_op2 op) {
        Digits d = std::min(digits_, o.digits_);
        if (d != digits_) {
            BigReal r = binop(*this, o, op);
            *this = std::move(r);
        } else {
            op(v_, v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    static BigReal binop(const BigReal& a, const BigReal& b, mpfr_op2 op) {
        BigReal r(std::min(a.digits_, b.digits_));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
    Digits digits_;
};

inline BigReal abs(const BigReal& x) {
    BigReal r(x.digits());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

#define BDZ_UNARY(name, mpfr_fn)                        \
    inline BigReal name(const BigReal& x) {             \
        BigReal r(x.digits());                          \
        mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);           \
        return r;                                       \
    }
BDZ_UNARY(sqrt, mpfr_sqrt)
BDZ_UNARY(exp, mpfr_exp)
BDZ_UNARY(log, mpfr_log)
BDZ_UNARY(log1p, mpfr_log1p)
BDZ_UNARY(sin, mpfr_sin)
BDZ_UNARY(cos, mpfr_cos)
#undef BDZ_UNARY

inline BigReal floor(const BigReal& x) {
    BigReal r(x.digits());
    mpfr_rint(r.raw(), x.raw(), MPFR_RNDD);
    return r;
}
inline BigReal ceil(const BigReal& x) {
    BigReal r(x.digits());
    mpfr_rint(r.raw(), x.raw(), MPFR_RNDU);
    return r;
}

inline BigReal pow(const BigReal& b, const BigReal& e) {
    BigReal r(std::min(b.digits(), e.digits()));
    mpfr_pow(r.raw(), b.raw(), e.raw(), MPFR_RNDN);
    return r;
}
inline BigReal pow(const BigReal& b, long e) {
    BigReal r(b.digits());
    mpfr_pow_si(r.raw(), b.raw(), e, MPFR_RNDN);
    return r;
}
inline BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(std::min(y.digits(), x.digits()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline BigReal hypot(const BigReal& x, const BigReal& y) {
    BigReal r(std::min(x.digits(), y.digits()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }
inline BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }

inline BigReal const_pi(Digits d) {
    BigReal r(d);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
inline BigReal const_euler(Digits d) {
    BigReal r(d);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}
inline BigReal const_catalan(Digits d) {
    BigReal r(d);
    mpfr_const_catalan(r.raw(), MPFR_RNDN);
    return r;
}
inline BigReal const_ln2(Digits d) {
    BigReal r(d);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}
// 10^-d at a small carrier precision; handy as a tolerance literal.
inline BigReal pow10(long e, Digits d = 20) {
    BigReal r(d);
    mpfr_set_si(r.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}
inline BigReal factorial(unsigned long n, Digits d) {
    BigReal r(d);
    mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
    return r;
}

// Complex value over two BigReals.
class BigComplex {
public:
    BigReal re, im;

    explicit BigComplex(Digits d = 30) : re(0L, d), im(0L, d) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const BigReal& r) : re(r), im(BigReal(0L, r.digits())) {}
    BigComplex(double r, double i, Digits d) : re(r, d), im(i, d) {}

    Digits digits() const { return std::min(re.digits(), im.digits()); }
    bool is_real() const { return im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    std::string str(int significant = -1) const {
        if (is_real()) return re.str(significant);
        return "(" + re.str(significant) + ", " + im.str(significant) + ")";
    }

    BigComplex operator-() const { return {-re, -im}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    friend BigComplex operator*(const BigComplex& a, const BigReal& b) { return {a.re * b, a.im * b}; }
    friend BigComplex operator*(const BigReal& b, const BigComplex& a) { return a * b; }
    friend BigComplex operator/(const BigComplex& a, const BigReal& b) { return {a.re / b, a.im / b}; }
    friend BigComplex operator+(const BigComplex& a, const BigReal& b) { return {a.re + b, a.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigReal& b) { return {a.re - b, a.im}; }
    friend BigComplex operator+(const BigComplex& a, long b) { return {a.re + b, a.im}; }
    friend BigComplex operator-(const BigComplex& a, long b) { return {a.re - b, a.im}; }
    friend BigComplex operator*(const BigComplex& a, long b) { return {a.re * b, a.im * b}; }
    friend BigComplex operator/(const BigComplex& a, long b) { return {a.re / b, a.im / b}; }
    friend BigComplex operator-(long a, const BigComplex& b) { return {a - b.re, -b.im}; }

    BigComplex& operator+=(const BigComplex& o) { *this = *this + o; return *this; }
    BigComplex& operator-=(const BigComplex& o) { *this = *this - o; return *this; }
    BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }
    BigComplex& operator/=(const BigComplex& o) { *this = *this / o; return *this; }
};

inline BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
inline BigReal abs(const BigComplex& z) { return hypot(z.re, z.im); }
inline BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }
inline BigComplex exp(const BigComplex& z) {
    BigReal m = exp(z.re);
    if (z.im.is_zero()) return BigComplex(m);
    return {m * cos(z.im), m * sin(z.im)};
}
inline BigComplex log(const BigComplex& z) {
    if (z.im.is_zero() && z.re.sign() > 0) return BigComplex(log(z.re));
    return {log(abs(z)), arg(z)};
}
inline BigComplex inv(const BigComplex& z) {
    BigReal den = z.re * z.re + z.im * z.im;
    return {z.re / den, -z.im / den};
}
inline BigComplex pow(const BigComplex& b, long e) {
    Digits d = b.digits();
    BigComplex acc(BigReal(1L, d));
    BigComplex base = b;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return e < 0 ? inv(acc) : acc;
}
inline BigComplex pow(const BigComplex& b, const BigComplex& e) {
    if (b.im.is_zero() && e.im.is_zero() && b.re.sign() > 0)
        return BigComplex(pow(b.re, e.re));
    return exp(e * log(b));
}
inline BigComplex sqrt(const BigComplex& z) { return pow(z, BigComplex(BigReal(0.5, z.digits()))); }

// Working-precision policy for cancellation-prone alternating binomial sums.
// The worst term of a k-fold alternating binomial transform is at most
// 2^k * max_j |r_j|, so k*log10(2) slack digits suffice on top of the target.
struct PrecisionPolicy {
    Digits target_digits = 30;
    Digits guard_digits = 10;

    static long cancellation_slack(long k) {
        return static_cast<long>(0.30103 * k) + 1;
    }
    Digits working(long k) const {
        return target_digits + guard_digits + cancellation_slack(k);
    }
    static PrecisionPolicy identity_default() { return {30, 10}; }
    static PrecisionPolicy sweep_default() { return {12, 10}; }
};

}  // namespace bdz
