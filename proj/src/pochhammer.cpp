#include "bdz/pochhammer.hpp"

#include <stdexcept>

#include "bdz/combinatorics.hpp"
#include "bdz/gammafn.hpp"

namespace bdz {

PochhammerPoly PochhammerPoly::make(long k) {
    PochhammerPoly p;
    p.k = k;
    p.coeff = {mpq_class(1)};
    // multiply by (i - s)/i for i = 1..k
    for (long i = 1; i <= k; ++i) {
        std::vector<mpq_class> next(p.coeff.size() + 1, mpq_class(0));
        for (size_t m = 0; m < p.coeff.size(); ++m) {
            next[m] += p.coeff[m] * i;
            next[m + 1] -= p.coeff[m];
        }
        for (auto& c : next) {
            c /= i;
            c.canonicalize();
        }
        p.coeff = std::move(next);
    }
    return p;
}

mpq_class PochhammerPoly::eval_exact(const mpq_class& s) const {
    mpq_class acc(0);
    for (size_t m = coeff.size(); m-- > 0;) acc = acc * s + coeff[m];
    acc.canonicalize();
    return acc;
}

BigComplex PochhammerPoly::eval(const BigComplex& s) const {
    Digits d = s.digits();
    BigComplex acc(d);
    for (size_t m = coeff.size(); m-- > 0;)
        acc = acc * s + BigComplex(BigReal::from_rational(coeff[m], d));
    return acc;
}

BigComplex pochhammer_eval(long k, const BigComplex& s) {
    Digits d = s.digits();
    BigComplex acc(BigReal(1L, d));
    for (long j = 0; j < k; ++j) {
        BigComplex num = -s + (j + 1);
        acc = acc * num / (j + 1);
    }
    return acc;
}

BigReal pochhammer_eval(long k, const BigReal& s) {
    Digits d = s.digits();
    BigReal acc(1L, d);
    for (long j = 0; j < k; ++j) acc = acc * ((j + 1) - s) / (j + 1);
    return acc;
}

BigComplex pochhammer_derivative(long k, const BigComplex& s, int j) {
    if (j < 0) throw std::invalid_argument("pochhammer_derivative: negative order");
    BigComplex half_s = s / 2L;
    BigComplex base = pochhammer_eval(k, half_s);
    if (j == 0) return base;

    BigComplex z1 = 1L - half_s;
    BigComplex z2 = -half_s + (k + 1);
    Digits d = s.digits();
    std::vector<BigComplex> g;
    for (int l = 0; l < j; ++l) {
        BigComplex diff = (l == 0) ? digamma(z1) - digamma(z2)
                                   : polygamma(l, z1) - polygamma(l, z2);
        BigReal scale = BigReal((l % 2 == 0) ? 1L : -1L, d) / pow(BigReal(2L, d), l + 1L);
        g.push_back(diff * scale);
    }
    return base * complete_bell(std::span<const BigComplex>(g.data(), g.size()));
}

mpq_class g_derivative_at_one_exact(long k, int l) {
    mpq_class sum(0);
    for (long i = 0; i < k; ++i) {
        mpq_class t(2, 2 * i + 1);  // 1/(i + 1/2)
        mpq_class p = t;
        for (int m = 0; m < l; ++m) p *= t;
        sum += p;
    }
    mpq_class fact(1);
    for (int m = 2; m <= l; ++m) fact *= m;
    mpq_class scale = -fact / mpq_class(1L << (l + 1));
    mpq_class r = scale * sum;
    r.canonicalize();
    return r;
}

std::vector<mpq_class> pochhammer_half_taylor_bell(long k, int J) {
    // P_k(1/2) exactly
    mpq_class base(1);
    for (long i = 1; i <= k; ++i) base *= mpq_class(2 * i - 1, 2 * i);
    base.canonicalize();

    std::vector<mpq_class> out;
    std::vector<mpq_class> g;
    mpq_class jfact(1);
    for (int j = 0; j <= J; ++j) {
        if (j > 0) {
            g.push_back(g_derivative_at_one_exact(k, j - 1));
            jfact *= j;
        }
        mpq_class c = base * complete_bell_exact(g) / jfact;
        c.canonicalize();
        out.push_back(c);
    }
    return out;
}

std::vector<mpq_class> pochhammer_half_taylor_stirling(long k, int J) {
    std::vector<mpq_class> out;
    mpq_class kfact(1);
    for (long i = 2; i <= k; ++i) kfact *= i;
    mpq_class sign_k = (k % 2 == 0) ? mpq_class(1) : mpq_class(-1);
    for (int j = 0; j <= J; ++j) {
        mpq_class acc(0);
        for (long l = j; l <= k; ++l) {
            mpq_class term = stirling_first(k, l) / mpq_class(mpz_class(1) << l);
            term *= mpq_class(binomial_exact(l, j));
            if ((l - j) % 2 == 1) term = -term;
            acc += term;
        }
        mpq_class c = sign_k * acc / kfact;
        c.canonicalize();
        out.push_back(c);
    }
    return out;
}

namespace {

using Poly = std::vector<mpq_class>;  // coefficients in h

Poly poly_mul_trunc(const Poly& a, const Poly& b, long n) {
    Poly r(std::min<long>(n + 1, static_cast<long>(a.size() + b.size()) - 1), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (static_cast<long>(i) > n) break;
        for (size_t j = 0; j < b.size() && static_cast<long>(i + j) <= n; ++j)
            r[i + j] += a[i] * b[j];
    }
    for (auto& c : r) c.canonicalize();
    return r;
}

// x(z0 + h) as a polynomial in h.
Poly shift_poly(const std::vector<mpq_class>& x, const mpq_class& z0) {
    Poly r{mpq_class(0)};
    Poly zh{z0, mpq_class(1)};  // z0 + h
    Poly p{mpq_class(1)};
    for (size_t m = 0; m < x.size(); ++m) {
        if (r.size() < p.size()) r.resize(p.size(), mpq_class(0));
        for (size_t i = 0; i < p.size(); ++i) r[i] += x[m] * p[i];
        p = poly_mul_trunc(p, zh, static_cast<long>(x.size()));
    }
    for (auto& c : r) c.canonicalize();
    return r;
}

}  // namespace

PowerDerivativeCheck faa_di_bruno_check(long n, const mpq_class& a,
                                        const std::vector<mpq_class>& x_coeffs,
                                        const mpq_class& z0) {
    if (n < 1) throw std::invalid_argument("faa_di_bruno_check: n must be >= 1");
    Poly u = shift_poly(x_coeffs, z0);
    mpq_class u0 = u[0];
    if (u0 == 0) throw std::invalid_argument("faa_di_bruno_check: x(z0) must be nonzero");

    // v = u/u0 - 1, so (1+v)^{-a} = sum_m C(-a, m) v^m; the u0^{+-a} factors
    // of the two sides of the identity cancel, keeping everything rational.
    Poly v(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
        v[i] = u[i] / u0;
        v[i].canonicalize();
    }
    v[0] = 0;

    mpq_class nfact(1);
    for (long i = 2; i <= n; ++i) nfact *= i;

    Poly vm{mpq_class(1)};
    mpq_class lhs_coeff(0);
    for (long m = 0; m <= n; ++m) {
        if (m > 0) vm = poly_mul_trunc(vm, v, n);
        if (static_cast<long>(vm.size()) > n)
            lhs_coeff += binomial_rational(-a, m) * vm[n];
    }
    mpq_class lhs = lhs_coeff * nfact;  // x^a D^n x^{-a} at z0
    lhs.canonicalize();

    mpq_class rhs(0);
    Poly uj{mpq_class(1)};
    mpq_class u0j(1);  // u0^j
    bool product_ok = true;
    for (long j = 0; j <= n; ++j) {
        if (j > 0) {
            uj = poly_mul_trunc(uj, u, n);
            u0j *= u0;
        }
        mpq_class w = binomial_rational(-a, j) * binomial_rational(a + n, n - j);
        mpq_class dnxj = (static_cast<long>(uj.size()) > n) ? uj[n] * nfact : mpq_class(0);
        rhs += w * dnxj / u0j;

        mpq_class prod(1);
        for (long k2 = 0; k2 <= n; ++k2) {
            if (k2 == j) continue;
            prod *= (a + k2) / mpq_class(k2 - j);
        }
        prod.canonicalize();
        if (w != prod) product_ok = false;
    }
    rhs.canonicalize();

    PowerDerivativeCheck out;
    out.lhs = lhs;
    out.rhs = rhs;
    out.sides_equal = (lhs == rhs);
    out.product_identity_ok = product_ok;
    return out;
}

}  // namespace bdz
