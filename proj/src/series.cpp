#include "bdz/series.hpp"

#include <cmath>
#include <stdexcept>

namespace bdz {

namespace {

template <class T>
SeriesResultT<T> sum_until_impl(const std::function<T(long)>& term, const BigReal& tol,
                                int consecutive, long max_terms) {
    if (!(tol > 0L)) throw std::invalid_argument("sum_until: tol must be positive");
    if (consecutive < 1) throw std::invalid_argument("sum_until: consecutive must be >= 1");

    T first = term(0);
    Digits d = first.digits();
    SeriesResultT<T> out(d);
    T acc = first;
    BigReal last_mag = abs(first);
    int small_run = last_mag < tol ? 1 : 0;
    long n = 1;
    while (small_run < consecutive && n < max_terms) {
        T t = term(n);
        acc += t;
        last_mag = abs(t);
        small_run = last_mag < tol ? small_run + 1 : 0;
        ++n;
    }
    out.value = acc;
    out.terms_used = n;
    out.tail_estimate = last_mag * static_cast<long>(consecutive);
    out.converged = small_run >= consecutive;
    return out;
}

}  // namespace

SeriesResult sum_until(const std::function<BigReal(long)>& term, const BigReal& tol,
                       int consecutive, long max_terms) {
    return sum_until_impl<BigReal>(term, tol, consecutive, max_terms);
}

ComplexSeriesResult sum_until_complex(const std::function<BigComplex(long)>& term,
                                      const BigReal& tol, int consecutive, long max_terms) {
    return sum_until_impl<BigComplex>(term, tol, consecutive, max_terms);
}

// Levin u-transform on the trailing window of the sequence.  Remainder
// estimates omega_n = (n+1) a_n; numerator/denominator accumulated with the
// standard binomial weights.  The (j+1)^(k-1) weights cancel against each
// other at the 10^(k log10 k) scale, so the tableau runs at elevated
// internal precision.
static BigReal levin_u(const std::vector<BigReal>& terms, int order, BigReal* prev_order) {
    const long n = static_cast<long>(terms.size());
    const long base = n - 1 - order;  // window: terms[base .. base+order]
    Digits d0 = terms.front().digits();
    Digits d = d0 + static_cast<Digits>(order * std::log10(base + order + 2.0)) + 16;

    std::vector<BigReal> s;  // partial sums over the window
    s.reserve(order + 1);
    BigReal acc(0L, d);
    for (long i = 0; i <= base + order; ++i) {
        acc += terms[i].with_digits(d);
        if (i >= base) s.push_back(acc);
    }

    auto column = [&](int k) {
        BigReal num(0L, d), den(0L, d);
        BigReal binom(1L, d);  // C(k, j), updated multiplicatively
        BigReal sign(1L, d);
        for (int j = 0; j <= k; ++j) {
            BigReal omega = (terms[base + j].is_zero())
                                ? BigReal(1e-300, d)
                                : terms[base + j].with_digits(d) * (base + j + 1);
            BigReal idx(base + static_cast<long>(j) + 1, d);  // global index weight
            BigReal w = sign * binom * pow(idx, static_cast<long>(k - 1)) / omega;
            num += w * s[j];
            den += w;
            binom = binom * (k - j) / (j + 1);
            sign = -sign;
        }
        if (den.is_zero()) return s.back();
        return num / den;
    };

    if (prev_order) *prev_order = column(order - 1).with_digits(d0);
    return column(order).with_digits(d0);
}

BigReal accelerate_alternating(const std::vector<BigReal>& terms, int order) {
    if (static_cast<long>(terms.size()) < order + 2)
        throw std::invalid_argument("accelerate_alternating: need at least order+2 terms");
    return levin_u(terms, order, nullptr);
}

AcceleratedValue extrapolate_sums_sqrtk(const std::vector<BigReal>& terms, int points) {
    long n = static_cast<long>(terms.size());
    if (n < 48) throw std::invalid_argument("extrapolate_sums_sqrtk: need at least 48 terms");
    Digits d0 = terms.front().digits();
    Digits d = d0 + 18;

    std::vector<long> ks;
    for (int i = points - 1; i >= 0; --i) {
        long k = (n - 1) >> i;
        if (k >= 8 && (ks.empty() || k > ks.back())) ks.push_back(k);
    }
    std::vector<BigReal> row, x;
    {
        BigReal acc(0L, d);
        long idx = 0;
        size_t next = 0;
        for (long m = 0; m < n && next < ks.size(); ++m) {
            acc += terms[m].with_digits(d);
            idx = m;
            if (idx == ks[next]) {
                row.push_back(acc);
                x.push_back(1L / sqrt(BigReal(ks[next], d)));
                ++next;
            }
        }
    }
    int m = static_cast<int>(row.size());
    BigReal corner_prev = row.back(), est(0L, d);
    for (int c = 1; c < m; ++c) {
        for (int i = m - 1; i >= c; --i)
            row[i] = (x[i] * row[i - 1] - x[i - c] * row[i]) / (x[i] - x[i - c]);
        if (c == m - 1)
            est = abs(row.back() - corner_prev);
        else
            corner_prev = row.back();
    }
    return {row[m - 1].with_digits(d0), est.with_digits(d0)};
}

AcceleratedValue accelerate_with_stability(const std::vector<BigReal>& terms, int order) {
    if (static_cast<long>(terms.size()) < order + 2)
        throw std::invalid_argument("accelerate_alternating: need at least order+2 terms");
    BigReal prev(terms.front().digits());
    BigReal v = levin_u(terms, order, &prev);
    return {v, abs(v - prev)};
}

// Wynn epsilon (Shanks/Pade) on the partial sums; the tool of choice for
// alternating tails with geometric growth, where the series is summable only
// in the Abel sense.
AcceleratedValue wynn_epsilon(const std::vector<BigReal>& terms) {
    long n = static_cast<long>(terms.size());
    if (n < 6) throw std::invalid_argument("wynn_epsilon: need at least 6 terms");
    if (n > 120) {
        std::vector<BigReal> tail(terms.end() - 120, terms.end());
        BigReal head(0L, terms.front().digits());
        for (long i = 0; i + 120 < n; ++i) head += terms[i];
        tail[0] += head;  // fold the head into the first window term
        return wynn_epsilon(tail);
    }
    Digits d0 = terms.front().digits();
    Digits d = d0 + n + 16;
    std::vector<BigReal> prev(n + 1, BigReal(0L, d));  // eps_{-1}
    std::vector<BigReal> cur;                          // eps_0 = partial sums
    {
        BigReal acc(0L, d);
        for (const auto& t : terms) {
            acc += t.with_digits(d);
            cur.push_back(acc);
        }
    }
    BigReal tiny = pow10(-(2 * d), d);
    BigReal corner = cur.back(), corner_prev = cur.back();
    for (int col = 1; static_cast<long>(cur.size()) > 2; ++col) {
        std::vector<BigReal> next;
        next.reserve(cur.size() - 1);
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            BigReal diff = cur[i + 1] - cur[i];
            if (abs(diff) < tiny) diff = tiny;
            next.push_back(prev[i + 1] + 1L / diff);
        }
        prev = std::move(cur);
        cur = std::move(next);
        if (col % 2 == 0) {
            corner_prev = corner;
            corner = cur.back();
        }
    }
    return {corner.with_digits(d0), abs(corner - corner_prev).with_digits(d0)};
}

ExtrapolatedLimit extrapolate_limit(const std::function<BigReal(long)>& seq, long k_max,
                                    int points) {
    if (k_max < (1L << (points - 1)))
        points = 1;
    while (points > 1 && (k_max >> (points - 1)) < 4) --points;

    std::vector<long> ks(points);
    std::vector<BigReal> row;
    for (int i = 0; i < points; ++i) ks[i] = k_max >> (points - 1 - i);
    for (int i = 0; i < points; ++i) row.push_back(seq(ks[i]));
    Digits d = row.front().digits();

    if (points >= 3) {
        BigReal d1 = abs(row[points - 1] - row[points - 2]);
        BigReal d0 = abs(row[points - 2] - row[points - 3]);
        if (d1 > d0 * 4L && d1 > pow10(-(d - 4), d))
            throw std::domain_error("extrapolate_limit: sequence is not settling");
    }

    // Neville tableau in the variable 1/k, evaluated at 0.
    std::vector<BigReal> x;
    for (int i = 0; i < points; ++i) x.push_back(1L / BigReal(ks[i], d));
    BigReal corner_prev = row.back();
    BigReal est(0L, d);
    for (int m = 1; m < points; ++m) {
        for (int i = points - 1; i >= m; --i)
            row[i] = (x[i] * row[i - 1] - x[i - m] * row[i]) / (x[i] - x[i - m]);
        if (m == points - 1)
            est = abs(row.back() - corner_prev);
        else
            corner_prev = row.back();
    }
    return {row[points - 1], est};
}

}  // namespace bdz
