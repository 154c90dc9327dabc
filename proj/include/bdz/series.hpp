#pragma once

#include <functional>
#include <vector>

#include "bdz/bigfloat.hpp"

namespace bdz {

template <class T>
struct SeriesResultT {
    T value;
    long terms_used = 0;
    BigReal tail_estimate;
    bool converged = false;

    SeriesResultT() : value(), tail_estimate() {}
    explicit SeriesResultT(Digits d) : value(d), tail_estimate(d) {}
};

using SeriesResult = SeriesResultT<BigReal>;
using ComplexSeriesResult = SeriesResultT<BigComplex>;

// Accumulates term(0) + term(1) + ... until `consecutive` successive terms
// fall below tol in magnitude.  Never truncates silently: hitting max_terms
// yields converged = false.
SeriesResult sum_until(const std::function<BigReal(long)>& term, const BigReal& tol,
                       int consecutive, long max_terms = 400000);
ComplexSeriesResult sum_until_complex(const std::function<BigComplex(long)>& term,
                                      const BigReal& tol, int consecutive,
                                      long max_terms = 400000);

// Levin u-transform limit estimate from a signed term sequence.  Heuristic:
// callers are expected to report the raw partial sum alongside.
BigReal accelerate_alternating(const std::vector<BigReal>& terms, int order);

// Levin estimate plus a stability delta (difference of the last two orders).
struct AcceleratedValue {
    BigReal value;
    BigReal stability;
};
AcceleratedValue accelerate_with_stability(const std::vector<BigReal>& terms, int order);

// Wynn epsilon / Shanks diagonal on the partial sums; robust for alternating
// geometric-envelope divergence (Abel-summable tails).
AcceleratedValue wynn_epsilon(const std::vector<BigReal>& terms);

// Neville extrapolation of the partial sums in 1/sqrt(K): the tool for
// monotone tails whose remainder expands in half-integer powers of 1/K.
AcceleratedValue extrapolate_sums_sqrtk(const std::vector<BigReal>& terms, int points = 8);

// Richardson extrapolation of a sequence with an asymptotic expansion in 1/k.
// Samples at k_max, k_max/2, k_max/4, ... (`points` of them).
struct ExtrapolatedLimit {
    BigReal value;
    BigReal error_estimate;
};
ExtrapolatedLimit extrapolate_limit(const std::function<BigReal(long)>& seq, long k_max,
                                    int points = 9);

}  // namespace bdz
