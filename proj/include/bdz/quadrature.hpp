#pragma once

#include <functional>

#include "bdz/bigfloat.hpp"
#include "bdz/series.hpp"

namespace bdz {

// tanh-sinh rule on [a,b]; tolerates integrable endpoint singularities.
// f receives the node x and the distance to the nearer endpoint (computed
// without cancellation, for integrands like x^alpha near 0).
SeriesResult tanh_sinh(const std::function<BigReal(const BigReal&, const BigReal&)>& f,
                       const BigReal& a, const BigReal& b, const BigReal& tol, Digits digits);

// Convenience overload for integrands that only need x.
SeriesResult tanh_sinh(const std::function<BigReal(const BigReal&)>& f, const BigReal& a,
                       const BigReal& b, const BigReal& tol, Digits digits);

// Double-exponential rule on [0, inf) for integrands with (sub)exponential
// decay; the transformed axis is x = exp(t - exp(-t)).  Throws if tail
// samples of |f| fail to shrink.
SeriesResult integrate_semiinfinite(const std::function<BigReal(const BigReal&)>& f,
                                    const BigReal& tol, Digits digits);

// integral_0^inf cos(k t) g(t) dt for smooth g with algebraic decay:
// half-period segmentation plus Levin acceleration of the alternating
// segment series.
SeriesResult integrate_cos_halfline(const std::function<BigReal(const BigReal&)>& g,
                                    const BigReal& k, const BigReal& tol, Digits digits,
                                    int segments = 48);

}  // namespace bdz
