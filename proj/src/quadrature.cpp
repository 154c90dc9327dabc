#include "bdz/quadrature.hpp"

#include <stdexcept>
#include <vector>

namespace bdz {

namespace {

// One tanh-sinh refinement level: nodes at t = j*h for odd j (level > 0) or
// all j (level 0).  Returns the weighted sum of new nodes.
struct TanhSinhCtx {
    BigReal a, b, half_width, mid, pi_half, tol;
    Digits d;
    const std::function<BigReal(const BigReal&, const BigReal&)>* f;

    BigReal node_sum(const BigReal& h, bool odd_only) const {
        BigReal sum(0L, d);
        BigReal cutoff = tol / 1000L;
        long j = odd_only ? 1 : 0;
        long step = odd_only ? 2 : 1;
        int dead = 0;
        for (; dead < 4; j += step) {
            BigReal t = h * j;
            BigReal u = pi_half * (exp(t) - exp(-t)) / 2L;  // (pi/2) sinh t
            if (u > BigReal(12.0 * static_cast<double>(d) + 70.0, d)) break;
            BigReal eu = exp(u), emu = 1L / eu;
            BigReal ch = (eu + emu) / 2L;
            BigReal w = pi_half * ((exp(t) + exp(-t)) / 2L) / (ch * ch);
            // 1 -+ tanh(u) without cancellation
            BigReal dist = half_width * (2L * emu / (eu + emu));  // to upper end at +t
            BigReal contrib(0L, d);
            {   // node on the + side
                BigReal x = b - dist;
                contrib += (*f)(x, dist);
            }
            if (j != 0) {  // mirrored node on the - side
                BigReal x = a + dist;
                contrib += (*f)(x, dist);
            }
            contrib *= w;
            sum += contrib;
            dead = abs(contrib) * half_width < cutoff ? dead + 1 : 0;
        }
        return sum;
    }
};

}  // namespace

SeriesResult tanh_sinh(const std::function<BigReal(const BigReal&, const BigReal&)>& f,
                       const BigReal& a, const BigReal& b, const BigReal& tol, Digits digits) {
    if (!(tol > 0L)) throw std::invalid_argument("tanh_sinh: tol must be positive");
    TanhSinhCtx ctx{a, b, (b - a) / 2L, (a + b) / 2L, const_pi(digits) / 2L, tol, digits, &f};

    BigReal h(1L, digits);
    BigReal acc = ctx.node_sum(h, false);
    SeriesResult out(digits);
    BigReal prev = acc * h * ctx.half_width;
    for (int level = 1; level <= 14; ++level) {
        h /= 2L;
        acc += ctx.node_sum(h, true);
        BigReal cur = acc * h * ctx.half_width;
        BigReal delta = abs(cur - prev);
        out.value = cur;
        out.terms_used = level;
        out.tail_estimate = delta;
        if (level >= 3 && delta < tol) {
            out.converged = true;
            return out;
        }
        prev = cur;
    }
    return out;
}

SeriesResult tanh_sinh(const std::function<BigReal(const BigReal&)>& f, const BigReal& a,
                       const BigReal& b, const BigReal& tol, Digits digits) {
    return tanh_sinh([&f](const BigReal& x, const BigReal&) { return f(x); }, a, b, tol, digits);
}

SeriesResult integrate_semiinfinite(const std::function<BigReal(const BigReal&)>& f,
                                    const BigReal& tol, Digits digits) {
    if (!(tol > 0L)) throw std::invalid_argument("integrate_semiinfinite: tol must be positive");

    {   // refuse integrands whose tail is not shrinking
        BigReal f1 = abs(f(BigReal(30L, digits)));
        BigReal f2 = abs(f(BigReal(120L, digits)));
        BigReal f3 = abs(f(BigReal(480L, digits)));
        bool shrinking = (f3 < f2 && f2 < f1) || (f3 < tol && f2 < tol);
        if (!shrinking)
            throw std::domain_error("integrate_semiinfinite: integrand does not decay");
    }

    const Digits d = digits;
    BigReal cutoff = tol / 1000L;
    auto node_sum = [&](const BigReal& h, bool odd_only) {
        BigReal sum(0L, d);
        // positive t: x = exp(t - exp(-t)) grows like e^t
        for (long j = odd_only ? 1 : 0, step = odd_only ? 2 : 1, dead = 0; dead < 4; j += step) {
            BigReal t = h * j;
            BigReal emt = exp(-t);
            BigReal x = exp(t - emt);
            if (x > BigReal(2.4 * static_cast<double>(d) + 60.0, d) * 4L) break;
            BigReal w = x * (1L + emt);
            BigReal contrib = w * f(x);
            sum += contrib;
            dead = abs(contrib) < cutoff ? dead + 1 : 0;
        }
        // negative t: x collapses to 0 double-exponentially
        for (long j = odd_only ? 1 : 0, step = odd_only ? 2 : 1, dead = 0; dead < 4; j += step) {
            if (j == 0) continue;  // j = 0 already counted above
            BigReal t = -h * j;
            BigReal emt = exp(-t);
            if (emt > BigReal(23.0 * static_cast<double>(d) + 120.0, d)) break;
            BigReal x = exp(t - emt);
            BigReal w = x * (1L + emt);
            BigReal contrib = w * f(x);
            sum += contrib;
            dead = abs(contrib) < cutoff ? dead + 1 : 0;
        }
        return sum;
    };

    BigReal h(1L, d);
    BigReal acc = node_sum(h, false);
    BigReal prev = acc * h;
    SeriesResult out(d);
    for (int level = 1; level <= 14; ++level) {
        h /= 2L;
        acc += node_sum(h, true);
        BigReal cur = acc * h;
        BigReal delta = abs(cur - prev);
        out.value = cur;
        out.terms_used = level;
        out.tail_estimate = delta;
        if (level >= 3 && delta < tol) {
            out.converged = true;
            return out;
        }
        prev = cur;
    }
    return out;
}

SeriesResult integrate_cos_halfline(const std::function<BigReal(const BigReal&)>& g,
                                    const BigReal& k, const BigReal& tol, Digits digits,
                                    int segments) {
    BigReal pi = const_pi(digits);
    BigReal half = pi / k / 2L;
    auto integrand = [&](const BigReal& t) { return cos(k * t) * g(t); };

    std::vector<BigReal> terms;
    BigReal lo(0L, digits);
    BigReal seg_tol = tol / 100L;
    BigReal acc(0L, digits);
    for (int j = 0; j < segments; ++j) {
        BigReal hi = half * (2L * j + 1);
        SeriesResult part = tanh_sinh(std::function<BigReal(const BigReal&)>(integrand), lo, hi,
                                      seg_tol, digits);
        terms.push_back(part.value);
        acc += part.value;
        lo = hi;
    }
    AcceleratedValue a = accelerate_with_stability(terms, std::min(24, segments / 2));
    SeriesResult out(digits);
    out.value = a.value;
    out.terms_used = segments;
    out.tail_estimate = a.stability;
    out.converged = a.stability < tol;
    return out;
}

}  // namespace bdz
