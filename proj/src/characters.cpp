#include "bdz/characters.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "bdz/zeta.hpp"

namespace bdz {

namespace {

long pow_mod(long base, long e, long mod) {
    long r = 1 % mod;
    long b = base % mod;
    while (e) {
        if (e & 1) r = static_cast<long>((__int128)r * b % mod);
        b = static_cast<long>((__int128)b * b % mod);
        e >>= 1;
    }
    return r;
}

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

long primitive_root_mod_pp(long p, int e) {
    // smallest primitive root mod p, lifted to p^e
    long phi = p - 1;
    auto fs = factorize(phi);
    long g = 2;
    for (;; ++g) {
        bool ok = true;
        for (auto& [q, _] : fs)
            if (pow_mod(g, phi / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) break;
    }
    if (e == 1) return g;
    long p2 = p * p;
    if (pow_mod(g, p - 1, p2) == 1) g += p;
    return g;
}

struct UnitGroup {
    long q;
    std::vector<long> gens;        // generators mod q
    std::vector<long> orders;      // their orders
    std::vector<long> dlog_flat;   // residue -> flattened exponent tuple (-1 for non-unit)
};

long crt_lift(long residue, long m, long q) {
    // x = residue (mod m), x = 1 (mod q/m)
    long other = q / m;
    for (long x = residue % q; ; x += m) {
        if (x % other == 1 % other) return x % q;
    }
}

UnitGroup build_unit_group(long q) {
    UnitGroup g;
    g.q = q;
    auto fs = factorize(q);
    for (auto& [p, e] : fs) {
        long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e == 2) {
                g.gens.push_back(crt_lift(3, pe, q));
                g.orders.push_back(2);
            } else if (e >= 3) {
                g.gens.push_back(crt_lift(pe - 1, pe, q));  // -1
                g.orders.push_back(2);
                g.gens.push_back(crt_lift(5, pe, q));
                g.orders.push_back(pe / 4);
            }
            // e == 1: trivial component
        } else {
            long root = primitive_root_mod_pp(p, e);
            g.gens.push_back(crt_lift(root, pe, q));
            g.orders.push_back(pe / p * (p - 1));
        }
    }

    // enumerate the full group to build the discrete-log table
    long ncomp = static_cast<long>(g.gens.size());
    g.dlog_flat.assign(q * std::max<long>(1, ncomp), -1);
    if (ncomp == 0) {
        // q in {1, 2}: only the unit 1 (and it has the empty tuple)
        g.dlog_flat.assign(q, -1);
        if (q >= 1) g.dlog_flat[1 % q] = 0;
        return g;
    }
    std::vector<long> tuple(ncomp, 0);
    long total = 1;
    for (long d : g.orders) total *= d;
    long residue = 1;
    std::vector<long> partial(ncomp, 1);
    for (long cnt = 0; cnt < total; ++cnt) {
        residue = 1;
        for (long i = 0; i < ncomp; ++i)
            residue = static_cast<long>((__int128)residue * pow_mod(g.gens[i], tuple[i], q) % q);
        for (long i = 0; i < ncomp; ++i) g.dlog_flat[residue * ncomp + i] = tuple[i];
        // advance tuple
        for (long i = 0; i < ncomp; ++i) {
            if (++tuple[i] < g.orders[i]) break;
            tuple[i] = 0;
        }
    }
    (void)partial;
    return g;
}

std::mutex group_mutex;
std::map<long, UnitGroup> group_cache;

const UnitGroup& unit_group(long q) {
    std::lock_guard<std::mutex> lock(group_mutex);
    auto it = group_cache.find(q);
    if (it == group_cache.end()) it = group_cache.emplace(q, build_unit_group(q)).first;
    return it->second;
}

}  // namespace

long euler_phi(long q) {
    long r = q;
    for (auto& [p, e] : factorize(q)) {
        (void)e;
        r -= r / p;
    }
    return r;
}

bool DirichletCharacter::is_principal() const {
    for (long c : exps_)
        if (c) return false;
    return true;
}

std::optional<mpq_class> DirichletCharacter::theta(long n) const {
    long r = n % q_;
    if (r < 0) r += q_;
    if (q_ == 1) return mpq_class(0);
    if (std::gcd(r, q_) != 1) return std::nullopt;
    long ncomp = static_cast<long>(exps_.size());
    mpq_class t(0);
    for (long i = 0; i < ncomp; ++i) {
        long dl = dlog_flat_[r * ncomp + i];
        t += mpq_class(exps_[i] * dl, gen_orders_[i]);
    }
    t.canonicalize();
    // reduce mod 1
    mpz_class num = t.get_num(), den = t.get_den();
    mpz_class flo;
    mpz_fdiv_q(flo.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    t -= mpq_class(flo);
    t.canonicalize();
    return t;
}

BigComplex DirichletCharacter::value(long n, Digits digits) const {
    auto t = theta(n);
    if (!t) return BigComplex(digits);
    BigReal angle = BigReal::from_rational(*t, digits) * const_pi(digits) * 2L;
    return {cos(angle), sin(angle)};
}

bool DirichletCharacter::is_real() const { return order_ <= 2; }

std::vector<DirichletCharacter> characters_mod(long q) {
    if (q < 1) throw std::invalid_argument("characters_mod: q must be >= 1");
    const UnitGroup& g = unit_group(q);
    long ncomp = static_cast<long>(g.gens.size());
    long total = 1;
    for (long d : g.orders) total *= d;

    std::vector<DirichletCharacter> out;
    std::vector<long> tuple(ncomp, 0);
    for (long idx = 0; idx < total; ++idx) {
        DirichletCharacter chi;
        chi.q_ = q;
        chi.index_ = idx;
        chi.exps_ = tuple;
        chi.gen_orders_ = g.orders;
        chi.dlog_flat_ = g.dlog_flat;
        long ord = 1;
        for (long i = 0; i < ncomp; ++i) {
            long d = g.orders[i] / std::gcd(g.orders[i], tuple[i] == 0 ? g.orders[i] : tuple[i]);
            ord = std::lcm(ord, d);
        }
        chi.order_ = ord;
        out.push_back(std::move(chi));
        for (long i = 0; i < ncomp; ++i) {
            if (++tuple[i] < g.orders[i]) break;
            tuple[i] = 0;
        }
    }
    return out;
}

BigComplex dirichlet_l(const BigComplex& s, const DirichletCharacter& chi, Digits digits) {
    long q = chi.modulus();
    if (chi.is_principal() && s.im.is_zero() && s.re == 1L)
        throw std::domain_error("dirichlet_l: principal character has a pole at s = 1");
    BigComplex acc(digits);
    for (long r = 1; r <= q; ++r) {
        auto t = chi.theta(r);
        if (!t) continue;
        BigComplex a(BigReal(r, digits) / BigReal(q, digits));
        acc += chi.value(r, digits) * hurwitz_zeta(s, a, digits);
    }
    BigComplex qs = pow(BigComplex(BigReal(q, digits)), s);
    return acc / qs;
}

}  // namespace bdz
