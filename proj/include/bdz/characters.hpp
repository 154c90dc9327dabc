#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "bdz/bigfloat.hpp"

namespace bdz {

// Dirichlet character mod q, stored as an exponent vector on fixed generators
// of the unit group.  Values are roots of unity, materialized lazily.
class DirichletCharacter {
public:
    long modulus() const { return q_; }
    long order() const { return order_; }
    long index() const { return index_; }
    bool is_principal() const;
    const std::vector<long>& exponents() const { return exps_; }

    // Rotation angle of chi(n) as an exact fraction of a full turn, or
    // nullopt when gcd(n, q) > 1 (chi(n) = 0).
    std::optional<mpq_class> theta(long n) const;
    BigComplex value(long n, Digits digits) const;
    bool is_real() const;

private:
    friend std::vector<DirichletCharacter> characters_mod(long q);
    long q_ = 1;
    long index_ = 0;
    long order_ = 1;
    std::vector<long> exps_;          // c_i on generator i
    std::vector<long> gen_orders_;    // d_i
    std::vector<long> dlog_flat_;     // residue -> exponent tuple, flattened; -1 for non-units
};

// All phi(q) characters mod q, principal character first.  Cached per q.
std::vector<DirichletCharacter> characters_mod(long q);

// L(s, chi) = q^-s sum_{r=1}^{q} chi(r) zeta(s, r/q).
BigComplex dirichlet_l(const BigComplex& s, const DirichletCharacter& chi, Digits digits);

long euler_phi(long q);

}  // namespace bdz
