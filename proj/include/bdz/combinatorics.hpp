#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bdz/bigfloat.hpp"

namespace bdz {

// Exact C(n, j); throws if j is out of [0, n].
mpz_class binomial_exact(long n, long j);

// C(x, j) for rational x: x(x-1)...(x-j+1)/j!.
mpq_class binomial_rational(const mpq_class& x, long j);

// Bernoulli number B_n with the B_1 = -1/2 convention.  Cached, thread-safe.
mpq_class bernoulli_number(long n);

// B_n(x) through the exact binomial expansion over bernoulli_number.
BigReal bernoulli_poly(long n, const BigReal& x);
mpq_class bernoulli_poly_exact(long n, const mpq_class& x);

// Signed Stirling numbers of the first kind: falling factorial expansion
// x(x-1)...(x-k+1) = sum_l s(k,l) x^l.  Cached, thread-safe.
mpq_class stirling_first(long k, long l);

// Complete exponential Bell polynomial Y_j(x_1..x_j) via the recurrence
// Y_{j+1} = sum_i C(j,i) Y_{j-i} x_{i+1},  Y_0 = 1.
BigReal complete_bell(std::span<const BigReal> x);
BigComplex complete_bell(std::span<const BigComplex> x);
mpq_class complete_bell_exact(const std::vector<mpq_class>& x);

// Moebius function table mu(1..N) (index 0 unused).  Linear sieve; capped.
std::vector<int8_t> mobius_sieve(long N);

// Streaming block variant for large N: calls visit(lo, values) with values[i]
// holding mu(lo + i), blocks in ascending order.
void mobius_blocks(long N, long block_size,
                   const std::function<void(long, std::span<const int8_t>)>& visit);

// Primes up to `limit` (trial sieve); input to mobius_sieve_block.
std::vector<int32_t> small_primes_upto(long limit);

// Sieve mu over [lo, lo+len); primes must cover sqrt(lo+len-1).  rem is
// caller-provided scratch of the same length.
void mobius_sieve_block(long lo, long len, const std::vector<int32_t>& primes, int8_t* mu,
                        int64_t* rem);

}  // namespace bdz
