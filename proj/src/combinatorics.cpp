#include "bdz/combinatorics.hpp"

#include <mutex>
#include <stdexcept>

namespace bdz {

mpz_class binomial_exact(long n, long j) {
    if (j < 0 || j > n)
        throw std::invalid_argument("binomial: index out of range");
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    return r;
}

mpq_class binomial_rational(const mpq_class& x, long j) {
    if (j < 0) throw std::invalid_argument("binomial_rational: negative j");
    mpq_class num(1), fact(1);
    for (long i = 0; i < j; ++i) {
        num *= x - i;
        fact *= i + 1;
    }
    mpq_class r = num / fact;
    r.canonicalize();
    return r;
}

namespace {
std::mutex bernoulli_mutex;
std::vector<mpq_class> bernoulli_cache;  // B_0, B_1, ...
}

// Classic recurrence sum_{j<n} C(n+1, j) B_j = 0 with B_1 = -1/2.
mpq_class bernoulli_number(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli_number: negative index");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (bernoulli_cache.empty()) {
        bernoulli_cache.push_back(mpq_class(1));
        bernoulli_cache.push_back(mpq_class(-1, 2));
    }
    while (static_cast<long>(bernoulli_cache.size()) <= n) {
        long m = static_cast<long>(bernoulli_cache.size());
        if (m % 2 == 1 && m > 1) {
            bernoulli_cache.push_back(mpq_class(0));
            continue;
        }
        mpq_class acc(0);
        for (long j = 0; j < m; ++j) {
            mpq_class c(binomial_exact(m + 1, j));
            acc += c * bernoulli_cache[j];
        }
        mpq_class b = -acc / (m + 1);
        b.canonicalize();
        bernoulli_cache.push_back(b);
    }
    return bernoulli_cache[n];
}

mpq_class bernoulli_poly_exact(long n, const mpq_class& x) {
    mpq_class acc(0), xp(1);
    // B_n(x) = sum_j C(n,j) B_{n-j} x^j
    for (long j = 0; j <= n; ++j) {
        acc += mpq_class(binomial_exact(n, j)) * bernoulli_number(n - j) * xp;
        xp *= x;
    }
    acc.canonicalize();
    return acc;
}

BigReal bernoulli_poly(long n, const BigReal& x) {
    Digits d = x.digits();
    BigReal acc(0L, d), xp(1L, d);
    for (long j = 0; j <= n; ++j) {
        mpq_class w = mpq_class(binomial_exact(n, j)) * bernoulli_number(n - j);
        acc += BigReal::from_rational(w, d) * xp;
        xp *= x;
    }
    return acc;
}

namespace {
std::mutex stirling_mutex;
std::vector<std::vector<mpq_class>> stirling_cache;  // row k: s(k, 0..k)
}

mpq_class stirling_first(long k, long l) {
    if (l < 0 || l > k)
        throw std::invalid_argument("stirling_first: index out of range");
    std::lock_guard<std::mutex> lock(stirling_mutex);
    if (stirling_cache.empty())
        stirling_cache.push_back({mpq_class(1)});
    while (static_cast<long>(stirling_cache.size()) <= k) {
        long n = static_cast<long>(stirling_cache.size());  // building row n
        const auto& prev = stirling_cache.back();
        std::vector<mpq_class> row(n + 1, mpq_class(0));
        // s(n, l) = s(n-1, l-1) - (n-1) s(n-1, l)
        for (long l2 = 0; l2 <= n; ++l2) {
            if (l2 > 0) row[l2] += prev[l2 - 1];
            if (l2 <= n - 1) row[l2] -= mpq_class(n - 1) * prev[l2];
        }
        stirling_cache.push_back(std::move(row));
    }
    return stirling_cache[k][l];
}

template <class T>
static T bell_impl(std::span<const T> x, const T& one) {
    long j = static_cast<long>(x.size());
    std::vector<T> y;
    y.push_back(one);
    for (long m = 0; m < j; ++m) {
        // Y_{m+1} = sum_{i=0}^{m} C(m, i) Y_{m-i} x_{i+1}
        T acc = y[m] * x[0];
        mpz_class binom(1);
        for (long i = 1; i <= m; ++i) {
            binom = binom * (m - i + 1) / i;
            T w = y[m - i] * x[i];
            acc += w * BigReal::from_integer(binom, one.digits());
        }
        y.push_back(acc);
    }
    return y[j];
}

BigReal complete_bell(std::span<const BigReal> x) {
    if (x.empty()) return BigReal(1L, 30);
    return bell_impl<BigReal>(x, BigReal(1L, x[0].digits()));
}

BigComplex complete_bell(std::span<const BigComplex> x) {
    if (x.empty()) return BigComplex(BigReal(1L, 30));
    return bell_impl<BigComplex>(x, BigComplex(BigReal(1L, x[0].digits())));
}

mpq_class complete_bell_exact(const std::vector<mpq_class>& x) {
    long j = static_cast<long>(x.size());
    std::vector<mpq_class> y{mpq_class(1)};
    for (long m = 0; m < j; ++m) {
        mpq_class acc(0);
        for (long i = 0; i <= m; ++i)
            acc += mpq_class(binomial_exact(m, i)) * y[m - i] * x[i];
        acc.canonicalize();
        y.push_back(acc);
    }
    return y[j];
}

std::vector<int8_t> mobius_sieve(long N) {
    if (N < 1) throw std::invalid_argument("mobius_sieve: N must be >= 1");
    if (N > 100'000'000L)
        throw std::invalid_argument("mobius_sieve: N over the 1e8 cap; use mobius_blocks");
    std::vector<int8_t> mu(N + 1, 0);
    std::vector<int32_t> primes;
    std::vector<bool> composite(N + 1, false);
    mu[1] = 1;
    for (long i = 2; i <= N; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<int32_t>(i));
            mu[i] = -1;
        }
        for (int32_t p : primes) {
            long ip = i * p;
            if (ip > N) break;
            composite[ip] = true;
            if (i % p == 0) {
                mu[ip] = 0;
                break;
            }
            mu[ip] = static_cast<int8_t>(-mu[i]);
        }
    }
    return mu;
}

std::vector<int32_t> small_primes_upto(long limit) {
    std::vector<int32_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> comp(limit + 1, false);
    for (long i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        primes.push_back(static_cast<int32_t>(i));
        for (long m = i * i; m <= limit; m += i) comp[m] = true;
    }
    return primes;
}

void mobius_sieve_block(long lo, long len, const std::vector<int32_t>& primes, int8_t* mu,
                        int64_t* rem) {
    long hi = lo + len;
    for (long i = 0; i < len; ++i) {
        mu[i] = 1;
        rem[i] = lo + i;
    }
    for (int32_t p : primes) {
        if (p >= hi) break;
        long p2 = static_cast<long>(p) * p;
        for (long m = ((lo + p2 - 1) / p2) * p2; m < hi; m += p2) mu[m - lo] = 0;
        for (long m = ((lo + p - 1) / p) * p; m < hi; m += p) {
            long i = m - lo;
            if (mu[i] == 0) {
                while (rem[i] % p == 0) rem[i] /= p;
                continue;
            }
            mu[i] = static_cast<int8_t>(-mu[i]);
            rem[i] /= p;
            while (rem[i] % p == 0) rem[i] /= p;
        }
    }
    for (long i = 0; i < len; ++i)
        if (mu[i] != 0 && rem[i] > 1) mu[i] = static_cast<int8_t>(-mu[i]);
    if (lo <= 1 && hi > 1) mu[1 - lo] = 1;  // mu(1)
}

void mobius_blocks(long N, long block_size,
                   const std::function<void(long, std::span<const int8_t>)>& visit) {
    if (N < 1) throw std::invalid_argument("mobius_blocks: N must be >= 1");
    long root = 1;
    while ((root + 1) * (root + 1) <= N) ++root;
    std::vector<int32_t> primes = small_primes_upto(root);

    std::vector<int8_t> mu(block_size);
    std::vector<int64_t> rem(block_size);
    for (long lo = 1; lo <= N; lo += block_size) {
        long hi = std::min(N + 1, lo + block_size);
        long len = hi - lo;
        mobius_sieve_block(lo, len, primes, mu.data(), rem.data());
        visit(lo, std::span<const int8_t>(mu.data(), static_cast<size_t>(len)));
    }
}

}  // namespace bdz
