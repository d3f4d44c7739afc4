#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace odembed {

/// Multiplication that throws on 64-bit overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::size_t exponent);

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::vector<std::uint64_t> distinct_primes(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

/// k-th prime, 1-based (nth_prime(1) == 2).
std::uint64_t nth_prime(std::size_t k);

/// C(j, i) mod n computed from the prime-exponent (Legendre) formula, so no
/// intermediate value ever exceeds n^2.
std::uint64_t binomial_mod(std::uint64_t j, std::uint64_t i, std::uint64_t n);

/// Least r in [0, m1*m2) with r = r1 (mod m1), r = r2 (mod m2); gcd(m1,m2) = 1.
std::uint64_t crt_combine(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2,
                          std::uint64_t m2);

}  // namespace odembed
