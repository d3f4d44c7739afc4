#include "odembed/number_theory.hpp"

#include <numeric>
#include <string>

#include "odembed/errors.hpp"

namespace odembed {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Infeasible,
                "integer overflow: " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

std::uint64_t nth_prime(std::size_t k) {
  if (k == 0) fail_invalid("nth_prime: index is 1-based");
  std::uint64_t candidate = 1;
  while (k > 0) {
    ++candidate;
    if (is_prime(candidate)) --k;
  }
  return candidate;
}

namespace {

// Exponent of prime q in x!.
std::uint64_t legendre(std::uint64_t x, std::uint64_t q) {
  std::uint64_t e = 0;
  while (x > 0) {
    x /= q;
    e += x;
  }
  return e;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

}  // namespace

std::uint64_t binomial_mod(std::uint64_t j, std::uint64_t i, std::uint64_t n) {
  if (n == 0) fail_invalid("binomial_mod: modulus must be positive");
  if (i > j) return 0;
  if (n == 1) return 0;
  std::uint64_t out = 1 % n;
  for (std::uint64_t q = 2; q <= j; ++q) {
    if (!is_prime(q)) continue;
    const std::uint64_t e = legendre(j, q) - legendre(i, q) - legendre(j - i, q);
    for (std::uint64_t t = 0; t < e; ++t) {
      out = mulmod(out, q % n, n);
      if (out == 0) return 0;
    }
  }
  return out;
}

std::uint64_t crt_combine(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2,
                          std::uint64_t m2) {
  if (std::gcd(m1, m2) != 1) {
    fail_invalid("crt_combine: moduli " + std::to_string(m1) + " and " +
                 std::to_string(m2) + " are not coprime");
  }
  const std::uint64_t total = checked_mul(m1, m2);
  // Extended Euclid for the inverse of m1 modulo m2.
  __int128 old_r = static_cast<__int128>(m1 % m2), r = m2;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  // old_r == 1 here (or m2 == 1)
  __int128 inv = m2 == 1 ? 0 : old_s % static_cast<__int128>(m2);
  if (inv < 0) inv += m2;
  __int128 diff = (static_cast<__int128>(r2 % m2) - static_cast<__int128>(r1 % m1)) % m2;
  if (diff < 0) diff += m2;
  const __int128 t = diff * inv % m2;
  const __int128 out = static_cast<__int128>(r1 % m1) + t * m1;
  return static_cast<std::uint64_t>(out % total);
}

}  // namespace odembed
