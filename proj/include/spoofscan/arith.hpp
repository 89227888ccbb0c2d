#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spoofscan {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~u128{0};

/// An exact fraction num/den in lowest terms, den >= 1.
struct ReducedFraction {
  u64 num = 0;
  u64 den = 1;

  friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;
};

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// gcd(0, 0) = 0.
constexpr u64 gcd(u64 a, u64 b) noexcept {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Throws DomainError on a zero denominator.
ReducedFraction reduce(u64 numerator, u64 denominator);

/// floor(sqrt(n)), exact for every 64-bit n.
u64 isqrt(u64 n) noexcept;

/// Primes <= limit, ascending. Odd-only Eratosthenes.
std::vector<u64> sieve_primes(u64 limit);

/// Deterministic Miller-Rabin. The bases 2..37 (first twelve primes) have no
/// strong pseudoprime below 3.3e24, which covers every 64-bit input.
bool is_prime(u64 n) noexcept;

/// Prime factorization by trial division, ascending primes. factorize(1) is
/// empty. Cost is O(sqrt of the second-largest prime factor); intended for
/// n <= 1e12 (divisors up to 1e6). Throws DomainError for n = 0.
std::vector<PrimePower> factorize(u64 n);

/// sigma(n) via the multiplicative formula over factorize(n). Same bound as
/// factorize; throws DomainError for n = 0 and RangeError if sigma(n) does
/// not fit 64 bits.
u64 sigma_single(u64 n);

/// a * b, or nullopt on 64-bit overflow.
constexpr std::optional<u64> checked_mul(u64 a, u64 b) noexcept {
  u64 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

constexpr std::optional<u128> checked_mul(u128 a, u128 b) noexcept {
  u128 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

constexpr std::optional<u128> checked_add(u128 a, u128 b) noexcept {
  u128 r = 0;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

/// Plain ASCII decimal.
std::string to_decimal(u128 v);

/// Strict decimal parse of a whole string (digits only, no sign, no
/// whitespace). nullopt on empty input, stray characters or overflow.
std::optional<u64> parse_u64(std::string_view text) noexcept;

}  // namespace spoofscan
