#include "spoofscan/arith.hpp"

#include <algorithm>
#include <charconv>

#include "spoofscan/errors.hpp"

namespace spoofscan {

ReducedFraction reduce(u64 numerator, u64 denominator) {
  if (denominator == 0) throw DomainError("reduce: zero denominator");
  const u64 g = gcd(numerator, denominator);
  return {numerator / g, denominator / g};
}

u64 isqrt(u64 n) noexcept {
  if (n < 2) return n;
  // The double estimate is within a few units; fix up with exact 128-bit checks.
  u64 r = static_cast<u64>(__builtin_sqrt(static_cast<double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<u64> sieve_primes(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  // composite[i] describes 2i + 1.
  const u64 slots = (limit - 1) / 2 + 1;
  std::vector<bool> composite(slots, false);
  for (u64 i = 1; i < slots; ++i) {
    if (composite[i]) continue;
    const u64 p = 2 * i + 1;
    primes.push_back(p);
    if (p > limit / p) continue;
    for (u64 j = (p * p) / 2; j < slots; j += p) composite[j] = true;
  }
  return primes;
}

namespace {

u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr u64 kWitnessBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 p : kWitnessBases) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;

  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnessBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(u64 n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  std::vector<PrimePower> out;
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel.
  for (u64 p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

u64 sigma_single(u64 n) {
  if (n == 0) throw DomainError("sigma: n must be positive");
  u128 sigma = 1;
  for (const auto& [p, e] : factorize(n)) {
    u128 term = 1;
    u128 power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      term += power;
    }
    const auto next = checked_mul(sigma, term);
    if (!next || *next > ~u64{0}) throw RangeError("sigma: result exceeds 64 bits");
    sigma = *next;
  }
  return static_cast<u64>(sigma);
}

std::string to_decimal(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::optional<u64> parse_u64(std::string_view text) noexcept {
  if (text.empty()) return std::nullopt;
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

}  // namespace spoofscan
