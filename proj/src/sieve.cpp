#include "spoofscan/sieve.hpp"

#include <algorithm>
#include <string>

#include "spoofscan/errors.hpp"

namespace spoofscan {

namespace {

u64 inverse_mod_2_64(u64 p) noexcept {
  // Newton iteration; p * p == 1 mod 8 gives 3 correct bits, doubling each step.
  u64 x = p;
  for (int i = 0; i < 5; ++i) x *= 2 - p * x;
  return x;
}

}  // namespace

SegmentSieve::SegmentSieve(std::span<const u64> primes, std::size_t max_slots)
    : max_slots_(max_slots) {
  primes_.reserve(primes.size());
  for (u64 p : primes) {
    if (p < 3) continue;
    primes_.push_back({p, inverse_mod_2_64(p), ~u64{0} / p});
  }
}

void SegmentSieve::check_prime_coverage(u64 root) const {
  const u64 largest = primes_.empty() ? 2 : primes_.back().p;
  for (u64 q = largest + 1; q <= root; ++q) {
    if ((q & 1) && is_prime(q)) {
      throw ContractError("sigma sieve: prime list is missing " + std::to_string(q) +
                          " (needs every odd prime <= " + std::to_string(root) + ")");
    }
  }
}

std::span<const u64> SegmentSieve::compute(u64 lo, u64 hi) {
  if ((lo & 1) == 0 || lo >= hi || ((hi - lo) & 1))
    throw DomainError("sigma sieve: need odd lo < hi with hi - lo even");
  if (hi > kMaxSieveBound) throw RangeError("sigma sieve: hi exceeds 2^62");
  const std::size_t slots = static_cast<std::size_t>((hi - lo) / 2);
  if (slots > max_slots_) {
    throw SizeError("sigma sieve: span of " + std::to_string(slots) +
                    " odd slots exceeds the maximum of " + std::to_string(max_slots_));
  }
  const u64 root = isqrt(hi - 1);
  check_prime_coverage(root);

  sigma_.assign(slots, 1);
  cofactor_.resize(slots);
  for (std::size_t i = 0; i < slots; ++i) cofactor_[i] = lo + 2 * i;

  u64* const sig = sigma_.data();
  u64* const cof = cofactor_.data();
  for (const auto& [p, inv, max_quot] : primes_) {
    if (p > root) break;
    u64 first = (lo + p - 1) / p * p;
    if ((first & 1) == 0) first += p;
    // Consecutive odd multiples of p are p slots apart.
    for (u64 i = (first - lo) / 2; i < slots; i += p) {
      u64 c = cof[i] * inv;  // exact: p divides the cofactor
      u64 power = p;
      u64 term = 1 + p;
      for (u64 q = c * inv; q <= max_quot; q = c * inv) {
        c = q;
        power *= p;
        term += power;
      }
      cof[i] = c;
      sig[i] *= term;
    }
  }
  // Whatever survives has no prime factor <= sqrt(n), so it is 1 or prime.
  for (std::size_t i = 0; i < slots; ++i) {
    if (cof[i] > 1) sig[i] *= cof[i] + 1;
  }
  return {sigma_.data(), slots};
}

SigmaSegment sigma_segment(u64 lo, u64 hi, std::span<const u64> primes, std::size_t max_slots) {
  if ((lo & 1) == 0 || lo >= hi) throw DomainError("sigma_segment: need odd lo < hi");
  const u64 aligned_hi = ((hi - lo) & 1) ? hi + 1 : hi;
  SegmentSieve sieve(primes, max_slots);
  const auto values = sieve.compute(lo, aligned_hi);
  return {lo, aligned_hi, std::vector<u64>(values.begin(), values.end())};
}

}  // namespace spoofscan
