#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spoofscan/arith.hpp"

namespace spoofscan {

inline constexpr std::size_t kDefaultSegmentSlots = std::size_t{1} << 20;
inline constexpr std::size_t kMaxSegmentSlots = std::size_t{1} << 26;
/// Largest hi accepted by the sieve. Keeps sigma(n) < 4n below 2^64 for odd n.
inline constexpr u64 kMaxSieveBound = u64{1} << 62;

/// sigma(n) for every odd n in [lo, hi); values[i] = sigma(lo + 2i).
struct SigmaSegment {
  u64 lo = 1;
  u64 hi = 3;
  std::vector<u64> values;

  std::size_t size() const noexcept { return values.size(); }
  u64 number_at(std::size_t i) const noexcept { return lo + 2 * i; }
};

/// Reusable sigma sieve over odd integers. Holds the shared prime list (with
/// precomputed 2-adic inverses for exact division) and per-instance scratch
/// buffers, so one instance per worker thread.
class SegmentSieve {
 public:
  /// primes must be ascending; 2 is ignored if present. The list is copied.
  explicit SegmentSieve(std::span<const u64> primes, std::size_t max_slots = kMaxSegmentSlots);

  /// Computes sigma over odd n in [lo, hi). The returned span aliases the
  /// internal buffer and is valid until the next call.
  ///
  /// Requires lo odd, lo < hi, hi - lo even, hi <= kMaxSieveBound, and every
  /// odd prime <= isqrt(hi - 1) present in the list (ContractError
  /// otherwise). (hi - lo) / 2 > max_slots raises SizeError.
  std::span<const u64> compute(u64 lo, u64 hi);

  std::size_t max_slots() const noexcept { return max_slots_; }

 private:
  struct OddPrime {
    u64 p;
    u64 inverse;    // p^-1 mod 2^64
    u64 max_quot;   // floor((2^64 - 1) / p)
  };

  void check_prime_coverage(u64 root) const;

  std::vector<OddPrime> primes_;
  std::size_t max_slots_;
  std::vector<u64> sigma_;
  std::vector<u64> cofactor_;
};

/// Single-shot wrapper around SegmentSieve. hi may be even; the segment then
/// ends at the last odd number below it.
SigmaSegment sigma_segment(u64 lo, u64 hi, std::span<const u64> primes,
                           std::size_t max_slots = kMaxSegmentSlots);

}  // namespace spoofscan
