#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "spoofscan/arith.hpp"
#include "spoofscan/membership.hpp"

namespace spoofscan {

struct QuasiPrimePair {
  u64 base = 2;
  unsigned exponent = 1;

  friend bool operator==(const QuasiPrimePair&, const QuasiPrimePair&) = default;
};

/// Pairs (base, exponent) with base >= 2 and exponent >= 1, in the order
/// given. Bases need not be prime or coprime, and equal bases are kept as
/// separate pairs: {(3,1),(3,1)} and {(3,2)} expand alike but have different
/// spoof sigma.
class QuasiPrimeFactorization {
 public:
  QuasiPrimeFactorization() = default;
  /// DomainError if any base < 2 or exponent < 1.
  explicit QuasiPrimeFactorization(std::vector<QuasiPrimePair> pairs);
  QuasiPrimeFactorization(std::initializer_list<QuasiPrimePair> pairs);

  void append(u64 base, unsigned exponent);

  const std::vector<QuasiPrimePair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  friend bool operator==(const QuasiPrimeFactorization&, const QuasiPrimeFactorization&) = default;

 private:
  static void validate(const QuasiPrimePair& pair);

  std::vector<QuasiPrimePair> pairs_;
};

enum class SpoofClass { Perfect, Abundant, Deficient };

std::string_view to_string(SpoofClass c) noexcept;

/// prod base^exponent. RangeError past 128 bits.
u128 expand(const QuasiPrimeFactorization& x);

/// prod (1 + base + ... + base^exponent), each base treated as if prime.
/// RangeError past 128 bits.
u128 spoof_sigma(const QuasiPrimeFactorization& x);

/// Compares spoof_sigma(x) against 2 * expand(x).
SpoofClass classify_spoof(const QuasiPrimeFactorization& x);

/// Prime factorization of record.n followed by the pair (record.x, 1), so
/// the result expands to D = n x. DomainError for x < 2.
QuasiPrimeFactorization witness_factorization(const MemberRecord& record);

/// Grammar: term ("*" term)*, term = integer ("^" integer)?, ASCII digits,
/// spaces and tabs allowed between tokens. ParseError carries the byte
/// offset; base < 2 or exponent 0 is a DomainError.
QuasiPrimeFactorization parse_factorization(std::string_view text);

/// Canonical text, e.g. "3^2*7^2*22021". Exponent 1 is omitted.
std::string format_factorization(const QuasiPrimeFactorization& x);

}  // namespace spoofscan
