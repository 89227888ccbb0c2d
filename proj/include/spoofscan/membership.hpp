#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "spoofscan/arith.hpp"

namespace spoofscan {

/// What the product D = n * x is, judged from the witness x alone.
enum class ProductClass {
  Unit,              // x = 1, D = 1
  PerfectCandidate,  // x odd prime: D would be an odd perfect number
  OddSpoof,          // x odd composite: Descartes-type spoof
  EvenSpoof,         // x even
};

std::string_view to_string(ProductClass c) noexcept;
std::optional<ProductClass> parse_product_class(std::string_view text) noexcept;

/// A member n of S with its witness x, where 2n / sigma(n) - 1 = 1 / x.
struct MemberRecord {
  u64 n = 1;
  u64 x = 1;
  ProductClass product_class = ProductClass::Unit;

  friend bool operator==(const MemberRecord&, const MemberRecord&) = default;
};

/// Divisibility form: with d = 2n - sigma(n), n is a member iff d > 0 and
/// d | sigma(n); the witness is sigma(n) / d. n must be odd and sigma_n > 0
/// (DomainError otherwise).
std::optional<u64> check_membership(u64 n, u64 sigma_n);

/// Reduced-fraction form: reduce sigma(n) / 2n to num / den and accept when
/// den - num = 1, witness num. Same contract as check_membership.
std::optional<u64> check_membership_fraction(u64 n, u64 sigma_n);

/// 2 n x == sigma(n) (x + 1), evaluated exactly in 128 bits. Throws
/// RangeError if either side overflows.
bool satisfies_identity(u64 n, u64 sigma_n, u64 x);

/// x = 1 -> Unit, even -> EvenSpoof, odd prime -> PerfectCandidate, odd
/// composite -> OddSpoof. DomainError for x = 0.
ProductClass classify_witness(u64 x);

inline MemberRecord make_record(u64 n, u64 x) { return {n, x, classify_witness(x)}; }

/// Oracle scan over odd n <= limit using trial-division sigma. Slow; meant
/// for limits up to about 1e7.
std::vector<MemberRecord> membership_bruteforce(u64 limit);

}  // namespace spoofscan
