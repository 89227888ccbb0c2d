#include "spoofscan/membership.hpp"

#include <array>
#include <utility>

#include "spoofscan/errors.hpp"

namespace spoofscan {

namespace {

constexpr std::array<std::pair<ProductClass, std::string_view>, 4> kClassNames{{
    {ProductClass::Unit, "UNIT"},
    {ProductClass::PerfectCandidate, "PERFECT_CANDIDATE"},
    {ProductClass::OddSpoof, "ODD_SPOOF"},
    {ProductClass::EvenSpoof, "EVEN_SPOOF"},
}};

void check_inputs(u64 n, u64 sigma_n) {
  if ((n & 1) == 0) throw DomainError("membership: n must be odd and positive");
  if (sigma_n == 0) throw DomainError("membership: sigma(n) must be positive");
}

}  // namespace

std::string_view to_string(ProductClass c) noexcept {
  for (const auto& [value, name] : kClassNames) {
    if (value == c) return name;
  }
  return "?";
}

std::optional<ProductClass> parse_product_class(std::string_view text) noexcept {
  for (const auto& [value, name] : kClassNames) {
    if (name == text) return value;
  }
  return std::nullopt;
}

std::optional<u64> check_membership(u64 n, u64 sigma_n) {
  check_inputs(n, sigma_n);
  const u128 twice_n = static_cast<u128>(n) * 2;
  if (sigma_n >= twice_n) return std::nullopt;
  const u64 d = static_cast<u64>(twice_n - sigma_n);
  if (sigma_n % d != 0) return std::nullopt;
  return sigma_n / d;
}

std::optional<u64> check_membership_fraction(u64 n, u64 sigma_n) {
  check_inputs(n, sigma_n);
  if (n > (~u64{0} >> 1)) throw RangeError("membership: 2n exceeds 64 bits");
  const ReducedFraction m = reduce(sigma_n, 2 * n);
  if (m.den > m.num && m.den - m.num == 1) return m.num;
  return std::nullopt;
}

bool satisfies_identity(u64 n, u64 sigma_n, u64 x) {
  const auto lhs = checked_mul(static_cast<u128>(n) * 2, static_cast<u128>(x));
  const auto rhs = checked_mul(static_cast<u128>(sigma_n), static_cast<u128>(x) + 1);
  if (!lhs || !rhs) throw RangeError("membership identity overflows 128 bits");
  return *lhs == *rhs;
}

ProductClass classify_witness(u64 x) {
  if (x == 0) throw DomainError("classify_witness: x must be positive");
  if (x == 1) return ProductClass::Unit;
  if ((x & 1) == 0) return ProductClass::EvenSpoof;
  return is_prime(x) ? ProductClass::PerfectCandidate : ProductClass::OddSpoof;
}

std::vector<MemberRecord> membership_bruteforce(u64 limit) {
  std::vector<MemberRecord> out;
  for (u64 n = 1; n <= limit; n += 2) {
    if (const auto x = check_membership(n, sigma_single(n))) out.push_back(make_record(n, *x));
  }
  return out;
}

}  // namespace spoofscan
