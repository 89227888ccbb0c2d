#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "spoofscan/arith.hpp"

namespace spoofscan {

// All member lists here are ascending n values of S.

struct DecadeRow {
  int k = 0;
  u64 cumulative = 0;  // pi_S(10^k)
  u64 delta = 0;       // pi_S(10^k) - pi_S(10^(k-1))
};

/// Rows for k = 1..k_max (k_max <= 19). RangeError if a member exceeds
/// 10^k_max.
std::vector<DecadeRow> decade_counts(std::span<const u64> members, int k_max);

struct Histogram {
  std::vector<u64> labels;
  std::vector<u64> counts;

  u64 total() const noexcept;
  u64 count_for(u64 label) const noexcept;
};

/// Counts per residue class mod modulus. For an even modulus only odd
/// residues are listed, since every member is odd. DomainError if
/// modulus < 2.
Histogram residue_histogram(std::span<const u64> members, u64 modulus = 8);

/// Counts by last decimal digit over {1, 3, 5, 7, 9}. DomainError on an even
/// member.
Histogram ending_digit_histogram(std::span<const u64> members);

/// pi_S(n) / n at a member n, kept as the exact pair.
struct DensityPoint {
  u64 n = 1;
  u64 count = 1;

  double ratio() const noexcept { return static_cast<double>(count) / static_cast<double>(n); }
};

/// One point per member. DomainError if members are not ascending or a
/// member exceeds limit.
std::vector<DensityPoint> density_series(std::span<const u64> members, u64 limit);

/// Exact decimal expansion of num / den rounded half-up to `digits`
/// significant digits, trailing zeros removed ("0.2", "0.666666666666667").
std::string format_ratio(u64 num, u64 den, int digits = 15);

struct FitPoint {
  double k = 0;
  double count = 0;
};

/// count ~ alpha * ln(k), equivalently density ~ alpha * ln(k) / k.
struct DensityFit {
  double alpha = 0;
  double residual_sum_squares = 0;
  std::size_t points_used = 0;
};

/// Uniform-weight least squares: alpha = sum(c ln k) / sum(ln^2 k). Points
/// with k < 2 carry no information and are skipped; DomainError if none
/// remain.
DensityFit fit_alpha(std::span<const FitPoint> points);

/// (n, pi_S(n)) at every member.
std::vector<FitPoint> member_points(std::span<const u64> members);
/// (10^k, pi_S(10^k)) per decade row.
std::vector<FitPoint> decade_points(std::span<const DecadeRow> rows);

/// min over 1 <= n <= limit of pi_S(n) / n, with the smallest n attaining it.
struct SchnirelmannBound {
  u64 count = 0;
  u64 n = 1;

  double ratio() const noexcept { return static_cast<double>(count) / static_cast<double>(n); }
};

/// members must be complete up to limit (limit >= 1).
SchnirelmannBound schnirelmann_glb(std::span<const u64> members, u64 limit);

void write_decade_csv(std::ostream& out, std::span<const DecadeRow> rows);
void write_histogram_csv(std::ostream& out, const Histogram& h);
void write_density_csv(std::ostream& out, std::span<const DensityPoint> series);

}  // namespace spoofscan
