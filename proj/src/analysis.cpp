#include "spoofscan/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "spoofscan/errors.hpp"

namespace spoofscan {

namespace {

u64 pow10(int k) {
  u64 v = 1;
  for (int i = 0; i < k; ++i) v *= 10;
  return v;
}

}  // namespace

std::vector<DecadeRow> decade_counts(std::span<const u64> members, int k_max) {
  if (k_max < 1 || k_max > 19) throw DomainError("decade_counts: k_max must be in 1..19");
  if (!members.empty() && members.back() > pow10(k_max))
    throw RangeError("decade_counts: member " + std::to_string(members.back()) + " exceeds 10^" +
                     std::to_string(k_max));
  std::vector<DecadeRow> rows;
  u64 previous = 0;
  for (int k = 1; k <= k_max; ++k) {
    const auto end = std::upper_bound(members.begin(), members.end(), pow10(k));
    const u64 cumulative = static_cast<u64>(end - members.begin());
    rows.push_back({k, cumulative, cumulative - previous});
    previous = cumulative;
  }
  return rows;
}

u64 Histogram::total() const noexcept {
  u64 sum = 0;
  for (u64 c : counts) sum += c;
  return sum;
}

u64 Histogram::count_for(u64 label) const noexcept {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return counts[i];
  }
  return 0;
}

Histogram residue_histogram(std::span<const u64> members, u64 modulus) {
  if (modulus < 2) throw DomainError("residue_histogram: modulus must be >= 2");
  const bool odd_only = modulus % 2 == 0;
  Histogram h;
  std::vector<u64> by_residue(modulus, 0);
  for (u64 n : members) ++by_residue[n % modulus];
  for (u64 r = 0; r < modulus; ++r) {
    if (odd_only && r % 2 == 0) {
      if (by_residue[r] != 0) throw DomainError("residue_histogram: even member present");
      continue;
    }
    h.labels.push_back(r);
    h.counts.push_back(by_residue[r]);
  }
  return h;
}

Histogram ending_digit_histogram(std::span<const u64> members) {
  Histogram h{{1, 3, 5, 7, 9}, {0, 0, 0, 0, 0}};
  for (u64 n : members) {
    if (n % 2 == 0) throw DomainError("ending_digit_histogram: even member " + std::to_string(n));
    ++h.counts[(n % 10) / 2];
  }
  return h;
}

std::vector<DensityPoint> density_series(std::span<const u64> members, u64 limit) {
  std::vector<DensityPoint> out;
  out.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] == 0 || members[i] > limit) throw DomainError("density_series: member out of range");
    if (i > 0 && members[i] <= members[i - 1]) throw DomainError("density_series: members not ascending");
    out.push_back({members[i], i + 1});
  }
  return out;
}

std::string format_ratio(u64 num, u64 den, int digits) {
  if (den == 0) throw DomainError("format_ratio: zero denominator");
  if (digits < 1) throw DomainError("format_ratio: need at least one digit");
  if (num == 0) return "0";

  // All decimal digits of num/den; the point sits after int_len of them.
  std::string d = std::to_string(num / den);
  std::size_t int_len = d.size();
  u64 rem = num % den;
  const std::size_t first = d.find_first_not_of('0');
  std::size_t lead = first == std::string::npos ? std::string::npos : first;
  for (;;) {
    if (lead != std::string::npos && d.size() > lead + static_cast<std::size_t>(digits)) break;
    const u128 scaled = static_cast<u128>(rem) * 10;
    d.push_back(static_cast<char>('0' + static_cast<int>(scaled / den)));
    rem = static_cast<u64>(scaled % den);
    if (lead == std::string::npos && d.back() != '0') lead = d.size() - 1;
  }

  // Round half-up at position `cut`, zero everything after it.
  const std::size_t cut = lead + static_cast<std::size_t>(digits);
  bool carry = d[cut] >= '5';
  std::fill(d.begin() + static_cast<std::ptrdiff_t>(cut), d.end(), '0');
  for (std::size_t i = cut; carry && i-- > 0;) {
    if (d[i] == '9') {
      d[i] = '0';
    } else {
      ++d[i];
      carry = false;
    }
  }
  if (carry) {
    d.insert(d.begin(), '1');
    ++int_len;
  }

  std::string integer = d.substr(0, int_len);
  integer.erase(0, std::min(integer.find_first_not_of('0'), integer.size() - 1));
  std::string fraction = d.substr(int_len);
  while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
  return fraction.empty() ? integer : integer + "." + fraction;
}

DensityFit fit_alpha(std::span<const FitPoint> points) {
  double cross = 0;
  double squares = 0;
  DensityFit fit;
  for (const auto& p : points) {
    if (!(p.k >= 2)) continue;
    const double l = std::log(p.k);
    cross += p.count * l;
    squares += l * l;
    ++fit.points_used;
  }
  if (fit.points_used == 0) throw DomainError("fit_alpha: need at least one point with k >= 2");
  fit.alpha = cross / squares;
  for (const auto& p : points) {
    if (!(p.k >= 2)) continue;
    const double r = p.count - fit.alpha * std::log(p.k);
    fit.residual_sum_squares += r * r;
  }
  return fit;
}

std::vector<FitPoint> member_points(std::span<const u64> members) {
  std::vector<FitPoint> out;
  out.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    out.push_back({static_cast<double>(members[i]), static_cast<double>(i + 1)});
  return out;
}

std::vector<FitPoint> decade_points(std::span<const DecadeRow> rows) {
  std::vector<FitPoint> out;
  for (const auto& r : rows) out.push_back({std::pow(10.0, r.k), static_cast<double>(r.cumulative)});
  return out;
}

SchnirelmannBound schnirelmann_glb(std::span<const u64> members, u64 limit) {
  if (limit < 1) throw DomainError("schnirelmann_glb: limit must be >= 1");
  // pi_S is flat between members, so pi_S(n)/n is smallest just before the
  // next member (or at limit). Below the first member the ratio is 0.
  const auto in_range = std::upper_bound(members.begin(), members.end(), limit) - members.begin();
  if (in_range == 0 || members.front() > 1) return {0, 1};

  SchnirelmannBound best{1, 1};
  auto consider = [&best](u64 count, u64 n) {
    // count/n < best.count/best.n, exact.
    if (static_cast<u128>(count) * best.n < static_cast<u128>(best.count) * n) best = {count, n};
  };
  for (std::ptrdiff_t i = 0; i + 1 < in_range; ++i)
    consider(static_cast<u64>(i + 1), members[static_cast<std::size_t>(i + 1)] - 1);
  consider(static_cast<u64>(in_range), limit);
  return best;
}

void write_decade_csv(std::ostream& out, std::span<const DecadeRow> rows) {
  out << "k,cumulative,delta\n";
  for (const auto& r : rows) out << r.k << ',' << r.cumulative << ',' << r.delta << '\n';
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "label,count\n";
  for (std::size_t i = 0; i < h.labels.size(); ++i) out << h.labels[i] << ',' << h.counts[i] << '\n';
}

void write_density_csv(std::ostream& out, std::span<const DensityPoint> series) {
  out << "n,ratio\n";
  for (const auto& p : series) out << p.n << ',' << format_ratio(p.count, p.n) << '\n';
}

}  // namespace spoofscan
