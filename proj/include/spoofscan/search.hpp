#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "spoofscan/arith.hpp"
#include "spoofscan/membership.hpp"
#include "spoofscan/results_io.hpp"
#include "spoofscan/sieve.hpp"

namespace spoofscan {

/// Upper bound on SearchConfig::limit. sigma(n) and 2n stay far inside 64
/// bits and the prime table (primes <= ~3.2e7) stays small.
inline constexpr u64 kMaxSearchLimit = 1'000'000'000'000'000ULL;
inline constexpr std::size_t kMinSegmentSlots = 1024;

struct SearchProgress {
  u64 next_lo = 1;
  u64 limit = 0;
  u64 found = 0;
  std::size_t segments_done = 0;
  std::size_t segments_total = 0;
  double elapsed_seconds = 0;
};

using ProgressFn = std::function<void(const SearchProgress&)>;

struct SearchConfig {
  u64 limit = 0;
  std::size_t segment_span = kDefaultSegmentSlots;  // odd slots per segment
  unsigned worker_count = 1;
  std::filesystem::path results_path;
  std::optional<std::filesystem::path> checkpoint_path;
  /// Segments per flush + checkpoint batch.
  std::size_t checkpoint_every = 64;
  /// Stop cleanly once every segment starting below this value is flushed.
  /// Used to simulate an interrupted run.
  std::optional<u64> stop_before;
  ProgressFn progress;
};

/// Throws DomainError describing the first invalid field.
void validate(const SearchConfig& config);

/// Scans every odd n <= limit, writes the results file (and checkpoints, if
/// configured) and returns the members in ascending order. The file is
/// byte-identical for every worker_count and segment_span. With stop_before
/// set the return value and file hold only the flushed prefix.
std::vector<MemberRecord> search_range(const SearchConfig& config);

/// Continues the run recorded in config.checkpoint_path, appending to
/// config.results_path. The limit comes from the checkpoint; config.limit
/// must be 0 or equal to it. Raises IntegrityError if the results file does
/// not match the checkpoint. A completed checkpoint is a no-op. Returns the
/// full member list (existing and new).
std::vector<MemberRecord> resume(const SearchConfig& config);

/// Members of a sigma segment, ascending. Pure; used by the workers.
std::vector<MemberRecord> scan_segment(const SigmaSegment& segment);

}  // namespace spoofscan
