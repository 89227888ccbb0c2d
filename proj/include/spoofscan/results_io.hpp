#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "spoofscan/arith.hpp"
#include "spoofscan/membership.hpp"

namespace spoofscan {

// Results file v1 (ASCII, LF):
//   #spoofscan v1 limit=<limit>
//   <n>\t<x>\t<CLASS>          one per member, ascending n
//
// Checkpoint file v1: "limit=<v>", "next=<v>", "found=<v>", one per line.

struct ResultsFile {
  u64 limit = 0;
  std::vector<MemberRecord> records;

  std::vector<u64> members() const;
};

struct Checkpoint {
  u64 limit = 0;
  u64 next_lo = 1;  // first odd integer not yet processed
  u64 found_count = 0;

  bool complete() const noexcept { return next_lo > limit; }

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/// One b-file line: "<index> <value>".
struct BFileEntry {
  long long index = 0;
  u64 value = 0;
};

std::string results_header(u64 limit);
std::string format_record(const MemberRecord& record);

/// Parses and validates a results file: header, field syntax, known class
/// names, class consistent with x, n odd and ascending and <= limit.
/// FormatError names the offending line; IoError if unreadable.
ResultsFile parse_results(std::istream& in);
ResultsFile read_results(const std::filesystem::path& path);

void write_results(const std::filesystem::path& path, u64 limit,
                   const std::vector<MemberRecord>& records);

Checkpoint parse_checkpoint(std::istream& in);
Checkpoint read_checkpoint(const std::filesystem::path& path);
/// Writes to a sibling temporary and renames over path.
void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp);

/// OEIS b-file: blank lines and lines starting with '#' are skipped.
std::vector<BFileEntry> parse_bfile(std::istream& in);
std::vector<BFileEntry> read_bfile(const std::filesystem::path& path);

}  // namespace spoofscan
