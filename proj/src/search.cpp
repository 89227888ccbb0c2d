#include "spoofscan/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <thread>

#include "spoofscan/errors.hpp"

namespace spoofscan {

namespace {

using Clock = std::chrono::steady_clock;

void collect_members(u64 lo, std::span<const u64> sigma, std::vector<MemberRecord>& out) {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const u64 n = lo + 2 * i;
    if (const auto x = check_membership(n, sigma[i])) out.push_back(make_record(n, *x));
  }
}

// Segments tile [start, end) over odd integers; end is odd-aligned.
struct SegmentPlan {
  u64 start = 1;
  u64 end = 1;
  u64 width = 2;  // integers per segment (2 * span)

  std::size_t count() const noexcept {
    return start >= end ? 0 : static_cast<std::size_t>((end - start + width - 1) / width);
  }
  u64 lo(std::size_t i) const noexcept { return start + width * i; }
  u64 hi(std::size_t i) const noexcept { return std::min(lo(i) + width, end); }
};

class SearchRun {
 public:
  SearchRun(const SearchConfig& config, u64 start, u64 found_before, std::ofstream& out)
      : config_(config), out_(out), found_(found_before), began_(Clock::now()) {
    plan_.start = start;
    plan_.end = (config.limit & 1) ? config.limit + 2 : config.limit + 1;
    plan_.width = 2 * static_cast<u64>(config.segment_span);
    total_ = plan_.count();
    if (config.stop_before) {
      const u64 stop = *config.stop_before;
      std::size_t n = 0;
      while (n < total_ && plan_.lo(n) < stop) ++n;
      total_ = n;
    }
    primes_ = sieve_primes(isqrt(plan_.end) + 1);
  }

  std::vector<MemberRecord> run() {
    if (total_ == 0) {
      report();
      return {};
    }
    if (config_.worker_count <= 1) {
      SegmentSieve sieve(primes_, config_.segment_span);
      for (std::size_t i = 0; i < total_; ++i) flush(i, compute(sieve, i));
    } else {
      run_parallel();
    }
    return std::move(found_records_);
  }

 private:
  std::vector<MemberRecord> compute(SegmentSieve& sieve, std::size_t i) {
    std::vector<MemberRecord> records;
    collect_members(plan_.lo(i), sieve.compute(plan_.lo(i), plan_.hi(i)), records);
    return records;
  }

  void run_parallel() {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::mutex mutex;
    std::condition_variable ready;
    std::map<std::size_t, std::vector<MemberRecord>> pending;
    std::exception_ptr failure;

    auto worker = [&] {
      try {
        SegmentSieve sieve(primes_, config_.segment_span);
        for (std::size_t i = next++; i < total_ && !abort; i = next++) {
          auto records = compute(sieve, i);
          std::lock_guard lock(mutex);
          pending.emplace(i, std::move(records));
          ready.notify_one();
        }
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        abort = true;
        ready.notify_one();
      }
    };

    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < config_.worker_count; ++w) workers.emplace_back(worker);

    try {
      // In-order writer: completed segments wait in `pending` until their turn.
      for (std::size_t i = 0; i < total_; ++i) {
        std::vector<MemberRecord> records;
        {
          std::unique_lock lock(mutex);
          ready.wait(lock, [&] { return failure || pending.contains(i); });
          if (failure) break;
          auto node = pending.extract(i);
          records = std::move(node.mapped());
        }
        flush(i, std::move(records));
      }
    } catch (...) {
      abort = true;
      workers.clear();
      throw;
    }
    workers.clear();
    if (failure) std::rethrow_exception(failure);
  }

  void flush(std::size_t i, std::vector<MemberRecord> records) {
    for (const auto& r : records) out_ << format_record(r);
    found_ += records.size();
    found_records_.insert(found_records_.end(), records.begin(), records.end());
    const bool batch_end = (i + 1) % std::max<std::size_t>(config_.checkpoint_every, 1) == 0;
    if (batch_end || i + 1 == total_) {
      out_.flush();
      if (!out_) throw IoError("write failed", config_.results_path);
      if (config_.checkpoint_path)
        write_checkpoint(*config_.checkpoint_path, {config_.limit, plan_.hi(i), found_});
      done_ = i + 1;
      report();
    }
  }

  void report() const {
    if (!config_.progress) return;
    SearchProgress p;
    p.next_lo = done_ ? plan_.hi(done_ - 1) : plan_.start;
    p.limit = config_.limit;
    p.found = found_;
    p.segments_done = done_;
    p.segments_total = total_;
    p.elapsed_seconds = std::chrono::duration<double>(Clock::now() - began_).count();
    config_.progress(p);
  }

  const SearchConfig& config_;
  std::ofstream& out_;
  SegmentPlan plan_;
  std::size_t total_ = 0;
  std::size_t done_ = 0;
  u64 found_ = 0;
  std::vector<u64> primes_;
  std::vector<MemberRecord> found_records_;
  Clock::time_point began_;
};

}  // namespace

void validate(const SearchConfig& config) {
  if (config.limit < 1) throw DomainError("search: limit must be >= 1");
  if (config.limit > kMaxSearchLimit) throw DomainError("search: limit exceeds 1e15");
  if (config.segment_span < kMinSegmentSlots)
    throw DomainError("search: segment span must be >= 1024 odd slots");
  if (config.segment_span > kMaxSegmentSlots)
    throw DomainError("search: segment span must be <= 2^26 odd slots");
  if (config.worker_count < 1) throw DomainError("search: worker count must be >= 1");
  if (config.results_path.empty()) throw DomainError("search: results path is required");
}

std::vector<MemberRecord> scan_segment(const SigmaSegment& segment) {
  std::vector<MemberRecord> out;
  collect_members(segment.lo, segment.values, out);
  return out;
}

std::vector<MemberRecord> search_range(const SearchConfig& config) {
  validate(config);
  std::ofstream out(config.results_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing", config.results_path);
  out << results_header(config.limit);
  out.flush();
  if (!out) throw IoError("write failed", config.results_path);
  if (config.checkpoint_path) write_checkpoint(*config.checkpoint_path, {config.limit, 1, 0});
  return SearchRun(config, 1, 0, out).run();
}

std::vector<MemberRecord> resume(const SearchConfig& config) {
  if (!config.checkpoint_path) throw DomainError("resume: checkpoint path is required");
  const Checkpoint cp = read_checkpoint(*config.checkpoint_path);
  if (config.limit != 0 && config.limit != cp.limit) {
    throw IntegrityError("resume: checkpoint limit " + std::to_string(cp.limit) +
                         " differs from requested limit " + std::to_string(config.limit));
  }
  SearchConfig effective = config;
  effective.limit = cp.limit;
  validate(effective);

  ResultsFile existing;
  try {
    existing = read_results(config.results_path);
  } catch (const FormatError& e) {
    throw IntegrityError(std::string("resume: results file is malformed: ") + e.what());
  }
  if (existing.limit != cp.limit) throw IntegrityError("resume: results header limit differs from checkpoint");
  if (existing.records.size() != cp.found_count) {
    throw IntegrityError("resume: checkpoint records " + std::to_string(cp.found_count) +
                         " members but results file holds " + std::to_string(existing.records.size()));
  }
  if (!existing.records.empty() && existing.records.back().n >= cp.next_lo)
    throw IntegrityError("resume: results file extends past the checkpoint");
  if (cp.complete()) return std::move(existing.records);

  std::ofstream out(config.results_path, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot open for appending", config.results_path);
  auto fresh = SearchRun(effective, cp.next_lo, cp.found_count, out).run();
  existing.records.insert(existing.records.end(), fresh.begin(), fresh.end());
  return std::move(existing.records);
}

}  // namespace spoofscan
