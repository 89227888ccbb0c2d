#include <doctest.h>

#include <future>
#include <random>

#include "oracles.hpp"
#include "spoofscan/arith.hpp"
#include "spoofscan/errors.hpp"
#include "spoofscan/sieve.hpp"

using namespace spoofscan;

TEST_CASE("sigma_segment examples") {
  const auto small = sigma_segment(1, 11, sieve_primes(3));
  CHECK(small.lo == 1);
  CHECK(small.hi == 11);
  CHECK(small.values == std::vector<u64>{1, 4, 6, 8, 13});

  CHECK(sigma_segment(9018009, 9018011, sieve_primes(3003)).values == std::vector<u64>{18035199});
  CHECK(sigma_segment(3, 5, sieve_primes(1)).values == std::vector<u64>{4});
}

TEST_CASE("sigma_segment accepts an even hi") {
  const auto seg = sigma_segment(1, 10, sieve_primes(3));
  CHECK(seg.hi == 11);
  CHECK(seg.values.size() == 5);
  CHECK(seg.number_at(4) == 9);
}

TEST_CASE("sigma_segment errors") {
  const auto primes = sieve_primes(1000);
  CHECK_THROWS_AS(sigma_segment(2, 10, primes), DomainError);
  CHECK_THROWS_AS(sigma_segment(11, 11, primes), DomainError);
  CHECK_THROWS_AS(sigma_segment(11, 5, primes), DomainError);
  // sqrt(10^6) = 1000; 1009 etc. are not needed but 997 is.
  CHECK_THROWS_AS(sigma_segment(999001, 1000001, sieve_primes(990)), ContractError);
  CHECK_NOTHROW(sigma_segment(999001, 1000001, sieve_primes(997)));
  CHECK_THROWS_AS(sigma_segment(1, 4097, primes, 1024), SizeError);
  CHECK_NOTHROW(sigma_segment(1, 2049, primes, 1024));
  CHECK_THROWS_AS(sigma_segment(kMaxSieveBound + 1, kMaxSieveBound + 3, primes), RangeError);
}

TEST_CASE("segmented sigma equals the divisor-sum oracle for odd n <= 10^6") {
  constexpr u64 kLimit = 1000000;
  const auto table = oracle::additive_sigma_table(kLimit + 1);
  const auto primes = sieve_primes(1001);
  for (std::size_t span : {std::size_t{1} << 10, std::size_t{1} << 16, std::size_t{1} << 20}) {
    CAPTURE(span);
    SegmentSieve sieve(primes, span);
    for (u64 lo = 1; lo <= kLimit; lo += 2 * span) {
      const u64 hi = std::min<u64>(lo + 2 * span, kLimit + 1);
      const auto values = sieve.compute(lo, hi);
      for (std::size_t i = 0; i < values.size(); ++i) REQUIRE(values[i] == table[lo + 2 * i]);
    }
  }
  // sigma_single agrees on the same range.
  for (u64 n = 1; n <= kLimit; n += 2) REQUIRE(sigma_single(n) == table[n]);
}

TEST_CASE("segmented sigma near 10^12") {
  const u64 lo = 1000000000000ULL - 1999;
  const auto seg = sigma_segment(lo, 1000000000001ULL, sieve_primes(1000000));
  REQUIRE(seg.values.size() == 1000);
  for (std::size_t i = 0; i < seg.values.size(); ++i) REQUIRE(seg.values[i] == sigma_single(lo + 2 * i));
  for (std::size_t i = 0; i < seg.values.size(); i += 97) CHECK(seg.values[i] == oracle::divisor_sum(lo + 2 * i));
}

TEST_CASE("adjacent segments concatenate to the whole") {
  const auto primes = sieve_primes(2000);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const u64 lo = 2 * (rng() % 1000000) + 1;
    const u64 hi = lo + 2 * (rng() % 20000 + 2);
    const u64 mid = lo + 2 * (rng() % ((hi - lo) / 2 - 1) + 1);
    const auto whole = sigma_segment(lo, hi, primes).values;
    auto left = sigma_segment(lo, mid, primes).values;
    const auto right = sigma_segment(mid, hi, primes).values;
    left.insert(left.end(), right.begin(), right.end());
    REQUIRE(left == whole);
  }
}

TEST_CASE("concurrent segments match serial ones") {
  const auto primes = sieve_primes(4000);
  constexpr u64 kWidth = 2 * 4096;
  std::vector<std::vector<u64>> serial;
  for (int i = 0; i < 8; ++i) serial.push_back(sigma_segment(1 + kWidth * i, 1 + kWidth * (i + 1), primes).values);

  std::vector<std::future<std::vector<u64>>> futures;
  for (int i = 0; i < 8; ++i) {
    futures.push_back(std::async(std::launch::async, [&primes, i] {
      return sigma_segment(1 + kWidth * i, 1 + kWidth * (i + 1), primes).values;
    }));
  }
  for (int i = 0; i < 8; ++i) CHECK(futures[static_cast<std::size_t>(i)].get() == serial[static_cast<std::size_t>(i)]);
}

TEST_CASE("SegmentSieve reuse gives identical results") {
  SegmentSieve sieve(sieve_primes(2000), 1 << 12);
  const auto view = sieve.compute(1001, 9001);
  const std::vector<u64> first(view.begin(), view.end());
  sieve.compute(3000001, 3008001);
  const auto again = sieve.compute(1001, 9001);
  CHECK(std::vector<u64>(again.begin(), again.end()) == first);
}
