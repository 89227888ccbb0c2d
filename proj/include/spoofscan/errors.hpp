#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

namespace spoofscan {

/// Input outside the mathematical domain of an operation (zero denominator,
/// even n, base < 2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result would not fit the fixed-width type it is computed in.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Caller broke a documented precondition that cannot be checked cheaply up
/// front (e.g. a prime list that does not reach sqrt(hi)).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Syntax error in a factorization expression; offset is a byte index into
/// the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Malformed results, checkpoint or b-file content. line is 1-based, 0 if
/// the problem is not tied to a line.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Checkpoint and results file disagree.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, const std::filesystem::path& path)
      : std::runtime_error(path.string() + ": " + what), path_(path) {}

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace spoofscan
