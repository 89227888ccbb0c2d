#include "spoofscan/spoof.hpp"

#include <cctype>
#include <limits>

#include "spoofscan/errors.hpp"

namespace spoofscan {

QuasiPrimeFactorization::QuasiPrimeFactorization(std::vector<QuasiPrimePair> pairs)
    : pairs_(std::move(pairs)) {
  for (const auto& p : pairs_) validate(p);
}

QuasiPrimeFactorization::QuasiPrimeFactorization(std::initializer_list<QuasiPrimePair> pairs)
    : QuasiPrimeFactorization(std::vector<QuasiPrimePair>(pairs)) {}

void QuasiPrimeFactorization::append(u64 base, unsigned exponent) {
  const QuasiPrimePair pair{base, exponent};
  validate(pair);
  pairs_.push_back(pair);
}

void QuasiPrimeFactorization::validate(const QuasiPrimePair& pair) {
  if (pair.base < 2) throw DomainError("quasi-prime base must be >= 2");
  if (pair.exponent < 1) throw DomainError("quasi-prime exponent must be >= 1");
}

std::string_view to_string(SpoofClass c) noexcept {
  switch (c) {
    case SpoofClass::Perfect:
      return "SPOOF_PERFECT";
    case SpoofClass::Abundant:
      return "SPOOF_ABUNDANT";
    case SpoofClass::Deficient:
      return "SPOOF_DEFICIENT";
  }
  return "?";
}

u128 expand(const QuasiPrimeFactorization& x) {
  u128 product = 1;
  for (const auto& [base, exponent] : x.pairs()) {
    for (unsigned i = 0; i < exponent; ++i) {
      const auto next = checked_mul(product, static_cast<u128>(base));
      if (!next) throw RangeError("expansion exceeds 128 bits");
      product = *next;
    }
  }
  return product;
}

u128 spoof_sigma(const QuasiPrimeFactorization& x) {
  u128 product = 1;
  for (const auto& [base, exponent] : x.pairs()) {
    // Horner: 1 + b(1 + b(1 + ...)).
    u128 term = 1;
    for (unsigned i = 0; i < exponent; ++i) {
      const auto scaled = checked_mul(term, static_cast<u128>(base));
      const auto next = scaled ? checked_add(*scaled, 1) : std::nullopt;
      if (!next) throw RangeError("spoof sigma exceeds 128 bits");
      term = *next;
    }
    const auto next = checked_mul(product, term);
    if (!next) throw RangeError("spoof sigma exceeds 128 bits");
    product = *next;
  }
  return product;
}

SpoofClass classify_spoof(const QuasiPrimeFactorization& x) {
  const u128 n = expand(x);
  const u128 s = spoof_sigma(x);
  // 2n past 128 bits is strictly above any representable spoof sigma.
  if (n > kU128Max / 2) return SpoofClass::Deficient;
  const u128 twice = 2 * n;
  if (s == twice) return SpoofClass::Perfect;
  return s > twice ? SpoofClass::Abundant : SpoofClass::Deficient;
}

QuasiPrimeFactorization witness_factorization(const MemberRecord& record) {
  if (record.x < 2) throw DomainError("witness factorization needs x >= 2");
  QuasiPrimeFactorization out;
  for (const auto& [p, e] : factorize(record.n)) out.append(p, e);
  out.append(record.x, 1);
  return out;
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  QuasiPrimeFactorization parse() {
    QuasiPrimeFactorization out;
    skip_space();
    parse_term(out);
    skip_space();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '*') fail("expected '*' or end of input");
      ++pos_;
      skip_space();
      parse_term(out);
      skip_space();
    }
    return out;
  }

 private:
  void parse_term(QuasiPrimeFactorization& out) {
    const std::size_t base_at = pos_;
    const u64 base = parse_integer();
    u64 exponent = 1;
    std::size_t exponent_at = pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      exponent_at = pos_;
      exponent = parse_integer();
    }
    if (base < 2) throw DomainError("base must be >= 2 (byte " + std::to_string(base_at) + ")");
    if (exponent == 0)
      throw DomainError("exponent must be >= 1 (byte " + std::to_string(exponent_at) + ")");
    if (exponent > std::numeric_limits<unsigned>::max()) throw ParseError("exponent too large", exponent_at);
    out.append(base, static_cast<unsigned>(exponent));
  }

  u64 parse_integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    const auto value = parse_u64(text_.substr(start, pos_ - start));
    if (!value) throw ParseError("integer does not fit 64 bits", start);
    return *value;
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const char* what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QuasiPrimeFactorization parse_factorization(std::string_view text) {
  return ExpressionParser(text).parse();
}

std::string format_factorization(const QuasiPrimeFactorization& x) {
  std::string out;
  for (const auto& [base, exponent] : x.pairs()) {
    if (!out.empty()) out += '*';
    out += std::to_string(base);
    if (exponent != 1) {
      out += '^';
      out += std::to_string(exponent);
    }
  }
  return out;
}

}  // namespace spoofscan
