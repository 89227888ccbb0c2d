#include "spoofscan/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "spoofscan/analysis.hpp"
#include "spoofscan/errors.hpp"
#include "spoofscan/membership.hpp"
#include "spoofscan/results_io.hpp"
#include "spoofscan/search.hpp"
#include "spoofscan/sieve.hpp"
#include "spoofscan/spoof.hpp"

namespace spoofscan {

namespace {

std::string fixed(double v, int precision = 12) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::setprecision(precision) << v;
  return s.str();
}

u64 require_odd(const std::string& text) {
  const auto n = parse_u64(text);
  if (!n || *n == 0) throw DomainError("'" + text + "' is not a positive integer");
  if (*n % 2 == 0) throw DomainError(text + " is even; S contains only odd integers");
  return *n;
}

int decades_for(u64 limit) {
  int k = 0;
  for (u64 p = 10; p <= limit; p *= 10) {
    ++k;
    if (p > ~u64{0} / 10) break;
  }
  return k;
}

// --- search --------------------------------------------------------------

struct SearchArgs {
  u64 limit = 0;
  unsigned threads = 1;
  std::size_t segment_size = kDefaultSegmentSlots;
  std::string out_path;
  std::string checkpoint_path;
  std::size_t checkpoint_every = 64;
  bool resume_run = false;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  SearchConfig config;
  config.limit = a.limit;
  config.worker_count = a.threads;
  config.segment_span = a.segment_size;
  config.results_path = a.out_path;
  config.checkpoint_every = a.checkpoint_every;
  if (!a.checkpoint_path.empty()) config.checkpoint_path = a.checkpoint_path;
  config.progress = [&err](const SearchProgress& p) {
    const double rate = p.elapsed_seconds > 0 ? p.segments_done / p.elapsed_seconds : 0.0;
    err << "segments " << p.segments_done << '/' << p.segments_total << "  members " << p.found
        << "  next " << p.next_lo << "  " << fixed(rate, 4) << " seg/s\n";
  };

  std::vector<MemberRecord> records;
  if (a.resume_run) {
    if (a.checkpoint_path.empty()) throw DomainError("--resume needs --checkpoint");
    records = resume(config);
  } else {
    if (a.limit < 1) throw DomainError("--limit must be >= 1");
    records = search_range(config);
  }
  out << "members=" << records.size() << '\n';
  out << "results=" << a.out_path << '\n';
  return kExitOk;
}

// --- check ---------------------------------------------------------------

int cmd_check(const std::string& text, std::ostream& out) {
  const u64 n = require_odd(text);
  const u64 sigma = sigma_single(n);
  out << "n=" << n << "\nsigma=" << sigma << '\n';
  const auto x = check_membership(n, sigma);
  if (!x) {
    out << "member=no\n";
    return kExitOk;
  }
  out << "member=yes\nx=" << *x << "\nclass=" << to_string(classify_witness(*x)) << '\n';
  out << "D=" << to_decimal(static_cast<u128>(n) * *x) << '\n';
  return kExitOk;
}

// --- spoof-check ---------------------------------------------------------

int cmd_spoof_check(const std::string& expression, std::ostream& out) {
  const auto x = parse_factorization(expression);
  out << "factorization=" << format_factorization(x) << '\n';
  out << "expansion=" << to_decimal(expand(x)) << '\n';
  out << "spoof_sigma=" << to_decimal(spoof_sigma(x)) << '\n';
  out << "class=" << to_string(classify_spoof(x)) << '\n';
  return kExitOk;
}

// --- verify-descartes ----------------------------------------------------

int cmd_verify_descartes(std::ostream& out) {
  constexpr u64 kN = 9018009;
  constexpr u64 kSigma = 18035199;
  constexpr u64 kX = 22021;
  constexpr u64 kD = 198585576189;
  constexpr u64 kSpoofSigma = 397171152378;

  bool all_ok = true;
  auto check = [&](bool ok, const std::string& what) {
    out << (ok ? "ok    " : "FAIL  ") << what << '\n';
    all_ok = all_ok && ok;
  };

  const u64 sigma = sigma_single(kN);
  check(sigma == kSigma, "sigma(9018009) = " + std::to_string(sigma) + " by trial division");
  const auto primes = sieve_primes(isqrt(kN + 1) + 1);
  const auto segment = sigma_segment(kN, kN + 2, primes);
  check(segment.values.at(0) == kSigma, "sigma(9018009) = " + std::to_string(segment.values.at(0)) + " by segmented sieve");

  const auto x = check_membership(kN, sigma);
  const auto x_fraction = check_membership_fraction(kN, sigma);
  check(x == kX && x_fraction == kX, "2n/sigma(n) - 1 = 1/x with x = " + (x ? std::to_string(*x) : "none"));
  const ReducedFraction m = reduce(sigma, 2 * kN);
  check(m == ReducedFraction{kX, kX + 1},
        "sigma(n)/2n reduces to " + std::to_string(m.num) + "/" + std::to_string(m.den));
  check(x && satisfies_identity(kN, sigma, *x), "2nx = sigma(n)(x+1)");

  const auto factors = factorize(kX);
  check(factors == std::vector<PrimePower>{{19, 2}, {61, 1}} && !is_prime(kX), "22021 = 19^2 * 61 is composite");
  const ProductClass cls = classify_witness(kX);
  check(cls == ProductClass::OddSpoof, "class " + std::string(to_string(cls)));

  const auto witness = witness_factorization(make_record(kN, kX));
  check(witness == parse_factorization("3^2*7^2*11^2*13^2*22021"),
        "quasi-prime factorization " + format_factorization(witness));
  const u128 d = expand(witness);
  check(d == kD, "D = n * x = " + to_decimal(d));
  const u128 s = spoof_sigma(witness);
  check(s == kSpoofSigma && s == 2 * static_cast<u128>(kD), "spoof sigma = " + to_decimal(s) + " = 2D");
  check(classify_spoof(witness) == SpoofClass::Perfect, "spoof perfect");

  out << "x=" << kX << "\nclass=" << to_string(cls) << "\nD=" << kD << '\n';
  out << (all_ok ? "verified\n" : "verification FAILED\n");
  return all_ok ? kExitOk : kExitInvalid;
}

// --- analyze / fit / density ---------------------------------------------

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << "  ";
      out << std::setw(static_cast<int>(width[c])) << cells[c];
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

int cmd_analyze(const std::string& in_path, u64 modulus, bool csv, std::ostream& out) {
  const ResultsFile file = read_results(in_path);
  const auto members = file.members();
  const int k_max = decades_for(file.limit);
  std::vector<DecadeRow> decades;
  if (k_max > 0) {
    u64 top = 1;
    for (int k = 0; k < k_max; ++k) top *= 10;
    const auto end = std::upper_bound(members.begin(), members.end(), top);
    decades = decade_counts(std::span(members.begin(), end), k_max);
  }
  const Histogram residues = residue_histogram(members, modulus);
  const Histogram digits = ending_digit_histogram(members);
  const SchnirelmannBound glb = schnirelmann_glb(members, file.limit);

  if (csv) {
    write_decade_csv(out, decades);
    out << '\n';
    write_histogram_csv(out, residues);
    out << '\n';
    write_histogram_csv(out, digits);
    return kExitOk;
  }

  out << "limit " << file.limit << "  members " << members.size() << "\n\n";
  out << "Members per decade\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : decades)
    rows.push_back({"10^" + std::to_string(r.k), std::to_string(r.cumulative), std::to_string(r.delta)});
  print_table(out, {"k", "cumulative", "delta"}, rows);

  out << "\nResidues mod " << modulus << '\n';
  rows.clear();
  for (std::size_t i = 0; i < residues.labels.size(); ++i)
    rows.push_back({std::to_string(residues.labels[i]), std::to_string(residues.counts[i])});
  print_table(out, {"residue", "count"}, rows);

  out << "\nEnding digits\n";
  rows.clear();
  for (std::size_t i = 0; i < digits.labels.size(); ++i)
    rows.push_back({std::to_string(digits.labels[i]), std::to_string(digits.counts[i])});
  print_table(out, {"digit", "count"}, rows);

  out << "\nmin pi_S(n)/n over n <= " << file.limit << ": " << glb.count << '/' << glb.n << " = "
      << format_ratio(glb.count, glb.n) << '\n';
  return kExitOk;
}

std::vector<FitPoint> read_points_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading", path);
  std::vector<FitPoint> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#' || (line_no == 1 && line.rfind("k,", 0) == 0)) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw FormatError("expected 'k,count'", line_no);
    try {
      std::size_t used_k = 0;
      std::size_t used_c = 0;
      const std::string k_text = line.substr(0, comma);
      const std::string c_text = line.substr(comma + 1);
      FitPoint p{std::stod(k_text, &used_k), std::stod(c_text, &used_c)};
      if (used_k != k_text.size() || used_c != c_text.size() || !std::isfinite(p.k) || !std::isfinite(p.count))
        throw std::invalid_argument("trailing characters");
      points.push_back(p);
    } catch (const std::logic_error&) {
      throw FormatError("invalid number in '" + line + "'", line_no);
    }
  }
  return points;
}

int cmd_fit(const std::string& in_path, const std::string& points_path, bool decades, std::ostream& out) {
  std::vector<FitPoint> points;
  if (!points_path.empty()) {
    points = read_points_csv(points_path);
  } else {
    const ResultsFile file = read_results(in_path);
    const auto members = file.members();
    if (decades) {
      const int k_max = decades_for(file.limit);
      if (k_max == 0) throw DomainError("--decades needs a results limit >= 10");
      u64 top = 1;
      for (int k = 0; k < k_max; ++k) top *= 10;
      const auto end = std::upper_bound(members.begin(), members.end(), top);
      points = decade_points(decade_counts(std::span(members.begin(), end), k_max));
    } else {
      points = member_points(members);
    }
  }
  const DensityFit fit = fit_alpha(points);
  out << "model=alpha*ln(k)\n";
  out << "alpha=" << fixed(fit.alpha) << '\n';
  out << "rss=" << fixed(fit.residual_sum_squares) << '\n';
  out << "points=" << fit.points_used << '\n';
  return kExitOk;
}

int cmd_density(const std::string& in_path, const std::string& out_path, std::ostream& out) {
  const ResultsFile file = read_results(in_path);
  const auto members = file.members();
  const auto series = density_series(members, file.limit);
  if (out_path.empty()) {
    write_density_csv(out, series);
    return kExitOk;
  }
  std::ofstream file_out(out_path, std::ios::binary | std::ios::trunc);
  if (!file_out) throw IoError("cannot open for writing", out_path);
  write_density_csv(file_out, series);
  file_out.flush();
  if (!file_out) throw IoError("write failed", out_path);
  out << "points=" << series.size() << '\n';
  return kExitOk;
}

// --- compare -------------------------------------------------------------

int cmd_compare(const std::string& in_path, const std::string& bfile_path, std::ostream& out, std::ostream& err) {
  const ResultsFile file = read_results(in_path);
  const auto terms = read_bfile(bfile_path);
  if (terms.empty()) {
    err << "warning: b-file has no terms; nothing to compare\n";
    out << "agreement over 0 terms\n";
    return kExitOk;
  }
  const std::size_t overlap = std::min(terms.size(), file.records.size());
  for (std::size_t i = 0; i < overlap; ++i) {
    if (terms[i].value != file.records[i].n) {
      out << "mismatch at index " << terms[i].index << ": b-file " << terms[i].value << ", results "
          << file.records[i].n << '\n';
      return kExitInvalid;
    }
  }
  // A b-file term within our limit that we did not find is also a mismatch.
  if (terms.size() > overlap && terms[overlap].value <= file.limit) {
    out << "mismatch at index " << terms[overlap].index << ": b-file " << terms[overlap].value
        << ", results have no term\n";
    return kExitInvalid;
  }
  if (file.records.size() > overlap)
    err << "note: results extend " << (file.records.size() - overlap) << " terms past the b-file\n";
  out << "agreement over " << overlap << " terms\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Search and analysis tools for odd n with 2n/sigma(n) - 1 = 1/x"};
  app.name("spoofscan");
  app.require_subcommand(1);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Scan odd n <= limit and write a results file");
  search->add_option("--limit", search_args.limit, "Search bound N (inclusive)");
  search->add_option("--threads", search_args.threads, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--segment-size", search_args.segment_size, "Odd slots per segment (>= 1024)");
  search->add_option("--out", search_args.out_path, "Results file")->required();
  search->add_option("--checkpoint", search_args.checkpoint_path, "Checkpoint file");
  search->add_option("--checkpoint-every", search_args.checkpoint_every, "Segments per checkpoint")
      ->check(CLI::PositiveNumber);
  search->add_flag("--resume", search_args.resume_run, "Continue from --checkpoint");

  std::string check_n;
  auto* check = app.add_subcommand("check", "Membership test for one odd n");
  check->add_option("n", check_n, "Odd positive integer")->required();

  std::string expression;
  auto* spoof_check = app.add_subcommand("spoof-check", "Spoof sigma of a quasi-prime factorization");
  spoof_check->add_option("expression", expression, "e.g. 3^2*7^2*11^2*13^2*22021")->required();

  auto* verify = app.add_subcommand("verify-descartes", "Reconstruct Descartes' example step by step");

  std::string in_path;
  u64 modulus = 8;
  bool csv = false;
  auto* analyze = app.add_subcommand("analyze", "Decade counts and histograms of a results file");
  analyze->add_option("--in", in_path, "Results file")->required();
  analyze->add_option("--mod", modulus, "Residue modulus");
  analyze->add_flag("--csv", csv, "Emit CSV instead of aligned text");

  std::string points_path;
  bool use_decades = false;
  auto* fit = app.add_subcommand("fit", "Least-squares alpha for pi_S(k) ~ alpha ln k");
  auto* fit_in = fit->add_option("--in", in_path, "Results file");
  auto* fit_points = fit->add_option("--points", points_path, "CSV of k,count points");
  fit_in->excludes(fit_points);
  fit->add_flag("--decades", use_decades, "Fit at 10^k instead of at every member");

  std::string density_out;
  auto* density = app.add_subcommand("density", "pi_S(n)/n at each member as CSV");
  density->add_option("--in", in_path, "Results file")->required();
  density->add_option("--out", density_out, "CSV output (default stdout)");

  std::string bfile_path;
  auto* compare = app.add_subcommand("compare", "Compare a results file with an OEIS b-file");
  compare->add_option("--in", in_path, "Results file")->required();
  compare->add_option("--bfile", bfile_path, "b-file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (search->parsed()) return cmd_search(search_args, out, err);
    if (check->parsed()) return cmd_check(check_n, out);
    if (spoof_check->parsed()) return cmd_spoof_check(expression, out);
    if (verify->parsed()) return cmd_verify_descartes(out);
    if (analyze->parsed()) return cmd_analyze(in_path, modulus, csv, out);
    if (fit->parsed()) {
      if (in_path.empty() && points_path.empty()) throw DomainError("fit needs --in or --points");
      return cmd_fit(in_path, points_path, use_decades, out);
    }
    if (density->parsed()) return cmd_density(in_path, density_out, out);
    if (compare->parsed()) return cmd_compare(in_path, bfile_path, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace spoofscan
