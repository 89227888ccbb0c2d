#include "spoofscan/results_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>

#include "spoofscan/errors.hpp"

namespace spoofscan {

namespace {

constexpr std::string_view kHeaderPrefix = "#spoofscan v1 limit=";

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading", path);
  return in;
}

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

u64 require_u64(std::string_view text, std::string_view what, std::size_t line_no) {
  const auto v = parse_u64(text);
  if (!v) throw FormatError("invalid " + std::string(what) + " '" + std::string(text) + "'", line_no);
  return *v;
}

}  // namespace

std::vector<u64> ResultsFile::members() const {
  std::vector<u64> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.n);
  return out;
}

std::string results_header(u64 limit) {
  return std::string(kHeaderPrefix) + std::to_string(limit) + "\n";
}

std::string format_record(const MemberRecord& record) {
  std::string out = std::to_string(record.n);
  out += '\t';
  out += std::to_string(record.x);
  out += '\t';
  out += to_string(record.product_class);
  out += '\n';
  return out;
}

ResultsFile parse_results(std::istream& in) {
  ResultsFile file;
  std::string line;
  std::size_t line_no = 1;
  if (!next_line(in, line)) throw FormatError("empty results file", 1);
  const std::string_view header(line);
  if (!header.starts_with(kHeaderPrefix)) throw FormatError("missing '#spoofscan v1' header", 1);
  file.limit = require_u64(header.substr(kHeaderPrefix.size()), "limit", 1);
  if (file.limit == 0) throw FormatError("limit must be >= 1", 1);

  while (next_line(in, line)) {
    ++line_no;
    const std::string_view text(line);
    const auto tab1 = text.find('\t');
    const auto tab2 = tab1 == std::string_view::npos ? tab1 : text.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos || text.find('\t', tab2 + 1) != std::string_view::npos)
      throw FormatError("expected three tab-separated fields", line_no);

    MemberRecord rec;
    rec.n = require_u64(text.substr(0, tab1), "n", line_no);
    rec.x = require_u64(text.substr(tab1 + 1, tab2 - tab1 - 1), "x", line_no);
    const auto cls = parse_product_class(text.substr(tab2 + 1));
    if (!cls) throw FormatError("unknown class '" + std::string(text.substr(tab2 + 1)) + "'", line_no);
    rec.product_class = *cls;

    if ((rec.n & 1) == 0) throw FormatError("n must be odd", line_no);
    if (rec.n > file.limit) throw FormatError("n exceeds the header limit", line_no);
    if (!file.records.empty() && rec.n <= file.records.back().n)
      throw FormatError("n not strictly ascending", line_no);
    if (rec.x == 0 || classify_witness(rec.x) != rec.product_class)
      throw FormatError("class does not match witness x", line_no);
    file.records.push_back(rec);
  }
  return file;
}

ResultsFile read_results(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_results(in);
}

void write_results(const std::filesystem::path& path, u64 limit,
                   const std::vector<MemberRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing", path);
  out << results_header(limit);
  for (const auto& r : records) out << format_record(r);
  out.flush();
  if (!out) throw IoError("write failed", path);
}

Checkpoint parse_checkpoint(std::istream& in) {
  Checkpoint cp;
  bool seen[3] = {false, false, false};
  std::string line;
  std::size_t line_no = 0;
  while (next_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw FormatError("expected key=value", line_no);
    const std::string_view key(line.data(), eq);
    const std::string_view value(line.data() + eq + 1, line.size() - eq - 1);
    if (key == "limit") {
      cp.limit = require_u64(value, "limit", line_no);
      seen[0] = true;
    } else if (key == "next") {
      cp.next_lo = require_u64(value, "next", line_no);
      seen[1] = true;
    } else if (key == "found") {
      cp.found_count = require_u64(value, "found", line_no);
      seen[2] = true;
    } else {
      throw FormatError("unknown checkpoint key '" + std::string(key) + "'", line_no);
    }
  }
  if (!seen[0] || !seen[1] || !seen[2]) throw FormatError("checkpoint needs limit, next and found", 0);
  if ((cp.next_lo & 1) == 0) throw FormatError("checkpoint next must be odd", 0);
  return cp;
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_checkpoint(in);
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing", tmp);
    out << "limit=" << cp.limit << "\nnext=" << cp.next_lo << "\nfound=" << cp.found_count << "\n";
    out.flush();
    if (!out) throw IoError("write failed", tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename failed: " + ec.message(), path);
}

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (next_line(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line.substr(first));
    std::string index_text, value_text, rest;
    if (!(fields >> index_text >> value_text) || (fields >> rest))
      throw FormatError("expected '<index> <value>'", line_no);
    BFileEntry e;
    const char* begin = index_text.data();
    const char* end = begin + index_text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, e.index);
    if (ec != std::errc{} || ptr != end) throw FormatError("invalid index '" + index_text + "'", line_no);
    e.value = require_u64(value_text, "value", line_no);
    out.push_back(e);
  }
  return out;
}

std::vector<BFileEntry> read_bfile(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_bfile(in);
}

}  // namespace spoofscan
