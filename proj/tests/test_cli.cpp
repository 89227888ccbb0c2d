#include <doctest.h>

#include <cmath>
#include <sstream>

#include "spoofscan/cli.hpp"
#include "test_util.hpp"

using namespace spoofscan;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kSmallResults = "#spoofscan v1 limit=100\n1\t1\tUNIT\n3\t2\tEVEN_SPOOF\n15\t4\tEVEN_SPOOF\n";

}  // namespace

TEST_CASE("search subcommand") {
  testutil::TempDir dir;
  const auto a = run({"search", "--limit", "100", "--out", (dir / "a").string()});
  CHECK(a.code == 0);
  CHECK(a.out.find("members=3") != std::string::npos);
  CHECK(testutil::read_file(dir / "a") == kSmallResults);
  CHECK_FALSE(a.err.empty());  // progress

  const auto b = run({"search", "--limit", "100", "--threads", "4", "--out", (dir / "b").string()});
  CHECK(b.code == 0);
  CHECK(testutil::read_file(dir / "b") == testutil::read_file(dir / "a"));

  CHECK(run({"search", "--limit", "0", "--out", (dir / "c").string()}).code == 1);
  CHECK(run({"search", "--limit", "100", "--segment-size", "12", "--out", (dir / "c").string()}).code == 1);
  CHECK(run({"search", "--limit", "abc", "--out", (dir / "c").string()}).code == 1);
  CHECK(run({"search", "--limit", "100"}).code == 1);
  CHECK(run({"search", "--limit", "100", "--out", (dir / "missing" / "x").string()}).code == 2);
  CHECK(run({"search", "--resume", "--out", (dir / "a").string()}).code == 1);
}

TEST_CASE("search with checkpoint and resume") {
  testutil::TempDir dir;
  const auto full = run({"search", "--limit", "200000", "--segment-size", "1024", "--out", (dir / "full").string()});
  REQUIRE(full.code == 0);
  const auto cp = (dir / "cp").string();
  const auto first = run({"search", "--limit", "200000", "--segment-size", "1024", "--checkpoint", cp,
                          "--checkpoint-every", "4", "--out", (dir / "r").string()});
  REQUIRE(first.code == 0);
  // Completed run: resume is a no-op.
  const auto again = run({"search", "--resume", "--checkpoint", cp, "--out", (dir / "r").string()});
  CHECK(again.code == 0);
  CHECK(testutil::read_file(dir / "r") == testutil::read_file(dir / "full"));

  testutil::write_file(cp, "limit=200000\nnext=1\nfound=3\n");
  CHECK(run({"search", "--resume", "--checkpoint", cp, "--out", (dir / "r").string()}).code == 1);
}

TEST_CASE("check subcommand") {
  const auto d = run({"check", "9018009"});
  CHECK(d.code == 0);
  CHECK(d.out == "n=9018009\nsigma=18035199\nmember=yes\nx=22021\nclass=ODD_SPOOF\nD=198585576189\n");

  const auto five = run({"check", "5"});
  CHECK(five.code == 0);
  CHECK(five.out == "n=5\nsigma=6\nmember=no\n");

  const auto even = run({"check", "4"});
  CHECK(even.code == 1);
  CHECK(even.err.find("even") != std::string::npos);
  CHECK(run({"check", "0"}).code == 1);
  CHECK(run({"check", "x"}).code == 1);
}

TEST_CASE("spoof-check subcommand") {
  const auto d = run({"spoof-check", "3^2*7^2*11^2*13^2*22021"});
  CHECK(d.code == 0);
  CHECK(d.out ==
        "factorization=3^2*7^2*11^2*13^2*22021\nexpansion=198585576189\nspoof_sigma=397171152378\n"
        "class=SPOOF_PERFECT\n");
  CHECK(run({"spoof-check", "2*3"}).out.find("class=SPOOF_PERFECT") != std::string::npos);
  CHECK(run({"spoof-check", "3*3"}).out.find("class=SPOOF_DEFICIENT") != std::string::npos);
  CHECK(run({"spoof-check", "2^2*3"}).out.find("class=SPOOF_ABUNDANT") != std::string::npos);

  const auto bad = run({"spoof-check", "3^"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("byte 2") != std::string::npos);
  CHECK(run({"spoof-check", "3^0"}).code == 1);
  CHECK(run({"spoof-check", "2^200"}).code == 1);
}

TEST_CASE("verify-descartes subcommand") {
  const auto v = run({"verify-descartes"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.find("x=22021\n") != std::string::npos);
  CHECK(v.out.find("class=ODD_SPOOF\n") != std::string::npos);
  CHECK(v.out.find("D=198585576189\n") != std::string::npos);
  CHECK(v.out.ends_with("verified\n"));
}

TEST_CASE("analyze subcommand") {
  testutil::TempDir dir;
  testutil::write_file(dir / "r", kSmallResults);
  const auto text = run({"analyze", "--in", (dir / "r").string()});
  CHECK(text.code == 0);
  CHECK(text.out.find("Members per decade") != std::string::npos);
  CHECK(text.out.find("10^2           3      1") != std::string::npos);

  const auto csv = run({"analyze", "--in", (dir / "r").string(), "--csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out ==
        "k,cumulative,delta\n1,2,2\n2,3,1\n\nlabel,count\n1,1\n3,1\n5,0\n7,1\n\n"
        "label,count\n1,1\n3,1\n5,1\n7,0\n9,0\n");

  const auto mod3 = run({"analyze", "--in", (dir / "r").string(), "--csv", "--mod", "3"});
  CHECK(mod3.out.find("label,count\n0,2\n1,1\n2,0\n") != std::string::npos);

  testutil::write_file(dir / "bad", "#spoofscan v1 limit=100\n1\t1\tUNIT\n3\tx\tEVEN_SPOOF\n");
  const auto bad = run({"analyze", "--in", (dir / "bad").string()});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(run({"analyze", "--in", (dir / "none").string()}).code == 2);
}

TEST_CASE("fit subcommand") {
  testutil::TempDir dir;
  std::ostringstream pts;
  pts << "k,count\n";
  for (int k = 1; k <= 8; ++k) {
    const double x = std::pow(10.0, k);
    pts.precision(17);
    pts << x << ',' << 10 * std::log(x) << '\n';
  }
  testutil::write_file(dir / "pts.csv", pts.str());
  const auto f = run({"fit", "--points", (dir / "pts.csv").string()});
  CHECK(f.code == 0);
  CHECK(f.out.find("alpha=10\n") != std::string::npos);
  CHECK(f.out.find("points=8\n") != std::string::npos);

  testutil::write_file(dir / "r", kSmallResults);
  const auto m = run({"fit", "--in", (dir / "r").string()});
  CHECK(m.code == 0);
  CHECK(m.out.find("points=2\n") != std::string::npos);  // k = 1 carries no weight
  const auto dec = run({"fit", "--in", (dir / "r").string(), "--decades"});
  CHECK(dec.code == 0);
  CHECK(dec.out.find("points=2\n") != std::string::npos);

  testutil::write_file(dir / "bad.csv", "k,count\n10,abc\n");
  CHECK(run({"fit", "--points", (dir / "bad.csv").string()}).code == 1);
  CHECK(run({"fit"}).code == 1);
}

TEST_CASE("density subcommand") {
  testutil::TempDir dir;
  testutil::write_file(dir / "r", kSmallResults);
  const auto d = run({"density", "--in", (dir / "r").string(), "--out", (dir / "d.csv").string()});
  CHECK(d.code == 0);
  CHECK(testutil::read_file(dir / "d.csv") == "n,ratio\n1,1\n3,0.666666666666667\n15,0.2\n");
  const auto stdout_csv = run({"density", "--in", (dir / "r").string()});
  CHECK(stdout_csv.out == testutil::read_file(dir / "d.csv"));
}

TEST_CASE("compare subcommand") {
  testutil::TempDir dir;
  testutil::write_file(dir / "r", kSmallResults);

  testutil::write_file(dir / "good.b", "# test\n1 1\n2 3\n3 15\n4 135\n");
  const auto good = run({"compare", "--in", (dir / "r").string(), "--bfile", (dir / "good.b").string()});
  CHECK(good.code == 0);
  CHECK(good.out == "agreement over 3 terms\n");

  testutil::write_file(dir / "bad.b", "1 1\n2 3\n3 17\n");
  const auto bad = run({"compare", "--in", (dir / "r").string(), "--bfile", (dir / "bad.b").string()});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("mismatch at index 3") != std::string::npos);

  testutil::write_file(dir / "missing.b", "1 1\n2 3\n3 15\n4 35\n");
  const auto missing = run({"compare", "--in", (dir / "r").string(), "--bfile", (dir / "missing.b").string()});
  CHECK(missing.code == 1);
  CHECK(missing.out.find("mismatch at index 4") != std::string::npos);

  testutil::write_file(dir / "empty.b", "");
  const auto empty = run({"compare", "--in", (dir / "r").string(), "--bfile", (dir / "empty.b").string()});
  CHECK(empty.code == 0);
  CHECK(empty.out == "agreement over 0 terms\n");
  CHECK(empty.err.find("warning") != std::string::npos);

  CHECK(run({"compare", "--in", (dir / "r").string(), "--bfile", (dir / "nope.b").string()}).code == 2);
}

TEST_CASE("compare against the first 48 terms") {
  testutil::TempDir dir;
  REQUIRE(run({"search", "--limit", "1000000", "--out", (dir / "r").string()}).code == 0);
  const auto c = run({"compare", "--in", (dir / "r").string(), "--bfile", SPOOFSCAN_TEST_DATA "/members_1e6.b"});
  CHECK(c.code == 0);
  CHECK(c.out == "agreement over 48 terms\n");
}

TEST_CASE("subcommands are idempotent") {
  testutil::TempDir dir;
  testutil::write_file(dir / "r", kSmallResults);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", "9018009"}, {"spoof-check", "3^2*5"}, {"verify-descartes"},
        {"analyze", "--in", (dir / "r").string()}, {"fit", "--in", (dir / "r").string()},
        {"density", "--in", (dir / "r").string()}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
