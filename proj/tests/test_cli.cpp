#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using regionsplit::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("regionsplit_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("solve an explicit set with dominated fillers") {
  const auto f = write("fill.txt", "3 5\n2 2 2\n3 3 3\n1 1 4\n2 3 4\n4 4 4\n");
  for (std::string alg : {"generic", "vsplit"}) {
    for (std::string sc : {"ec", "wt"}) {
      const auto r = cli({"solve", f, "--algorithm", alg, "--scalarization", sc, "--verify"});
      CHECK(r.code == 0);
      CHECK(r.out == "z1,z2,z3\n1,1,4\n2,2,2\n");
    }
  }
}

TEST_CASE("solve a one-item knapsack") {
  const auto f = write("k1.txt", "1\n3\n1\n4\n1\n1\n1\n1 1 1\n");
  const auto r = cli({"solve", f});
  CHECK(r.code == 0);
  CHECK(r.out == "z1,z2,z3\n-3,-1,-4\n");
}

TEST_CASE("usage errors exit with 2") {
  const auto two = write("two.txt", "2 2\n1 2\n2 1\n");
  auto r = cli({"solve", two, "--algorithm", "vsplit"});
  CHECK(r.code == 2);
  CHECK(r.err.find("m = 3") != std::string::npos);
  r = cli({"solve", write("bad.txt", "3 2\n1 2 3\n4 five 6\n")});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(cli({"solve", (scratch() / "missing.txt").string()}).code == 2);
  CHECK(cli({"solve", two, "--selection", "minv1"}).code == 2);
  CHECK(cli({"solve", two, "--variant", "nope"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"gen-knapsack", "--n", "21", "--seed", "1"}).code == 2);
  CHECK(cli({"gen-knapsack", "--n", "0", "--seed", "1"}).code == 2);
  CHECK(cli({"bench", "--gen", "5"}).code == 2);
  CHECK(cli({"verify"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("duplicate points need --dedupe") {
  const auto f = write("dup.txt", "3 3\n1 2 3\n1 2 3\n3 2 1\n");
  CHECK(cli({"solve", f}).code == 2);
  const auto r = cli({"solve", f, "--dedupe"});
  CHECK(r.code == 0);
  CHECK(r.out == "z1,z2,z3\n1,2,3\n3,2,1\n");
}

TEST_CASE("bicriteria instances default to the full split") {
  const auto f = write("bi.txt", "2 4\n0 3\n1 1\n3 0\n2 2\n");
  const auto r = cli({"solve", f, "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out == "z1,z2\n0,3\n1,1\n3,0\n");
  CHECK(r.err.find("subproblems=5") != std::string::npos);
}

TEST_CASE("generator is byte-identical per seed and solvable") {
  const std::string a = (scratch() / "a.txt").string();
  const std::string b = (scratch() / "b.txt").string();
  CHECK(cli({"gen-knapsack", "--n", "10", "--seed", "42", "--out", a}).code == 0);
  CHECK(cli({"gen-knapsack", "--n", "10", "--seed", "42", "--out", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
  const auto direct = cli({"gen-knapsack", "--n", "10", "--seed", "42"});
  CHECK(direct.out == slurp(a));
  const auto log = (scratch() / "run.log").string();
  const auto r = cli({"solve", a, "--log", log});
  CHECK(r.code == 0);
  const std::string text = slurp(log);
  CHECK(text.rfind("1;0;(", 0) == 0);
  CHECK(text.find("infeasible") != std::string::npos);
}

TEST_CASE("bench report") {
  const std::string a = (scratch() / "bench.txt").string();
  cli({"gen-knapsack", "--n", "8", "--seed", "5", "--out", a});
  const auto r = cli({"bench", a, "--gen", "6", "--seed", "2", "--verify", "--no-timing"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line ==
        "instance,m,Z,N,algorithm,scalarization,variant,selection,subproblems,bound,bound_met,"
        "bound_3n_2,bound_2n_1,wall_time_ms");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.back() == ',');
    if (line.find(",vsplit,") != std::string::npos) CHECK(line.find(",true,") != std::string::npos);
    if (line.find(",vsplit,ec,") != std::string::npos) CHECK(line.find(",minv1,") != std::string::npos);
  }
  CHECK(rows == 16);
  const auto again = cli({"bench", a, "--gen", "6", "--seed", "2", "--verify", "--no-timing"});
  CHECK(again.out == r.out);

  const auto empty = cli({"bench"});
  CHECK(empty.code == 0);
  CHECK(std::count(empty.out.begin(), empty.out.end(), '\n') == 1);

  const auto narrow = cli({"bench", a, "--algorithm", "vsplit", "--scalarization", "wt",
                           "--variant", "ts", "--no-timing"});
  CHECK(std::count(narrow.out.begin(), narrow.out.end(), '\n') == 2);
}

TEST_CASE("verify scripted sequences") {
  for (std::string s : {"full-split", "vsplit", "vsplit-ties"}) {
    const auto r = cli({"verify", "--scenario", s});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify: PASS") != std::string::npos);
  }
  const auto ties = cli({"verify", "--scenario", "vsplit-ties"});
  CHECK(ties.out.find("u=(3,2,4) v=(3,2,2)") != std::string::npos);
  const auto broken = cli({"verify", "--scenario", "vsplit", "--drop-box-after", "1"});
  CHECK(broken.code == 1);
  CHECK(broken.out.find("verify: FAIL after point 1") != std::string::npos);
}

TEST_CASE("verify an instance, with and without a fault") {
  const std::string a = (scratch() / "verify.txt").string();
  cli({"gen-knapsack", "--n", "9", "--seed", "11", "--out", a});
  for (std::string sc : {"ec", "wt"}) {
    const auto r = cli({"verify", a, "--scalarization", sc});
    CHECK(r.code == 0);
    CHECK(r.out.find("check oracle: PASS") != std::string::npos);
  }
  const std::string b = (scratch() / "verify12.txt").string();
  cli({"gen-knapsack", "--n", "12", "--seed", "3", "--out", b});
  const auto bad = cli({"verify", b, "--drop-box-after", "2"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("check invariants: FAIL iteration 2") != std::string::npos);
}

TEST_CASE("dump boxes") {
  const auto r = cli({"dump-boxes", "--scenario", "vsplit-ties"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
  CHECK(r.out.find(";3,2,4;3,2,2;1\n") != std::string::npos);
  const auto two = cli({"dump-boxes", "--scenario", "full-split", "--after", "1"});
  CHECK(two.out == "1;2,5,5\n2;5,2,5\n3;5,5,2\n");
  const auto f = write("dump.txt", "3 3\n2 2 2\n1 1 4\n4 4 4\n");
  const auto after = cli({"dump-boxes", f, "--after", "1"});
  CHECK(after.out == "1;2,5,5;1,2,2;0\n2;5,2,5;2,1,2;0\n");
  const auto full = cli({"dump-boxes", f});
  CHECK(full.out == "3;2,5,4;1,2,2;0\n4;5,2,4;2,1,2;0\n");
}
