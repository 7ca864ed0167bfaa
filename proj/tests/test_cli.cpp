#include "cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"fitraffic"};
  argv.insert(argv.end(), args);
  std::ostringstream out;
  std::ostringstream err;
  const int code = fitraffic::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') {
      lines.push_back(line);
    }
  }
  return lines;
}

}  // namespace

TEST_CASE("simulate") {
  const Result r = run({"simulate", "--m", "2", "--length", "100000", "--density", "0.3", "--steps", "100", "--seed", "42"});
  REQUIRE(r.code == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 102);
  CHECK(lines[0] == "t,flow_measured,flow_exact");
  CHECK(lines[101].rfind("100,", 0) == 0);
  CHECK(r.out.find("# rho_actual=0.3\n") != std::string::npos);

  const Result again =
      run({"simulate", "--m", "2", "--length", "100000", "--density", "0.3", "--steps", "100", "--seed", "42"});
  CHECK(again.out == r.out);

  const Result ens = run({"simulate", "--length", "2000", "--density", "1/3", "--steps", "5", "--runs", "3"});
  REQUIRE(ens.code == 0);
  CHECK(data_lines(ens.out)[0] == "t,flow_mean,flow_stderr,flow_min,flow_max,flow_exact");
  CHECK(ens.out.find("# runs=3\n") != std::string::npos);
}

TEST_CASE("simulate flag validation") {
  const Result bad_m = run({"simulate", "--m", "0", "--density", "0.3"});
  CHECK(bad_m.code == 2);
  CHECK(bad_m.err.find("--m") != std::string::npos);
  CHECK(bad_m.out.empty());

  CHECK(run({"simulate", "--density", "1.5"}).code == 2);
  CHECK(run({"simulate", "--density", "abc"}).code == 2);
  CHECK(run({"simulate"}).code == 2);
  CHECK(run({"simulate", "--density", "0.3", "--init", "random"}).code == 2);
  CHECK(run({"simulate", "--density", "0.3", "--bogus", "1"}).code == 2);
  CHECK(run({"simulate", "--density", "0.3", "--length", "0"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("exact") {
  const Result steady = run({"exact", "--m", "2", "--density", "0.2", "--formula", "steady"});
  REQUIRE(steady.code == 0);
  CHECK(data_lines(steady.out) == std::vector<std::string>{"t,P,flow", "inf,0.4,0.4"});

  const Result one = run({"exact", "--m", "1", "--density", "0.5", "--steps", "1"});
  REQUIRE(one.code == 0);
  CHECK(data_lines(one.out) == std::vector<std::string>{"t,P,flow", "0,0.25,0.25", "1,0.1875,0.3125"});

  const Result fraction = run({"exact", "--m", "1", "--density", "1/2", "--steps", "1"});
  CHECK(data_lines(fraction.out) == data_lines(one.out));

  const Result empty = run({"exact", "--m", "2", "--density", "0", "--steps", "3"});
  REQUIRE(empty.code == 0);
  CHECK(data_lines(empty.out) == std::vector<std::string>{"t,P,flow", "0,1,0", "1,1,0", "2,1,0", "3,1,0"});

  const Result hyper = run({"exact", "--m", "2", "--density", "0.3", "--formula", "hypergeometric"});
  CHECK(data_lines(hyper.out) == std::vector<std::string>{"t,P,flow", "0,0.343,0.357"});

  const Result asym = run({"exact", "--m", "2", "--density", "0.2", "--steps", "3", "--formula", "asymptotic"});
  REQUIRE(asym.code == 0);
  CHECK(data_lines(asym.out).size() == 4);  // header + t = 1..3

  CHECK(run({"exact", "--m", "2", "--density", "0", "--steps", "3", "--formula", "asymptotic"}).code == 2);
  CHECK(run({"exact", "--m", "2", "--density", "0.3", "--formula", "asymptotic"}).code == 2);
  CHECK(run({"exact", "--density", "0.3", "--formula", "other"}).code == 2);
}

TEST_CASE("preimage") {
  const Result count = run({"preimage", "--m", "1", "--n", "1", "--action", "count"});
  CHECK(count.code == 0);
  CHECK(count.out == "3\n");

  const Result list = run({"preimage", "--m", "1", "--n", "1", "--action", "list"});
  CHECK(list.out == "0000\n0001\n0010\n");

  const Result verify = run({"preimage", "--m", "2", "--n", "0", "--action", "verify"});
  CHECK(verify.code == 0);
  CHECK(data_lines(verify.out) == std::vector<std::string>{"total,preimages,mismatches", "8,1,0"});

  CHECK(run({"preimage", "--m", "1", "--n", "20", "--action", "list"}).code == 2);
  CHECK(run({"preimage", "--m", "1", "--n", "12", "--action", "verify"}).code == 2);
  // Counting uses the closed-form path count and has no length limit.
  CHECK(run({"preimage", "--m", "1", "--n", "20", "--action", "count"}).code == 0);
}

TEST_CASE("diagram") {
  const Result d = run({"diagram", "--m", "2", "--t", "100", "--rho-min", "0.05", "--rho-max", "0.95", "--rho-count", "19"});
  REQUIRE(d.code == 0);
  const auto lines = data_lines(d.out);
  REQUIRE(lines.size() == 20);
  CHECK(lines[0] == "rho,P_exact,flow_exact");

  const Result single = run({"diagram", "--m", "1", "--t", "0", "--rho-min", "0.5", "--rho-max", "0.5", "--rho-count", "1"});
  CHECK(data_lines(single.out) == std::vector<std::string>{"rho,P_exact,flow_exact", "0.5,0.25,0.25"});

  const Result sim = run({"diagram", "--m", "2", "--t", "10", "--rho-min", "0.2", "--rho-max", "0.4", "--rho-count",
                          "3", "--simulate", "--length", "2000", "--runs", "2"});
  REQUIRE(sim.code == 0);
  CHECK(data_lines(sim.out)[0] == "rho,P_exact,flow_exact,flow_measured,stderr");

  CHECK(run({"diagram", "--m", "2", "--t", "1", "--rho-min", "0.6", "--rho-max", "0.5", "--rho-count", "3"}).code == 2);
  CHECK(run({"diagram", "--m", "2", "--t", "1", "--rho-min", "0.1", "--rho-max", "0.5", "--rho-count", "0"}).code == 2);
}

TEST_CASE("verify") {
  const Result prop2 = run({"verify", "--suite", "prop2"});
  CHECK(prop2.code == 0);
  CHECK(prop2.out.find("FAIL") == std::string::npos);
  CHECK(prop2.out.find("PASS prop2 m=3 n=3") != std::string::npos);
  CHECK(run({"verify", "--suite", "formulas"}).code == 0);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("--out writes the file and nothing to stdout") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "fitraffic_cli_out.csv";
  fs::remove(path);
  const Result r = run({"exact", "--m", "1", "--density", "0.5", "--steps", "1", "--out", path.c_str()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == run({"exact", "--m", "1", "--density", "0.5", "--steps", "1"}).out);
  fs::remove(path);

  const Result bad = run({"exact", "--density", "0.5", "--out", "/nonexistent-dir/x.csv"});
  CHECK(bad.code == 1);
}

TEST_CASE("help and version") {
  const Result v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find("fitraffic") != std::string::npos);
  const Result h = run({"simulate", "--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("--density") != std::string::npos);
}
