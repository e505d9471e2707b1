#include "cli.hpp"

#include "pgst/decider.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "pgst");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = pgst::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& row) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(row);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!row.empty() && row.back() == ',') out.emplace_back();
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("decide") {
  const auto yes = run({"decide", "11", "2", "10"});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("verdict: yes") != std::string::npos);

  const auto no = run({"decide", "11", "1", "11"});
  CHECK(no.code == 0);
  CHECK(no.out.find("verdict: no (parity_violation)") != std::string::npos);
  CHECK(no.out.find("witness") != std::string::npos);

  const auto bad = run({"decide", "11", "0", "12"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());

  CHECK(run({"decide", "11", "x", "2"}).code == 2);
  CHECK(run({"decide", "0", "1", "1"}).code == 2);

  const auto json = run({"decide", "8", "1", "8", "--json"});
  CHECK(json.code == 0);
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed["verdict"] == "no");
  CHECK(parsed["witness"].size() == 8);
  CHECK(parsed["end_rule_match"] == true);
}

TEST_CASE("scan ends rows follow the end-vertex rule") {
  const auto r = run({"scan", "2", "12", "--pairs", "ends"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == "n,a,b,verdict,reason,theorem2_match,end_rule_match");
  for (int n = 2; n <= 12; ++n) {
    const auto cells = split(rows[static_cast<std::size_t>(n - 1)]);
    REQUIRE(cells.size() == 7);
    CHECK(cells[0] == std::to_string(n));
    CHECK(cells[1] == "1");
    CHECK(cells[2] == std::to_string(n));
    CHECK(cells[3] == (pgst::end_vertex_rule(n) ? "yes" : "no"));
    CHECK(cells[6] == "true");
  }
}

TEST_CASE("scan of all mirror pairs of P_11") {
  const auto r = run({"scan", "11", "11", "--pairs", "all-cospectral"});
  REQUIRE(r.code == 0);
  // a = 2, 4 are family members, a = 6 is the centre; the rest are
  // regression values from the decider.
  CHECK(lines(r.out) == std::vector<std::string>{
                            "n,a,b,verdict,reason,theorem2_match,end_rule_match",
                            "11,1,11,no,parity_violation,false,true",
                            "11,2,10,yes,all_parities_even,true,",
                            "11,3,9,no,parity_violation,false,",
                            "11,4,8,yes,all_parities_even,true,",
                            "11,5,7,no,parity_violation,false,",
                            "11,6,6,yes,trivial_same_vertex,true,",
                        });
}

TEST_CASE("scan validation, determinism, and file output") {
  CHECK(run({"scan", "5", "2"}).code == 2);
  CHECK(run({"scan", "1", "4"}).code == 2);
  CHECK(run({"scan", "2", "200"}).code == 2);
  CHECK(run({"scan", "2", "4", "--pairs", "some"}).code == 2);

  const auto first = run({"scan", "2", "30", "--pairs", "all-cospectral"});
  const auto second = run({"scan", "2", "30", "--pairs", "all-cospectral"});
  CHECK(first.out == second.out);

  const auto path = std::filesystem::temp_directory_path() / "pgst_scan_test.csv";
  const auto r = run({"scan", "2", "9", "--csv", path.string()});
  CHECK(r.code == 0);
  CHECK(read_file(path) == r.out);
  std::filesystem::remove(path);

  const auto json = run({"scan", "2", "5", "--json"});
  const auto json_lines = lines(json.out);
  CHECK(json_lines.size() == 4);
  for (const auto& l : json_lines) CHECK(nlohmann::json::parse(l).contains("reason"));
}

TEST_CASE("simulate") {
  const auto p2 = run({"simulate", "2", "1", "2", "--t-max", "4"});
  REQUIRE(p2.code == 0);
  const auto p2_lines = lines(p2.out);
  REQUIRE(p2_lines.size() == 5);
  CHECK(std::stod(p2_lines[1].substr(14)) >= 1.0 - 1e-6);

  const auto p3 = run({"simulate", "3", "1", "3", "--t-max", "5", "--json"});
  REQUIRE(p3.code == 0);
  const auto j = nlohmann::json::parse(p3.out);
  CHECK(j["best_fidelity"].get<double>() >= 1.0 - 1e-6);
  CHECK(j["best_t"].get<double>() == doctest::Approx(2.2214).epsilon(1e-4));

  double previous = 0.0;
  for (const char* horizon : {"20", "60", "120"}) {
    const auto r = run({"simulate", "11", "2", "10", "--t-max", horizon, "--json"});
    const double best = nlohmann::json::parse(r.out)["best_fidelity"].get<double>();
    CHECK(best >= previous);
    previous = best;
  }

  const auto path = std::filesystem::temp_directory_path() / "pgst_curve_test.csv";
  CHECK(run({"simulate", "2", "1", "2", "--t-max", "1", "--step", "0.25", "--csv", path.string()}).code == 0);
  const auto curve = lines(read_file(path));
  std::filesystem::remove(path);
  REQUIRE(curve.size() == 6);
  CHECK(curve[0] == "t,fidelity");
  CHECK(curve[1] == "0,0");
  CHECK(curve[3] == "0.5,0.22984884706593015");  // sin(0.5)^2

  CHECK(run({"simulate", "2", "1", "2", "--t-max", "0"}).code == 2);
  CHECK(run({"simulate", "2", "1", "2", "--t-max", "1", "--step", "2"}).code == 2);
  CHECK(run({"simulate", "2", "1", "3"}).code == 2);
  CHECK(run({"simulate", "2", "1", "2", "--precision", "16"}).code == 2);
}

TEST_CASE("spectrum") {
  const auto p3 = run({"spectrum", "3"});
  REQUIRE(p3.code == 0);
  const auto p3_lines = lines(p3.out);
  CHECK(p3_lines[1] == "1 1.4142135623731");
  CHECK(p3_lines[2] == "2 0");
  CHECK(p3_lines[3] == "3 -1.4142135623731");

  const auto p1 = run({"spectrum", "1"});
  CHECK(lines(p1.out)[1] == "1 0");

  const auto p11 = run({"spectrum", "11"});
  bool found = false;
  for (const auto& l : lines(p11.out)) {
    if (l.rfind("2:", 0) == 0) {
      CHECK(l == "2: x x x x x . x x x x x");
      found = true;
    }
  }
  CHECK(found);

  const auto json = nlohmann::json::parse(run({"spectrum", "11", "--json"}).out);
  CHECK(json["supports"][1]["support"].size() == 10);

  CHECK(run({"spectrum", "0"}).code == 2);
}

TEST_CASE("precision environment variable") {
  setenv(pgst::cli::kPrecisionEnv, "12", 1);
  CHECK(run({"spectrum", "3"}).code == 2);
  setenv(pgst::cli::kPrecisionEnv, "256", 1);
  CHECK(run({"spectrum", "3"}).code == 0);
  unsetenv(pgst::cli::kPrecisionEnv);
}

TEST_CASE("hidden oracle command") {
  const auto r = run({"oracle", "3", "1", "--bound", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3 relations, lattice rank 1") != std::string::npos);
  CHECK(run({"--help"}).out.find("oracle") == std::string::npos);
  CHECK(run({}).code == 2);
}
