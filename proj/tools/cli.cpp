#include "cli.hpp"

#include "pgst/decider.hpp"
#include "pgst/oracle.hpp"
#include "pgst/path_spectrum.hpp"
#include "pgst/report.hpp"
#include "pgst/walk.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace pgst::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_real(double value, int digits) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

std::string join(const std::vector<BigInt>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += values[i].str();
  }
  return out + ")";
}

unsigned default_precision() {
  const char* text = std::getenv(kPrecisionEnv);
  if (text == nullptr || *text == '\0') return kDefaultPrecisionBits;
  char* end = nullptr;
  const unsigned long bits = std::strtoul(text, &end, 10);
  if (*end != '\0' || bits < kMinWalkPrecisionBits || bits > 1u << 16) {
    throw UsageError(std::string(kPrecisionEnv) + " must be an integer in [64, 65536]");
  }
  return static_cast<unsigned>(bits);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  return file;
}

// Witnesses are re-verified before they are printed; a failure is fatal.
void check_witness(const PathSpec& spec, const PgstVerdict& verdict) {
  if (!verdict.witness) return;
  if (!verify_relation(spec, verdict.a, *verdict.witness) ||
      relation_parity(*verdict.witness, sigma_vector(spec, verdict.a)) != 1) {
    throw InvariantViolation("witness for (" + std::to_string(verdict.n) + ", " + std::to_string(verdict.a) + ", " +
                             std::to_string(verdict.b) + ") failed re-verification");
  }
}

// --- decide ---------------------------------------------------------------

struct DecideArgs {
  int n = 0;
  int a = 0;
  int b = 0;
  bool json = false;
};

int cmd_decide(const DecideArgs& args, std::ostream& out) {
  const PathSpec spec(args.n);
  const PgstVerdict verdict = decide_pgst(spec, args.a, args.b);
  check_witness(spec, verdict);
  ReportRecord record = make_record(verdict);
  if (args.a == 1 && args.b == args.n && args.n >= 2) {
    record.end_rule_match = (verdict.answer == Answer::yes) == end_vertex_rule(args.n);
  }

  if (args.json) {
    out << to_json_line(record) << "\n";
    return kExitOk;
  }
  out << "path P_" << args.n << ", vertices " << args.a << " and " << args.b << "\n";
  out << "verdict: " << to_string(verdict.answer) << " (" << to_string(verdict.reason) << ")\n";
  if (verdict.reason == Reason::all_parities_even || verdict.reason == Reason::parity_violation) {
    out << "relation lattice rank: "
        << (verdict.reason == Reason::all_parities_even ? std::to_string(verdict.parities.size()) : std::string("-"))
        << "\n";
  }
  if (record.witness) out << "witness l_1..l_n: " << join(*record.witness) << "\n";
  if (record.theorem2_match) out << "(n, a) is in the 2^t p - 1 family: transfer is guaranteed\n";
  return kExitOk;
}

// --- scan -----------------------------------------------------------------

struct ScanArgs {
  int n_min = 0;
  int n_max = 0;
  std::string pairs = "ends";
  std::string csv_path;
  bool json = false;
  int cap = 128;
};

int cmd_scan(const ScanArgs& args, std::ostream& out) {
  if (args.n_min < 2 || args.n_max < args.n_min || args.n_max > args.cap) {
    throw UsageError("scan range must satisfy 2 <= n_min <= n_max <= " + std::to_string(args.cap));
  }
  std::vector<ReportRecord> records;
  for (int n = args.n_min; n <= args.n_max; ++n) {
    const PathSpec spec(n);
    const int last_a = args.pairs == "ends" ? 1 : (n + 1) / 2;
    for (int a = 1; a <= last_a; ++a) {
      const int b = n + 1 - a;
      const PgstVerdict verdict = decide_pgst(spec, a, b);
      check_witness(spec, verdict);
      ReportRecord record = make_record(verdict);
      if (a == 1) record.end_rule_match = (verdict.answer == Answer::yes) == end_vertex_rule(n);
      if (record.theorem2_match && verdict.answer != Answer::yes) {
        throw InvariantViolation("family member (" + std::to_string(n) + ", " + std::to_string(a) + ") decided no");
      }
      records.push_back(std::move(record));
    }
  }

  std::ostringstream csv;
  csv << kCsvHeader << "\n";
  for (const auto& r : records) csv << to_csv_row(r) << "\n";
  if (!args.csv_path.empty()) open_output(args.csv_path) << csv.str();

  if (args.json) {
    for (const auto& r : records) out << to_json_line(r) << "\n";
  } else {
    out << csv.str();
  }
  return kExitOk;
}

// --- simulate -------------------------------------------------------------

struct SimulateArgs {
  int n = 0;
  int a = 0;
  int b = 0;
  double t_max = 100.0;
  std::optional<double> step;
  int refine = 60;
  std::optional<unsigned> precision;
  std::string csv_path;
  bool json = false;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
  const PathSpec spec(args.n);
  ScanOptions options;
  options.t_max = args.t_max;
  options.step = args.step.value_or(default_scan_step(spec));
  options.refine_iterations = args.refine;
  options.bits = args.precision.value_or(default_precision());
  const ScanResult result = max_fidelity_scan(spec, args.a, args.b, options);

  if (!args.csv_path.empty()) {
    const auto last = static_cast<std::size_t>(options.t_max / options.step * (1.0 + 1e-12));
    std::vector<double> grid;
    grid.reserve(last + 1);
    for (std::size_t k = 0; k <= last; ++k) grid.push_back(static_cast<double>(k) * options.step);
    auto file = open_output(args.csv_path);
    file << "t,fidelity\n";
    for (const auto& sample : fidelity_curve(spec, args.a, args.b, grid, options.bits)) {
      file << format_real(sample.t, 17) << "," << format_real(sample.fidelity, 17) << "\n";
    }
  }

  if (args.json) {
    nlohmann::ordered_json j;
    j["n"] = args.n;
    j["a"] = args.a;
    j["b"] = args.b;
    j["best_t"] = result.best_t;
    j["best_fidelity"] = result.best_fidelity;
    j["samples_evaluated"] = result.samples_evaluated;
    j["t_max"] = result.t_max;
    j["step"] = result.step;
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "best_t " << format_real(result.best_t, 17) << "\n";
  out << "best_fidelity " << format_real(result.best_fidelity, 17) << "\n";
  out << "samples_evaluated " << result.samples_evaluated << "\n";
  out << "t_max " << format_real(result.t_max, 17) << "\n";
  out << "step " << format_real(result.step, 17) << "\n";
  return kExitOk;
}

// --- spectrum -------------------------------------------------------------

struct SpectrumArgs {
  int n = 0;
  bool json = false;
};

int cmd_spectrum(const SpectrumArgs& args, std::ostream& out) {
  const PathSpec spec(args.n);
  const unsigned bits = default_precision();
  const auto values = eigenvalues(spec);
  std::vector<SupportSet> supports;
  for (int a = 1; a <= spec.n(); ++a) supports.push_back(eigenvalue_support(spec, a));

  if (args.json) {
    nlohmann::ordered_json j;
    j["n"] = spec.n();
    auto list = nlohmann::ordered_json::array();
    for (const auto& e : values) list.push_back({{"j", e.index}, {"theta", format_real(e.value(bits).to_double(), 15)}});
    j["eigenvalues"] = std::move(list);
    auto table = nlohmann::ordered_json::array();
    for (const auto& s : supports) table.push_back({{"vertex", s.vertex}, {"support", s.indices}});
    j["supports"] = std::move(table);
    out << j.dump() << "\n";
    return kExitOk;
  }

  out << "j theta_j\n";
  for (const auto& e : values) out << e.index << " " << format_real(e.value(bits).to_double(), 15) << "\n";
  out << "\nsupport (vertex: x marks j in the support)\n";
  for (const auto& s : supports) {
    out << s.vertex << ":";
    for (int j = 1; j <= spec.n(); ++j) out << " " << (s.contains(j) ? "x" : ".");
    out << "\n";
  }
  return kExitOk;
}

// --- oracle (hidden) ------------------------------------------------------

struct OracleArgs {
  int n = 0;
  int a = 0;
  int bound = 3;
};

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
  const PathSpec spec(args.n);
  const auto relations = brute_force_relations(spec, args.a, args.bound);
  const RelationLattice lattice = relation_lattice(spec, args.a);
  const LatticeMembership membership(lattice.basis, lattice.support.size());
  const SigmaVector sigma = sigma_vector(spec, args.a);
  bool all_in_span = true;
  for (const auto& rel : relations) {
    const bool in_span = membership.coefficients(rel.relation).has_value();
    all_in_span = all_in_span && in_span;
    out << join(rel.relation) << " parity " << relation_parity(rel.relation, sigma) << (in_span ? "" : " NOT-IN-SPAN")
        << "\n";
  }
  out << relations.size() << " relations, lattice rank " << lattice.rank() << "\n";
  return all_in_span ? kExitOk : kExitInternal;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decision and simulation of pretty good state transfer on paths"};
  app.require_subcommand(1);

  DecideArgs decide;
  auto* decide_cmd = app.add_subcommand("decide", "Decide pretty good state transfer between vertices a and b of P_n");
  decide_cmd->add_option("n", decide.n, "Number of vertices")->required();
  decide_cmd->add_option("a", decide.a, "First vertex")->required();
  decide_cmd->add_option("b", decide.b, "Second vertex")->required();
  decide_cmd->add_flag("--json", decide.json, "Emit one JSON object");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Decide every requested mirror pair for n in [n_min, n_max]");
  scan_cmd->add_option("n_min", scan.n_min)->required();
  scan_cmd->add_option("n_max", scan.n_max)->required();
  scan_cmd->add_option("--pairs", scan.pairs, "ends | all-cospectral")
      ->check(CLI::IsMember({"ends", "all-cospectral"}));
  scan_cmd->add_option("--csv", scan.csv_path, "Also write the CSV table to this file");
  scan_cmd->add_flag("--json", scan.json, "Emit JSON lines instead of CSV on stdout");
  scan_cmd->add_option("--cap", scan.cap, "Largest allowed n")->capture_default_str();

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Scan the transfer fidelity for its maximum over [0, t_max]");
  sim_cmd->add_option("n", sim.n)->required();
  sim_cmd->add_option("a", sim.a)->required();
  sim_cmd->add_option("b", sim.b)->required();
  sim_cmd->add_option("--t-max", sim.t_max, "Scan horizon")->capture_default_str();
  sim_cmd->add_option("--step", sim.step, "Grid spacing (default min(0.01, pi/(8 theta_1)))");
  sim_cmd->add_option("--refine", sim.refine, "Bracket refinement iterations")->capture_default_str();
  sim_cmd->add_option("--precision", sim.precision, "MPFR precision in bits");
  sim_cmd->add_option("--csv", sim.csv_path, "Write the grid curve t,fidelity to this file");
  sim_cmd->add_flag("--json", sim.json, "Emit one JSON object");

  SpectrumArgs spectrum;
  auto* spec_cmd = app.add_subcommand("spectrum", "List eigenvalues and vertex eigenvalue supports of P_n");
  spec_cmd->add_option("n", spectrum.n)->required();
  spec_cmd->add_flag("--json", spectrum.json, "Emit one JSON object");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "");
  oracle_cmd->group("");
  oracle_cmd->add_option("n", oracle.n)->required();
  oracle_cmd->add_option("a", oracle.a)->required();
  oracle_cmd->add_option("--bound", oracle.bound)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*decide_cmd) return cmd_decide(decide, out);
    if (*scan_cmd) return cmd_scan(scan, out);
    if (*sim_cmd) return cmd_simulate(sim, out);
    if (*spec_cmd) return cmd_spectrum(spectrum, out);
    if (*oracle_cmd) return cmd_oracle(oracle, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace pgst::cli
