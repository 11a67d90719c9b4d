// pants-spectra: batch CLI over the pants-spectra library.
//
// Exit codes: 0 success and every check passed; 1 a check failed or a
// computation could not be verified; 2 usage, parse, or input-domain errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pants_spectra/decompose.hpp"
#include "pants_spectra/halving_family.hpp"
#include "pants_spectra/io.hpp"
#include "pants_spectra/ledger.hpp"
#include "pants_spectra/pants.hpp"
#include "pants_spectra/verify.hpp"

namespace {

namespace ps = pants_spectra;
using nlohmann::json;

/// Write `text` to the file at `path`, or to standard output when empty.
void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << text;
  f.flush();
  if (!f) throw std::runtime_error("failed writing output file: " + path);
}

[[nodiscard]] std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run_pants(const std::string& metric_str, const std::string& format,
              const std::string& out) {
  const ps::PantsMetric p = ps::PantsMetric::parse(metric_str);
  const std::vector<ps::SpectrumEntry> rows = ps::spectrum(p);
  if (format == "csv") {
    write_output(ps::spectrum_csv(rows), out);
  } else {
    write_output(dump(json{{"metric", p}, {"spectrum", rows}}), out);
  }
  return 0;
}

int run_decompose(const std::string& metric_str, double eps0,
                  const std::string& arc_str, const std::string& format,
                  const std::string& out) {
  const ps::PantsMetric p = ps::PantsMetric::parse(metric_str);
  const ps::ConstantLedger ledger = ps::build_ledger(eps0);
  std::vector<ps::Decomposition> rows;
  if (arc_str.empty()) {
    rows = ps::decompose_all(p, ledger);
  } else {
    rows.push_back(ps::decompose_arc(p, ps::ArcClass::parse(arc_str), ledger));
  }
  if (format == "csv") {
    write_output(ps::decompositions_csv(rows), out);
  } else {
    write_output(dump(json{{"metric", p},
                           {"eps0", eps0},
                           {"decompositions", rows}}),
                 out);
  }
  return 0;
}

int run_constants(double eps0, const std::string& format,
                  const std::string& out) {
  const ps::ConstantLedger ledger = ps::build_ledger(eps0);
  if (format == "csv") {
    write_output(ps::ledger_csv(ledger), out);
  } else {
    write_output(dump(json(ledger)), out);
  }
  return 0;
}

int run_check(const std::string& a_str, const std::string& b_str, double eps0,
              std::optional<double> thick_eps, const std::string& format,
              const std::string& out) {
  const ps::MetricPair pair = ps::MetricPair::make(
      ps::PantsMetric::parse(a_str), ps::PantsMetric::parse(b_str));
  const ps::ConstantLedger ledger = ps::build_ledger(eps0);
  const ps::RatioReport report =
      ps::make_ratio_report(pair, ledger, thick_eps);
  if (format == "csv") {
    write_output(ps::checks_csv(report.checks), out);
  } else {
    write_output(dump(json{{"metric_a", pair.x1},
                           {"metric_b", pair.x2},
                           {"eps0", eps0},
                           {"report", report}}),
                 out);
  }
  std::uint64_t failed = 0;
  for (const ps::CheckRecord& c : report.checks) {
    if (!c.pass) {
      ++failed;
      std::cerr << "FAIL " << c.name << ": lhs = " << ps::g17(c.lhs)
                << ", rhs = " << ps::g17(c.rhs) << "\n";
    }
  }
  if (failed > 0) {
    std::cerr << failed << " of " << report.checks.size()
              << " checks failed for metrics " << a_str << " vs " << b_str
              << "\n";
    return 1;
  }
  return 0;
}

int run_sweep(double eps0, std::uint64_t samples, std::uint64_t seed,
              int n_cusps, std::optional<double> thick_eps,
              const std::string& format, const std::string& out) {
  ps::SweepConfig config;
  config.eps0 = eps0;
  config.n_pairs = samples;
  config.seed = seed;
  config.n_cusps = n_cusps;
  config.thick_eps = thick_eps;
  const ps::SweepResult result = ps::sweep(config);
  if (format == "csv") {
    write_output(ps::sweep_rows_csv(result.rows), out);
  } else {
    write_output(dump(json(result.summary)), out);
  }
  const ps::SweepSummary& s = result.summary;
  if (s.pairs_with_failures > 0 || s.errors > 0) {
    for (const auto& [name, tally] : s.tallies) {
      if (tally.failed > 0) {
        std::cerr << "FAIL " << name << ": " << tally.failed << " of "
                  << tally.applied << " applications failed\n";
      }
    }
    if (s.errors > 0) {
      std::cerr << s.errors << " pair(s) raised errors; see per-row "
                << "error_message in the CSV/JSON rows\n";
    }
    std::cerr << s.pairs_with_failures << " of " << s.n_pairs
              << " pairs had failing checks\n";
    return 1;
  }
  return 0;
}

int run_counterexample(const std::string& base_str, int steps, double eps0,
                       const std::string& format, const std::string& out) {
  std::cerr
      << "NOTE: boundary-halving surrogate. This family halves every "
         "boundary length exactly at each step, keeping precisely the two "
         "properties the divergence argument uses (curve lengths "
         "non-increasing — here exactly halved; boundary lengths at least "
         "halved). It models the phenomenon; it is not the literal "
         "extension construction.\n";
  const ps::PantsMetric base = ps::PantsMetric::parse(base_str);
  const std::vector<ps::DivergenceRow> rows =
      ps::divergence_table(base, steps);
  const ps::GrowthRateReport growth = ps::growth_rate_check(base, steps);
  const ps::CoexistenceReport coexistence =
      ps::coexistence_check(base, steps, eps0);

  bool curve_sup_bounded = true;
  bool arc_sup_increasing = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    curve_sup_bounded = curve_sup_bounded && rows[i].curve_sup <= 1.0;
    if (i + 1 < rows.size()) {
      arc_sup_increasing =
          arc_sup_increasing && rows[i + 1].arc_sup > rows[i].arc_sup;
    }
  }
  const bool pass = growth.pass && coexistence.pass && curve_sup_bounded &&
                    arc_sup_increasing;

  if (format == "csv") {
    write_output(ps::divergence_csv(rows), out);
  } else {
    write_output(dump(json{{"base", base},
                           {"steps", steps},
                           {"eps0", eps0},
                           {"pass", pass},
                           {"curve_sup_bounded", curve_sup_bounded},
                           {"arc_sup_strictly_increasing", arc_sup_increasing},
                           {"rows", rows},
                           {"growth", growth},
                           {"coexistence", coexistence}}),
                 out);
  }
  if (!pass) {
    if (!growth.pass) {
      std::cerr << "FAIL growth rate: max |increment - 2 ln 2| = "
                << ps::g17(growth.max_abs_deviation) << " > tolerance "
                << ps::g17(growth.tolerance) << "\n";
    }
    if (!coexistence.pass) {
      std::cerr << "FAIL coexistence: a (member(n), base) pair violated the "
                << "symmetrized ratio bound\n";
    }
    if (!curve_sup_bounded) {
      std::cerr << "FAIL curve ratio: a one-sided curve supremum exceeded 1\n";
    }
    if (!arc_sup_increasing) {
      std::cerr << "FAIL arc ratio: the arc supremum is not strictly "
                << "increasing\n";
    }
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pants-spectra: exact hyperbolic length spectra of simple closed "
      "curves and arcs on pairs of pants, with ratio-bound verification"};
  app.require_subcommand(1);

  // Shared option storage.
  std::string metric_str;
  std::string metric_a_str;
  std::string metric_b_str;
  std::string arc_str;
  std::string base_str;
  std::string format = "json";
  std::string out_path;
  double eps0 = 0.3;
  double thick_eps_value = 0.0;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  int n_cusps = 0;
  int steps = 30;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path,
                    "Output file path (default: standard output)");
  };

  CLI::App* pants_cmd =
      app.add_subcommand("pants", "Print the nine-class length spectrum");
  pants_cmd->add_option("--metric", metric_str, "Boundary lengths l1,l2,l3")
      ->required();
  add_format(pants_cmd);

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "Split arcs into collar segments and middle part");
  decompose_cmd
      ->add_option("--metric", metric_str, "Boundary lengths l1,l2,l3")
      ->required();
  decompose_cmd->add_option("--eps0", eps0, "Relative-part threshold")
      ->capture_default_str();
  decompose_cmd->add_option("--arc", arc_str,
                            "Single arc class (\"seam:i,j\" or \"loop:i\"; "
                            "default: all valid arcs)");
  add_format(decompose_cmd);

  CLI::App* constants_cmd = app.add_subcommand(
      "constants", "Print the constant ledger for a threshold eps0");
  constants_cmd->add_option("--eps0", eps0, "Relative-part threshold")
      ->required();
  add_format(constants_cmd);

  CLI::App* check_cmd = app.add_subcommand(
      "check", "Run every ratio and decomposition check on one metric pair");
  check_cmd->add_option("--metric-a", metric_a_str, "First metric l1,l2,l3")
      ->required();
  check_cmd->add_option("--metric-b", metric_b_str, "Second metric l1,l2,l3")
      ->required();
  check_cmd->add_option("--eps0", eps0, "Relative-part threshold")
      ->required();
  CLI::Option* check_thick = check_cmd->add_option(
      "--thick-eps", thick_eps_value,
      "Also run the one-sided thick-part check with this lower bound");
  add_format(check_cmd);

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Check random metric pairs drawn in the relative part");
  sweep_cmd->add_option("--eps0", eps0, "Relative-part threshold")
      ->required();
  sweep_cmd->add_option("--samples", samples, "Number of random pairs")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", seed, "Sampling seed")
      ->capture_default_str();
  sweep_cmd
      ->add_option("--cusps", n_cusps,
                   "Number of cusps per metric (0, 1, or 2)")
      ->capture_default_str();
  CLI::Option* sweep_thick = sweep_cmd->add_option(
      "--thick-eps", thick_eps_value,
      "Sample thick pairs (lengths >= this) and run the one-sided check");
  add_format(sweep_cmd);

  CLI::App* counter_cmd = app.add_subcommand(
      "counterexample",
      "Divergence of arc ratios along the boundary-halving family");
  counter_cmd->add_option("--base", base_str, "Base metric l1,l2,l3")
      ->required();
  counter_cmd->add_option("--steps", steps, "Number of halvings N")
      ->capture_default_str();
  counter_cmd->add_option("--eps0", eps0,
                          "Threshold for the coexistence check")
      ->capture_default_str();
  add_format(counter_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e);
    return cli_code == 0 ? 0 : 2;
  }

  try {
    if (*pants_cmd) return run_pants(metric_str, format, out_path);
    if (*decompose_cmd) {
      return run_decompose(metric_str, eps0, arc_str, format, out_path);
    }
    if (*constants_cmd) return run_constants(eps0, format, out_path);
    if (*check_cmd) {
      std::optional<double> thick;
      if (*check_thick) thick = thick_eps_value;
      return run_check(metric_a_str, metric_b_str, eps0, thick, format,
                       out_path);
    }
    if (*sweep_cmd) {
      std::optional<double> thick;
      if (*sweep_thick) thick = thick_eps_value;
      return run_sweep(eps0, samples, seed, n_cusps, thick, format, out_path);
    }
    if (*counter_cmd) {
      return run_counterexample(base_str, steps, eps0, format, out_path);
    }
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
