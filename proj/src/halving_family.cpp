#include "pants_spectra/halving_family.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pants_spectra/ledger.hpp"
#include "pants_spectra/verify.hpp"

namespace pants_spectra {
namespace {

/// Allowed deviation of a per-step seam increment from its 2 ln 2 limit.
constexpr double kGrowthIncrementTolerance = 0.01;

/// Increments are tested only from this step on, where the asymptotic
/// regime has set in for any base within the supported range.
constexpr int kGrowthFirstStep = 10;

void require_no_cusps(const PantsMetric& base) {
  validate_metric(base);
  for (int i = 1; i <= 3; ++i) {
    if (base.is_cusp(i)) {
      throw std::domain_error(
          "the halving family requires three geodesic boundaries; boundary " +
          std::to_string(i) + " is a cusp");
    }
  }
}

void require_feasible_steps(const HalvingFamily& family, int N) {
  if (N < 1) {
    throw std::domain_error("at least one halving step is required (got " +
                            std::to_string(N) + ")");
  }
  const int max_n = family.max_feasible_steps();
  if (N > max_n) {
    std::ostringstream os;
    os << "after " << N << " halvings a boundary length would fall below "
       << kMinBoundaryLength << "; the largest feasible step count for this "
       << "base is " << max_n;
    throw std::domain_error(os.str());
  }
}

/// Seam(1,2) lengths on members first_n..last_n (inclusive).
[[nodiscard]] std::vector<double> member_seam_lengths(
    const HalvingFamily& family, int first_n, int last_n) {
  std::vector<double> lengths;
  lengths.reserve(static_cast<std::size_t>(last_n - first_n + 1));
  for (int n = first_n; n <= last_n; ++n) {
    lengths.push_back(seam_length(family.member(n), 1, 2));
  }
  return lengths;
}

}  // namespace

HalvingFamily HalvingFamily::make(const PantsMetric& base) {
  require_no_cusps(base);
  return HalvingFamily{base};
}

PantsMetric HalvingFamily::member(int n) const {
  if (n < 0) {
    throw std::domain_error("halving step must be nonnegative (got " +
                            std::to_string(n) + ")");
  }
  const PantsMetric m{std::ldexp(base.l1, -n), std::ldexp(base.l2, -n),
                      std::ldexp(base.l3, -n)};
  validate_metric(m);
  return m;
}

int HalvingFamily::max_feasible_steps() const {
  const double min_l = std::min({base.l1, base.l2, base.l3});
  int n = static_cast<int>(
      std::floor(std::log2(min_l / kMinBoundaryLength)));
  // Settle floating-point rounding of the logarithm exactly.
  while (n > 0 && std::ldexp(min_l, -n) < kMinBoundaryLength) --n;
  while (std::ldexp(min_l, -(n + 1)) >= kMinBoundaryLength) ++n;
  return n;
}

std::vector<DivergenceRow> divergence_table(const PantsMetric& base, int N) {
  const HalvingFamily family = HalvingFamily::make(base);
  require_feasible_steps(family, N);

  const double base_curve[4] = {0.0, base.l1, base.l2, base.l3};
  double base_arc[6];
  int slot = 0;
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) base_arc[slot++] = seam_length(base, i, j);
  }
  for (int i = 1; i <= 3; ++i) base_arc[slot++] = loop_arc_length(base, i);

  std::vector<DivergenceRow> rows;
  rows.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    const PantsMetric m = family.member(n);
    DivergenceRow row;
    row.n = n;
    row.l = m.l1;
    row.curve_sup = 0.0;
    for (int i = 1; i <= 3; ++i) {
      row.curve_sup = std::max(row.curve_sup, m.boundary(i) / base_curve[i]);
    }
    double member_arc[6];
    slot = 0;
    for (int i = 1; i <= 3; ++i) {
      for (int j = i + 1; j <= 3; ++j) {
        member_arc[slot++] = seam_length(m, i, j);
      }
    }
    for (int i = 1; i <= 3; ++i) member_arc[slot++] = loop_arc_length(m, i);
    row.arc_sup = 0.0;
    for (int s = 0; s < 6; ++s) {
      row.arc_sup = std::max(row.arc_sup, member_arc[s] / base_arc[s]);
    }
    row.seam_length = member_arc[0];  // seam(1,2) is the first slot
    row.loop_length = member_arc[3];  // loop(1) follows the three seams
    rows.push_back(row);
  }
  return rows;
}

GrowthRateReport growth_rate_check(const PantsMetric& base, int N) {
  const HalvingFamily family = HalvingFamily::make(base);
  require_feasible_steps(family, N);

  GrowthRateReport report;
  report.target = 2.0 * std::log(2.0);
  report.tolerance = kGrowthIncrementTolerance;
  if (N < kGrowthFirstStep + 1) {
    report.insufficient_data = true;
    report.pass = true;  // nothing to assert
    return report;
  }
  const std::vector<double> lengths =
      member_seam_lengths(family, kGrowthFirstStep, N);
  bool ok = true;
  for (std::size_t s = 0; s + 1 < lengths.size(); ++s) {
    const double increment = lengths[s + 1] - lengths[s];
    const double deviation = std::fabs(increment - report.target);
    report.max_abs_deviation = std::max(report.max_abs_deviation, deviation);
    ok = ok && deviation <= report.tolerance;
    ++report.increments_tested;
  }
  report.pass = ok;
  return report;
}

CoexistenceReport coexistence_check(const PantsMetric& base, int N,
                                    double eps0) {
  const HalvingFamily family = HalvingFamily::make(base);
  require_feasible_steps(family, N);
  const ConstantLedger ledger = build_ledger(eps0);

  CoexistenceReport report;
  report.pass = true;
  for (int n = 0; n <= N; ++n) {
    const MetricPair pair = MetricPair::make(family.member(n), base);
    const CheckRecord record = check_theorem_key(pair, ledger);
    report.pass = report.pass && record.pass;
    report.worst_lhs_over_rhs =
        std::max(report.worst_lhs_over_rhs, record.lhs / record.rhs);
    ++report.pairs_checked;
  }
  return report;
}

}  // namespace pants_spectra
