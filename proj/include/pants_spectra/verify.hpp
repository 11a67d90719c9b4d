#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pants_spectra/ledger.hpp"
#include "pants_spectra/pants.hpp"

namespace pants_spectra {

// ---------------------------------------------------------------------------
// Types.
// ---------------------------------------------------------------------------

/**
 * @brief Two pants metrics on the same marked surface: their cusp patterns
 *        must match (l_i = 0 in x1 iff l_i = 0 in x2).
 */
struct MetricPair {
  PantsMetric x1;
  PantsMetric x2;

  /// Validate both metrics and the cusp-pattern match.
  /// @throws std::domain_error on mismatch.
  [[nodiscard]] static MetricPair make(const PantsMetric& a,
                                       const PantsMetric& b);

  /// The same pair with the two metrics exchanged.
  [[nodiscard]] MetricPair swapped() const { return {x2, x1}; }
};

/// Validate a pair's metrics and matching cusp patterns.
void validate_pair(const MetricPair& pair);

/// True when every non-cusp boundary length of both metrics is <= eps0.
[[nodiscard]] bool in_relative_part(const MetricPair& pair, double eps0);

/// One class's lengths in both metrics and the symmetrized ratio.
/// Cusp-invalidated classes carry l1 = l2 = 0 and ratio_max = 1.
struct ClassRatio {
  std::string class_name;  ///< "curve:i", "seam:i,j", or "loop:i"
  double l1 = 0.0;
  double l2 = 0.0;
  double ratio_max = 1.0;  ///< max(l1/l2, l2/l1), or 1 for cusp classes
};

/// One verified inequality, always phrased as lhs <= rhs.
struct CheckRecord {
  std::string name;         ///< stable base name + "(subject)" decorations
  double bound_used = 0.0;  ///< the constant the rhs was built from
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

/// Ratio suprema for one pair plus every inequality checked on it.
struct RatioReport {
  std::vector<ClassRatio> per_class;  ///< all 9 classes, canonical order
  double sup_curves = 1.0;
  double sup_arcs = 1.0;
  double sup_all = 1.0;  ///< max(sup_curves, sup_arcs), exactly
  std::vector<CheckRecord> checks;
};

// ---------------------------------------------------------------------------
// Ratio suprema.
// ---------------------------------------------------------------------------

/// Symmetrized curve-ratio supremum: max over non-cusp boundaries i of
/// max(l1_i/l2_i, l2_i/l1_i).  @throws std::domain_error if all boundaries
/// are cusps (no closed curves exist).
[[nodiscard]] double ratio_sup_curves(const MetricPair& pair);

/// Symmetrized arc-ratio supremum over the valid arc classes.
/// @throws std::domain_error if the arc family is empty (all cusps).
[[nodiscard]] double ratio_sup_arcs(const MetricPair& pair);

// ---------------------------------------------------------------------------
// Inequality checks.  All "_12" ratios are metric-1 over metric-2 in the
// orientation of the pair as passed; callers wanting the reverse pass
// pair.swapped().  A ratio touching a cusp class counts as 1 ("0/0 = 1").
// ---------------------------------------------------------------------------

/// max(sup_curves, sup_arcs) <= ledger.K * sup_curves.
[[nodiscard]] CheckRecord check_theorem_key(const MetricPair& pair,
                                            const ConstantLedger& ledger);

/// log(sup_all) <= log(sup_curves) + ledger.C, and structurally
/// log(sup_curves) <= log(sup_all); pass requires both.
[[nodiscard]] CheckRecord check_theorem_main(const MetricPair& pair,
                                             const ConstantLedger& ledger);

/**
 * @brief Seam-arc ratio bound: with beta = Seam(i,j),
 *        l1(beta)/l2(beta) <= K * max{1, r(third boundary),
 *                                     l2(i)/l1(i), l2(j)/l1(j)},
 *        where r(third) = l1(k)/l2(k) (1 if cusp) and K = ledger.K1 when
 *        eps0 < eps_star, else ledger.K3.
 */
[[nodiscard]] CheckRecord check_diff_boundary(const MetricPair& pair, int i,
                                              int j,
                                              const ConstantLedger& ledger);

/**
 * @brief Loop-arc ratio bound: with beta = Loop(i) and the other two
 *        boundaries alpha, alpha' ordered so l1(alpha) >= l1(alpha'),
 *        l1(beta)/l2(beta) <= K * max{1, l1(alpha)/l2(alpha),
 *                                     l1(alpha')/l2(alpha'), l2(i)/l1(i)},
 *        K = ledger.K2 when eps0 < eps_star, else ledger.K4.
 */
[[nodiscard]] CheckRecord check_same_boundary(const MetricPair& pair, int i,
                                              const ConstantLedger& ledger);

/**
 * @brief Every decomposition-level inequality applicable to the pair, one
 *        record per lemma per arc class (both metrics / both orientations
 *        where the inequality is one-sided).
 *
 * Emitted families (regime chosen by eps0 < eps_star or not):
 *   - middle-length floors against the measured infimum (M0_empirical,
 *     or Mprime/M0prime in the large-threshold regime), slack 1e-9;
 *   - |half-neighbor - middle| gap bounds (D1 seams, D2 loops; small
 *     regime only);
 *   - middle-ratio bounds (K1prime/K2prime or K3prime/K4prime);
 *   - factor-2 collar-segment ratio bounds whenever both metrics' segment
 *     exists (the explicit constant 2, no ledger slack);
 *   - collar-over-middle ratio bounds (K3dprime/K3tprime/K4dprime; large
 *     regime only);
 *   - the collar-segment sandwich lower/upper bounds, exact.
 */
[[nodiscard]] std::vector<CheckRecord> check_lemma_suite(
    const MetricPair& pair, const ConstantLedger& ledger);

/**
 * @brief One-sided thick-part comparison: requires every non-cusp boundary
 *        length of both metrics in [eps, ledger.eps0]; reports the smallest
 *        K0 with  max over curves+arcs of l2(.)/l1(.)
 *                   <= K0 * max over curves of l2(.)/l1(.)
 *        in bound_used (pass is always true when computable — the bound is
 *        empirical, not asserted against a ledger constant).
 *
 * @throws std::domain_error when the thickness precondition fails.
 */
[[nodiscard]] CheckRecord check_thick_part(const MetricPair& pair, double eps,
                                           const ConstantLedger& ledger);

/**
 * @brief Randomized infimum of middle-segment lengths: samples pants with
 *        boundary lengths log-uniform in [1e-6, eps0] and returns the
 *        smallest middle over all arc classes and samples.  Deterministic
 *        given the seed (single fixed-order stream).
 */
[[nodiscard]] double empirical_infimum_middle(double eps0,
                                              std::uint64_t samples,
                                              std::uint64_t seed);

/// Full report for one pair: per-class ratios, suprema, and every check
/// (theorems, seam/loop ratio bounds in both orientations, the lemma suite,
/// and the thick-part record when thick_eps is given).
[[nodiscard]] RatioReport make_ratio_report(
    const MetricPair& pair, const ConstantLedger& ledger,
    std::optional<double> thick_eps = std::nullopt);

// ---------------------------------------------------------------------------
// Randomized sweep.
// ---------------------------------------------------------------------------

struct SweepConfig {
  double eps0 = 0.3;
  std::uint64_t n_pairs = 0;
  std::uint64_t seed = 0;
  /// Cusps occupy the highest boundary indices (0, 1, or 2 of them).
  int n_cusps = 0;
  /// When set, sample lengths in [thick_eps, eps0] and run the thick-part
  /// check on every pair.
  std::optional<double> thick_eps;
};

/// Slim per-pair outcome; the full RatioReport for any row is recoverable
/// deterministically via make_ratio_report on (a, b).
struct SweepRow {
  std::uint64_t pair_id = 0;
  PantsMetric a;
  PantsMetric b;
  double sup_curves = 1.0;
  double sup_arcs = 1.0;
  double empirical_k = 1.0;  ///< sup_all / sup_curves for this pair
  bool theorem_key_pass = false;
  bool theorem_main_pass = false;
  bool all_checks_pass = false;
  bool error = false;
  std::string error_message;
};

/// Applications and failures of one check family across a sweep.
struct CheckTally {
  std::uint64_t applied = 0;
  std::uint64_t failed = 0;
};

struct SweepSummary {
  double eps0 = 0.3;
  std::uint64_t n_pairs = 0;
  std::uint64_t seed = 0;
  int n_cusps = 0;
  std::optional<double> thick_eps;
  /// Tightest constant that would have sufficed: max over pairs of
  /// sup_all / sup_curves (1 when no pairs).
  double empirical_min_K = 1.0;
  double empirical_min_C = 0.0;  ///< log(empirical_min_K)
  PantsMetric worst_a;           ///< inputs attaining empirical_min_K
  PantsMetric worst_b;
  std::uint64_t pairs_all_checks_passed = 0;
  std::uint64_t pairs_with_failures = 0;
  std::uint64_t errors = 0;
  /// Base check name -> (applied, failed) across all pairs.
  std::map<std::string, CheckTally> tallies;
  /// Thick sweeps only: max over pairs/orientations of the per-pair K0.
  std::optional<double> empirical_K0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

/**
 * @brief Deterministic randomized sweep: n_pairs metric pairs sampled
 *        log-uniformly (per-pair substream seed ^ golden-ratio stream), the
 *        full check battery run on each, outcomes and aggregate counts
 *        returned.  Evaluation may be parallel (PANTS_SPECTRA_THREADS caps
 *        the thread count); results are order-independent and identical for
 *        identical configs.  Per-pair numeric failures are recorded in the
 *        row, never thrown.
 */
[[nodiscard]] SweepResult sweep(const SweepConfig& config);

}  // namespace pants_spectra
