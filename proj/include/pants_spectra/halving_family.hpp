#pragma once

#include <cstdint>
#include <vector>

#include "pants_spectra/pants.hpp"

namespace pants_spectra {

/**
 * @brief Family of pants metrics obtained by exactly halving every boundary
 *        length n times: member(n) has boundary lengths l_i / 2^n.
 *
 * This is a surrogate model for extending a surface beyond its geodesic
 * boundary: it keeps exactly the two properties such an extension is known
 * to satisfy — curve lengths do not increase (here they are exactly halved)
 * and boundary lengths at least halve at each step — while every member
 * stays a pair of pants with closed-form length spectra.  On this family
 * the one-sided curve-ratio supremum member/base stays at 2^-n <= 1 while
 * the one-sided arc-ratio supremum diverges, the phenomenon of interest.
 */
struct HalvingFamily {
  PantsMetric base;

  /// Validate the base: three geodesic boundaries, no cusps.
  /// @throws std::domain_error on a cusped or out-of-range base.
  [[nodiscard]] static HalvingFamily make(const PantsMetric& base);

  /// The n-th member, each boundary length scaled by exactly 2^-n.
  /// @throws std::domain_error when n < 0 or a scaled length leaves the
  ///         supported range (the message names the largest feasible n).
  [[nodiscard]] PantsMetric member(int n) const;

  /// Largest n for which member(n) stays within the supported length range.
  [[nodiscard]] int max_feasible_steps() const;
};

/// One row of the divergence table for the halving family.
struct DivergenceRow {
  int n = 0;              ///< halving step
  double l = 0.0;         ///< first boundary length of member(n)
  double curve_sup = 0.0; ///< one-sided sup over curves of member/base (= 2^-n)
  double arc_sup = 0.0;   ///< one-sided sup over the six arcs of member/base
  double seam_length = 0.0;  ///< seam(1,2) length on member(n)
  double loop_length = 0.0;  ///< loop(1) length on member(n)
};

/**
 * @brief Rows n = 0..N of the one-sided ratio table member(n) vs base.
 *
 * The curve column is computed (not hard-coded) and equals 2^-n exactly in
 * floating point; the arc column is strictly increasing and unbounded in n.
 *
 * @throws std::domain_error when base has a cusp, N < 1, or N halvings
 *         would push a boundary length below the supported range (the
 *         message names the largest feasible N).
 */
[[nodiscard]] std::vector<DivergenceRow> divergence_table(
    const PantsMetric& base, int N);

/// Result of testing the asymptotic per-step growth of the seam length.
struct GrowthRateReport {
  bool insufficient_data = false;  ///< N too small to test any increment
  bool pass = false;            ///< all tested increments within tolerance
  double target = 0.0;          ///< expected increment, 2 ln 2
  double tolerance = 0.0;       ///< allowed |increment - target|
  double max_abs_deviation = 0.0;  ///< worst |increment - target| observed
  std::uint64_t increments_tested = 0;
};

/**
 * @brief Check that each halving step adds approximately 2 ln 2 to the
 *        seam(1,2) length: |(L_{n+1} - L_n) - 2 ln 2| <= 0.01 for
 *        n = 10..N-1.  With N < 11 there is no eligible increment; the
 *        report carries insufficient_data = true and asserts nothing.
 *
 * @throws std::domain_error under the same preconditions as
 *         divergence_table.
 */
[[nodiscard]] GrowthRateReport growth_rate_check(const PantsMetric& base,
                                                 int N);

/// Result of re-checking the two-sided ratio bound along the family.
struct CoexistenceReport {
  bool pass = false;             ///< every (member(n), base) pair passed
  std::uint64_t pairs_checked = 0;
  double worst_lhs_over_rhs = 0.0;  ///< max of lhs/rhs over the checked pairs
};

/**
 * @brief Verify that the symmetrized ratio bound sup_all <= K * sup_curves
 *        (with K from the constant ledger at eps0) holds on every pair
 *        (member(n), base) for n = 0..N — the divergence of the one-sided
 *        arc ratio coexists with the two-sided theorem.
 *
 * @throws std::domain_error when a member leaves the eps0-relative part or
 *         under the divergence_table preconditions.
 */
[[nodiscard]] CoexistenceReport coexistence_check(const PantsMetric& base,
                                                  int N, double eps0);

}  // namespace pants_spectra
