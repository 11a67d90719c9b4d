#pragma once

#include <string>
#include <vector>

#include "pants_spectra/ledger.hpp"
#include "pants_spectra/pants.hpp"

namespace pants_spectra {

/**
 * @brief Which endpoints of an arc carry a positive collar segment.
 *
 * An endpoint boundary shorter than eps_star contributes a collar segment
 * (the portion of the arc between the boundary and the equidistant curve of
 * length eps0_prime); a longer boundary contributes none.
 *
 * Seams use all four tags: A both endpoints carry a segment, B only the
 * end does, C only the start does, D neither.  Loops use two: A when the
 * two equal segments are positive, B when there are none.
 */
enum class CaseTag { A, B, C, D };

/// Single-letter text form of a case tag ("A".."D").
[[nodiscard]] std::string case_tag_name(CaseTag tag);

/**
 * @brief An arc split as total = d_start + middle + d_end, where the d's
 *        are the collar segments at its two endpoints (zero when the
 *        endpoint boundary is at least eps_star) and middle is the part
 *        between the equidistant curves.
 */
struct Decomposition {
  ArcClass arc;
  double total = 0.0;    ///< geodesic length of the arc
  double d_start = 0.0;  ///< collar segment at the first endpoint
  double d_end = 0.0;    ///< collar segment at the second endpoint
  double middle = 0.0;   ///< total - d_start - d_end
  CaseTag case_tag = CaseTag::D;
};

/// Decompose the seam arc between boundaries i and j (start at i, end at j
/// after canonicalization i < j).  @throws std::domain_error on cusps.
[[nodiscard]] Decomposition decompose_seam(const PantsMetric& p, int i, int j,
                                           const ConstantLedger& ledger);

/// Decompose the loop arc based at boundary i; its two collar segments are
/// equal.  Case A when they are positive, B otherwise.
/// @throws std::domain_error if boundary i is a cusp.
[[nodiscard]] Decomposition decompose_loop(const PantsMetric& p, int i,
                                           const ConstantLedger& ledger);

/// Decompose one arc class (dispatch on kind).
[[nodiscard]] Decomposition decompose_arc(const PantsMetric& p,
                                          const ArcClass& arc,
                                          const ConstantLedger& ledger);

/// Decompositions of every arc class valid on p, in canonical order
/// (seams (1,2), (1,3), (2,3), then loops 1..3); cusp-invalidated classes
/// are omitted.
[[nodiscard]] std::vector<Decomposition> decompose_all(
    const PantsMetric& p, const ConstantLedger& ledger);

/**
 * @brief Minimum middle-segment length over all arc classes valid on p.
 *
 * Computed from the absolute collar constants (no ledger needed): each
 * endpoint boundary shorter than eps_star contributes a collar segment of
 * length acosh(eps0_prime / l).  Shared by the constant-ledger grid scan
 * and the randomized infimum estimator.
 *
 * @throws std::domain_error if no arc class is valid (all boundaries cusps).
 */
[[nodiscard]] double min_middle_all_arcs(const PantsMetric& p);

/// Two-sided bracket for a collar segment at a boundary of length l.
struct CollarSegmentBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/**
 * @brief Proven bracket for the collar segment at a boundary of length l:
 *        ln(c0_prime) - ln(l/2) <= d <= 2 (ln(c0_prime) - ln(l/2)).
 *
 * @throws std::domain_error unless 0 < l < eps_star (the segment exists
 *         and the bracket applies only there).
 */
[[nodiscard]] CollarSegmentBounds collar_segment_bounds(double l);

}  // namespace pants_spectra
