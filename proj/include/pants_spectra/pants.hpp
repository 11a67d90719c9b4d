#pragma once

#include <string>
#include <vector>

namespace pants_spectra {

// ---------------------------------------------------------------------------
// Supported boundary-length range.
// ---------------------------------------------------------------------------

/// Positive boundary lengths below this are rejected with a range diagnostic.
/// The floor sits at 1e-12 so that thirty exact halvings of a length ~0.3
/// (the divergence family's stress case, reaching ~2.8e-10) stay in range
/// with margin, while the log-domain length formulas remain accurate.
inline constexpr double kMinBoundaryLength = 1e-12;

/// Positive boundary lengths above this are rejected with a range diagnostic;
/// half-lengths stay within the overflow-safe window of the trig kernel.
inline constexpr double kMaxBoundaryLength = 700.0;

// ---------------------------------------------------------------------------
// Core geometric types.
// ---------------------------------------------------------------------------

/**
 * @brief A hyperbolic pair of pants given by its three geodesic boundary
 *        lengths; an entry of 0 encodes a cusp (puncture).
 *
 * Determines the metric up to isometry.  Positive entries must lie in
 * [kMinBoundaryLength, kMaxBoundaryLength].
 */
struct PantsMetric {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;

  /// 1-based boundary access (i in {1, 2, 3}).
  [[nodiscard]] double boundary(int i) const;

  /// True when boundary i is a cusp (length exactly 0).
  [[nodiscard]] bool is_cusp(int i) const { return boundary(i) == 0.0; }

  /// Parse the text form "l1,l2,l3" (decimal, dot separator).
  /// @throws std::invalid_argument on malformed input.
  [[nodiscard]] static PantsMetric parse(const std::string& text);
};

/// Validate finiteness, nonnegativity, and the supported range of every
/// boundary length.  @throws std::domain_error with a range diagnostic.
void validate_metric(const PantsMetric& p);

/// Essential simple closed curve parallel to boundary `index` (1..3);
/// valid only when that boundary is not a cusp.
struct CurveClass {
  int index = 0;
};

/**
 * @brief One of the six essential-arc isotopy classes on a pair of pants:
 *        Seam(i, j) meets boundaries i != j perpendicularly; Loop(i) has
 *        both endpoints on boundary i.
 */
struct ArcClass {
  enum class Kind { Seam, Loop };
  Kind kind = Kind::Seam;
  int a = 0;  ///< first boundary index (Seam: smaller index; Loop: the base)
  int b = 0;  ///< second boundary index (Seam only; 0 for Loop)

  [[nodiscard]] static ArcClass seam(int i, int j);
  [[nodiscard]] static ArcClass loop(int i);

  /// Canonical text form "seam:i,j" / "loop:i".
  [[nodiscard]] std::string name() const;

  /// Parse "seam:i,j" or "loop:i".  @throws std::invalid_argument.
  [[nodiscard]] static ArcClass parse(const std::string& text);
};

/// One row of the length spectrum.
struct SpectrumEntry {
  std::string class_kind;  ///< "curve", "seam", or "loop"
  int index_a = 0;
  int index_b = 0;  ///< 0 when the class has a single index
  double length = 0.0;
};

// ---------------------------------------------------------------------------
// Length functions.
// ---------------------------------------------------------------------------

/// Length of the boundary-parallel curve: the boundary length itself.
/// @throws std::domain_error if that boundary is a cusp.
[[nodiscard]] double curve_length(const PantsMetric& p, CurveClass c);

/**
 * @brief Geodesic length of the seam arc between boundaries i and j:
 *        acosh[(cosh(l_k/2) + cosh(l_i/2) cosh(l_j/2)) /
 *              (sinh(l_i/2) sinh(l_j/2))],
 *        where k is the third boundary (cusp enters as cosh 0 = 1).
 *
 * @throws std::domain_error if boundary i or j is a cusp or out of range.
 */
[[nodiscard]] double seam_length(const PantsMetric& p, int i, int j);

/**
 * @brief Geodesic length of the arc with both endpoints on boundary i.
 *
 * Computed from the two right-angled pentagons it cuts: with h = l_i/2 and
 * the split h = t + (h - t) determined by
 *   cosh(l_j/2) / sinh(t) = cosh(l_k/2) / sinh(h - t),
 * the length is 2 asinh(cosh(l_j/2) / sinh(t)).  The split is root-found by
 * bracketed bisection plus a Newton polish; the returned length satisfies
 * both pentagon identities to <= 1e-9 relative (verified before returning).
 *
 * @throws std::domain_error if boundary i is a cusp or out of range;
 * @throws std::runtime_error if the pentagon residuals cannot reach 1e-9
 *         (never silently returns an unverified value).
 */
[[nodiscard]] double loop_arc_length(const PantsMetric& p, int i);

/// The pentagon split parameter t of loop_arc_length (exposed for tests).
[[nodiscard]] double loop_split(const PantsMetric& p, int i);

/// Dispatch to seam_length / loop_arc_length.
[[nodiscard]] double arc_length(const PantsMetric& p, const ArcClass& a);

/**
 * @brief The full finite length spectrum in canonical order: curves 1..3,
 *        seams (1,2), (1,3), (2,3), loops 1..3.  Classes invalidated by
 *        cusps are omitted, never errored.
 */
[[nodiscard]] std::vector<SpectrumEntry> spectrum(const PantsMetric& p);

}  // namespace pants_spectra
