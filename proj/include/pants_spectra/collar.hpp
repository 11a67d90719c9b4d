#pragma once

namespace pants_spectra {

struct ConstantLedger;  // ledger.hpp

// ---------------------------------------------------------------------------
// Universal collar constants (independent of the relative-part bound eps0).
// ---------------------------------------------------------------------------

/// ln(1 + sqrt 2): the target length for inner boundaries of the regular
/// annuli the decomposition uses (sinh of it is exactly 1).
[[nodiscard]] double eps0_prime() noexcept;

/// e^{-1} * ln(1 + sqrt 2): boundaries strictly shorter than this get a
/// positive collar crossing in the decomposition; longer ones get none.
[[nodiscard]] double eps_star() noexcept;

// ---------------------------------------------------------------------------
// Collar function and the regular-annulus length relation.
// ---------------------------------------------------------------------------

/**
 * @brief Collar function eta(x) = asinh(1 / sinh(x/2)).
 *
 * The certified embedded collar half-width around a geodesic of length x;
 * strictly decreasing, positive, and eta(x) -> ln(4/x) as x -> 0.
 *
 * @throws std::domain_error for x <= 0 or non-finite x.
 */
[[nodiscard]] double eta(double x);

/// Maximal certified embedded collar half-width; identical to eta(l).
[[nodiscard]] double collar_admissible_width(double l);

/**
 * @brief Length of the equidistant curve at distance d from a geodesic of
 *        length l: l * cosh(d).
 *
 * @throws std::domain_error for l <= 0, d < 0, or non-finite input.
 */
[[nodiscard]] double offset_length(double l, double d);

/**
 * @brief Inverse of offset_length in d: the distance at which the
 *        equidistant curve reaches the target length, acosh(target / l).
 *
 * offset_length(l, offset_for_target(l, t)) == t to 1e-12 relative.
 *
 * @throws std::domain_error if target < l or inputs are invalid.
 */
[[nodiscard]] double offset_for_target(double l, double target);

/**
 * @brief Collar crossing assigned to a boundary of length l by the
 *        decomposition rule: acosh(eps0_prime / l) when l < eps_star
 *        (strictly), else 0.
 *
 * The thresholds come from the ledger so that every module shares one source
 * of truth for the constants; they do not actually vary with eps0.
 */
[[nodiscard]] double inner_boundary_offset(double l, const ConstantLedger& ledger);

}  // namespace pants_spectra
