#pragma once

namespace pants_spectra {

// ---------------------------------------------------------------------------
// Numerical thresholds of the hyperbolic trigonometry kernel.
// ---------------------------------------------------------------------------

/// Above this argument, cosh/sinh intermediates risk overflow when multiplied
/// together (sinh(350)^2 is within ~1e5 of DBL_MAX), so identities switch to
/// their log-domain forms.
inline constexpr double kLogDomainUpperArg = 350.0;

/// Below this argument, sinh(x) ~ x loses relative accuracy inside products
/// and quotients of the plain identities; the log-domain path takes over.
inline constexpr double kLogDomainTinySinh = 1e-8;

/// Half-width of the band around sinh(a)*sinh(b) = 1 treated as an exactly
/// degenerate right-angled pentagon.  Rounding of sinh at the geometric
/// boundary can land the product on either side of 1; both sides of the band
/// map to side length 0 instead of NaN or a spurious domain error.
inline constexpr double kPentagonDegenerateBand = 1e-14;

/// Above this argument, acosh(x) = ln(2x) to well below double precision;
/// the branch avoids forming x*x (overflow) and the cancellation-free form
/// is exact at this scale.
inline constexpr double kAcoshLargeArg = 1e8;

/// Above this argument, ln(sinh x) and ln(cosh x) collapse to
/// x - ln 2 + log1p(∓exp(-2x)); exp(-2x) < 4e-17 keeps the correction exact.
inline constexpr double kLogOverExpSwitch = 19.0;

/// When ln(u) - ln(v) exceeds this, log1p(exp(...)) == its argument to 1 ulp,
/// so the additive +1 inside log-domain sums is dropped without error.
inline constexpr double kExpNegligible = 36.0;

// ---------------------------------------------------------------------------
// Stable inverse hyperbolic functions.
// ---------------------------------------------------------------------------

/**
 * @brief asinh(x) = ln(x + sqrt(x^2 + 1)), odd and monotone.
 *
 * Computed as sign(x) * log1p(|x| + |x|^2 / (1 + sqrt(|x|^2 + 1))) so that no
 * cancellation occurs for small |x|, with the ln(2|x|) branch for huge |x|
 * where x^2 would overflow.
 */
[[nodiscard]] double asinh_stable(double x);

/**
 * @brief acosh(x) = ln(x + sqrt(x^2 - 1)) for x >= 1.
 *
 * Uses t = x - 1 and log1p(t + sqrt(t*(t+2))) near 1 (cancellation-free) and
 * ln(2x) for x > kAcoshLargeArg (overflow-free).
 *
 * @throws std::domain_error if x < 1 or x is not finite.
 */
[[nodiscard]] double acosh_stable(double x);

// ---------------------------------------------------------------------------
// Log-domain building blocks (exposed for tests and the length formulas).
// ---------------------------------------------------------------------------

/// ln(sinh x) for x > 0 without overflow or underflow of the intermediate.
[[nodiscard]] double log_sinh(double x);

/// ln(cosh x) for x >= 0 without overflow of the intermediate.
[[nodiscard]] double log_cosh(double x);

/// ln(exp(a) + exp(b)) evaluated without overflow.
[[nodiscard]] double log_add_exp(double a, double b);

/// Recover y from ln(cosh y) >= 0; the inverse used by the log-domain paths.
[[nodiscard]] double acosh_from_log_cosh(double log_cosh_value);

// ---------------------------------------------------------------------------
// Right-angled polygon identities.
// ---------------------------------------------------------------------------

/**
 * @brief Side c of a right-angled pentagon with cosh c = sinh a * sinh b.
 *
 * Requires sinh(a) * sinh(b) >= 1 (the pentagon exists); products within
 * kPentagonDegenerateBand of 1 return exactly 0.  Arguments outside the
 * plain-arithmetic window [kLogDomainTinySinh, kLogDomainUpperArg] are
 * computed in the log domain.
 *
 * @throws std::domain_error if the product is below the degenerate band or
 *         any input is negative or non-finite.
 */
[[nodiscard]] double pentagon_side(double a, double b);

/**
 * @brief Side gamma of a right-angled hexagon with consecutive sides
 *        a, _, b, gamma', c where cosh gamma = (cosh c + cosh a cosh b) /
 *        (sinh a sinh b).
 *
 * The right-hand side is >= 1 automatically for a, b > 0, c >= 0, so no
 * domain failure occurs on valid input; c = 0 is the permitted degenerate
 * opposite side.  Delegates to the log-domain form outside the
 * plain-arithmetic window.  Symmetric in (a, b) bitwise.
 *
 * @throws std::domain_error if a == 0, b == 0, or any input is negative or
 *         non-finite.
 */
[[nodiscard]] double hexagon_side(double a, double b, double c);

/**
 * @brief Same mathematical contract as hexagon_side, always via logarithms.
 *
 * Uses the overflow-free rewriting
 *   cosh gamma = 1 + (cosh c + cosh(a-b)) / (sinh a sinh b),
 * whose additive +1 keeps the result strictly above 1 even when the fraction
 * underflows, so tiny a, b (<= 1e-6) and huge c (>= 500) stay finite and
 * accurate.  Agrees with hexagon_side to <= 1e-9 relative on the overlap
 * window a, b in [1e-4, 10], c in [0, 50].
 */
[[nodiscard]] double hexagon_side_log_domain(double a, double b, double c);

}  // namespace pants_spectra
