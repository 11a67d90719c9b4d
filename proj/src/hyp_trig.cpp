#include "pants_spectra/hyp_trig.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pants_spectra {

namespace {

[[noreturn]] void throw_domain(const char* fn, const char* what, double x) {
  std::ostringstream os;
  os.precision(17);
  os << fn << ": " << what << " (got " << x << ")";
  throw std::domain_error(os.str());
}

void require_finite_nonnegative(const char* fn, double x) {
  if (!std::isfinite(x)) throw_domain(fn, "argument must be finite", x);
  if (x < 0.0) throw_domain(fn, "argument must be nonnegative", x);
}

}  // namespace

double asinh_stable(double x) {
  if (!std::isfinite(x)) throw_domain("asinh_stable", "argument must be finite", x);
  const double ax = std::fabs(x);
  double r;
  if (ax >= kAcoshLargeArg) {
    // asinh(x) = ln(2x) + O(1/x^2); the correction is below 1 ulp here.
    r = std::log(2.0) + std::log(ax);
  } else {
    // log1p form: exact for tiny ax (no cancellation), stable throughout.
    r = std::log1p(ax + ax * ax / (1.0 + std::sqrt(ax * ax + 1.0)));
  }
  return std::copysign(r, x);
}

double acosh_stable(double x) {
  if (!std::isfinite(x)) throw_domain("acosh_stable", "argument must be finite", x);
  if (x < 1.0) throw_domain("acosh_stable", "argument must be >= 1", x);
  if (x > kAcoshLargeArg) return std::log(2.0) + std::log(x);
  const double t = x - 1.0;
  return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

double log_sinh(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw_domain("log_sinh", "argument must be positive and finite", x);
  }
  if (x > kLogOverExpSwitch) {
    return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
  }
  return std::log(std::sinh(x));
}

double log_cosh(double x) {
  require_finite_nonnegative("log_cosh", x);
  if (x > kLogOverExpSwitch) {
    return x - std::log(2.0) + std::log1p(std::exp(-2.0 * x));
  }
  // cosh x = 1 + 2 sinh^2(x/2); the log1p form keeps full relative accuracy
  // for small x, where ln(cosh x) ~ x^2/2 would vanish in plain log(cosh).
  const double s = std::sinh(0.5 * x);
  return std::log1p(2.0 * s * s);
}

double log_add_exp(double a, double b) {
  const double hi = a > b ? a : b;
  const double lo = a > b ? b : a;
  const double gap = hi - lo;
  if (gap > kExpNegligible) return hi;
  return hi + std::log1p(std::exp(-gap));
}

double acosh_from_log_cosh(double log_cosh_value) {
  // Tolerate a sliver of negative rounding noise from upstream subtraction.
  if (log_cosh_value < 0.0) {
    if (log_cosh_value < -1e-12) {
      throw_domain("acosh_from_log_cosh", "argument must be >= 0", log_cosh_value);
    }
    return 0.0;
  }
  const double y = log_cosh_value;
  if (y >= 20.0) {
    // cosh g = e^y  =>  g = y + ln(1 + sqrt(1 - e^{-2y})).
    return y + std::log1p(std::sqrt(-std::expm1(-2.0 * y)));
  }
  // t = cosh g - 1, computed without cancellation; then the acosh log1p form.
  const double t = std::expm1(y);
  return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

namespace {

/// Shared log-domain pentagon: given lp = ln(sinh a * sinh b), return c or
/// detect the degenerate/domain situations near lp = 0.
double pentagon_from_log_product(double lp) {
  // |product - 1| <= band  <=>  |expm1(lp)| <= band (to first order exact).
  if (std::fabs(lp) <= 2.0 * kPentagonDegenerateBand) {
    const double excess = std::expm1(lp);
    if (std::fabs(excess) <= kPentagonDegenerateBand) return 0.0;
    if (excess < 0.0) {
      throw std::domain_error(
          "pentagon_side: sinh(a)*sinh(b) < 1, no right-angled pentagon exists");
    }
    return acosh_from_log_cosh(lp);
  }
  if (lp < 0.0) {
    throw std::domain_error(
        "pentagon_side: sinh(a)*sinh(b) < 1, no right-angled pentagon exists");
  }
  return acosh_from_log_cosh(lp);
}

}  // namespace

double pentagon_side(double a, double b) {
  require_finite_nonnegative("pentagon_side", a);
  require_finite_nonnegative("pentagon_side", b);
  if (a == 0.0 || b == 0.0) {
    throw std::domain_error(
        "pentagon_side: sinh(a)*sinh(b) < 1, no right-angled pentagon exists");
  }
  const bool plain = a >= kLogDomainTinySinh && b >= kLogDomainTinySinh &&
                     a <= kLogDomainUpperArg && b <= kLogDomainUpperArg;
  if (plain) {
    const double product = std::sinh(a) * std::sinh(b);
    if (std::fabs(product - 1.0) <= kPentagonDegenerateBand) return 0.0;
    if (product < 1.0) {
      throw std::domain_error(
          "pentagon_side: sinh(a)*sinh(b) < 1, no right-angled pentagon exists");
    }
    return acosh_stable(product);
  }
  return pentagon_from_log_product(log_sinh(a) + log_sinh(b));
}

double hexagon_side(double a, double b, double c) {
  require_finite_nonnegative("hexagon_side", a);
  require_finite_nonnegative("hexagon_side", b);
  require_finite_nonnegative("hexagon_side", c);
  if (a == 0.0 || b == 0.0) {
    throw std::domain_error("hexagon_side: adjacent sides a, b must be positive");
  }
  const bool plain = a >= kLogDomainTinySinh && b >= kLogDomainTinySinh &&
                     a <= kLogDomainUpperArg && b <= kLogDomainUpperArg &&
                     c <= kLogDomainUpperArg;
  if (!plain) return hexagon_side_log_domain(a, b, c);
  // cosh a cosh b - sinh a sinh b = cosh(a - b) turns the identity into
  //   cosh gamma = 1 + (cosh c + cosh(a-b)) / (sinh a sinh b),
  // a quotient of positive terms: the excess over 1 keeps full relative
  // accuracy even when gamma is tiny (a, b large with c small), where the
  // direct ratio would cancel to a handful of ulps.
  const double excess =
      (std::cosh(c) + std::cosh(a - b)) / (std::sinh(a) * std::sinh(b));
  if (excess >= kAcoshLargeArg) {
    // acosh(1 + t) = ln(2(1 + t)) + O(t^-2); avoids overflow of excess^2.
    return std::log(2.0) + std::log1p(excess);
  }
  return std::log1p(excess + std::sqrt(excess * (excess + 2.0)));
}

double hexagon_side_log_domain(double a, double b, double c) {
  require_finite_nonnegative("hexagon_side_log_domain", a);
  require_finite_nonnegative("hexagon_side_log_domain", b);
  require_finite_nonnegative("hexagon_side_log_domain", c);
  if (a == 0.0 || b == 0.0) {
    throw std::domain_error(
        "hexagon_side_log_domain: adjacent sides a, b must be positive");
  }
  // cosh a cosh b = sinh a sinh b + cosh(a - b) turns the identity into
  //   cosh gamma = 1 + (cosh c + cosh(a-b)) / (sinh a sinh b),
  // a strictly-positive excess over 1 that survives every rounding regime.
  const double log_excess_num = log_add_exp(log_cosh(c), log_cosh(std::fabs(a - b)));
  const double log_den = log_sinh(a) + log_sinh(b);
  const double u = log_excess_num - log_den;  // ln(excess)
  const double log_cosh_gamma = u > kExpNegligible ? u : std::log1p(std::exp(u));
  return acosh_from_log_cosh(log_cosh_gamma);
}

}  // namespace pants_spectra
