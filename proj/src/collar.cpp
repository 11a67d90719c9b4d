#include "pants_spectra/collar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pants_spectra/hyp_trig.hpp"
#include "pants_spectra/ledger.hpp"

namespace pants_spectra {

namespace {

[[noreturn]] void throw_domain(const char* fn, const char* what, double x) {
  std::ostringstream os;
  os.precision(17);
  os << fn << ": " << what << " (got " << x << ")";
  throw std::domain_error(os.str());
}

}  // namespace

double eps0_prime() noexcept {
  static const double value = std::log(1.0 + std::sqrt(2.0));
  return value;
}

double eps_star() noexcept {
  static const double value = eps0_prime() * std::exp(-1.0);
  return value;
}

double eta(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw_domain("eta", "argument must be positive and finite", x);
  }
  return asinh_stable(1.0 / std::sinh(0.5 * x));
}

double collar_admissible_width(double l) { return eta(l); }

double offset_length(double l, double d) {
  if (!std::isfinite(l) || l <= 0.0) {
    throw_domain("offset_length", "base length must be positive and finite", l);
  }
  if (!std::isfinite(d) || d < 0.0) {
    throw_domain("offset_length", "offset must be nonnegative and finite", d);
  }
  return l * std::cosh(d);
}

double offset_for_target(double l, double target) {
  if (!std::isfinite(l) || l <= 0.0) {
    throw_domain("offset_for_target", "base length must be positive and finite", l);
  }
  if (!std::isfinite(target)) {
    throw_domain("offset_for_target", "target must be finite", target);
  }
  if (target < l) {
    throw_domain("offset_for_target",
                 "target must be >= base length (equidistant curves only lengthen)",
                 target);
  }
  return acosh_stable(target / l);
}

double inner_boundary_offset(double l, const ConstantLedger& ledger) {
  if (!std::isfinite(l) || l <= 0.0) {
    throw_domain("inner_boundary_offset", "length must be positive and finite", l);
  }
  // Strict comparison: a boundary exactly at the threshold keeps no collar
  // crossing (the selection rule reads "shorter than", not "at most").
  if (l < ledger.eps_star) return offset_for_target(l, ledger.eps0_prime);
  return 0.0;
}

}  // namespace pants_spectra
