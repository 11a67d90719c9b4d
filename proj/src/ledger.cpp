#include "pants_spectra/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pants_spectra/collar.hpp"
#include "pants_spectra/decompose.hpp"
#include "pants_spectra/hyp_trig.hpp"
#include "pants_spectra/pants.hpp"

namespace pants_spectra {
namespace {

/// Smallest boundary length probed by the deterministic grid scan.
constexpr double kGridMinLength = 1e-6;

/// Geometric grid points per axis in the scan (16^3 triples in total).
constexpr int kGridPointsPerAxis = 16;

/// ln(1 + cosh x) without overflow for any in-range x.
[[nodiscard]] double log1p_cosh(double x) {
  return log_add_exp(0.0, log_cosh(x));
}

/// The bound-propagation step that turns a product bound M into a distance
/// bound D = max(|ln(2 M)|, |ln(M (1 + cosh eps0))|), evaluated in the log
/// domain so large eps0 cannot overflow.
[[nodiscard]] double distance_bound_from_product_bound(double product_bound,
                                                       double eps0) {
  const double low = std::fabs(std::log(2.0 * product_bound));
  const double high = std::fabs(std::log(product_bound) + log1p_cosh(eps0));
  return std::max(low, high);
}

/**
 * @brief Deterministic lower envelope of the collar-free middle segment of
 *        every essential arc, scanned over a fixed geometric grid of
 *        boundary-length triples in [kGridMinLength, eps0]^3.
 *
 * For each triple the six arcs (three seams, three loops) are decomposed as
 * total length minus the collar offsets at their endpoints, and the minimum
 * middle length over all triples and arcs is returned.  Pure arithmetic on
 * a fixed grid: bit-for-bit reproducible, no randomness.
 */
[[nodiscard]] double grid_minimum_middle(double eps0) {
  double grid[kGridPointsPerAxis] = {};
  const double ratio = eps0 / kGridMinLength;
  for (int m = 0; m < kGridPointsPerAxis; ++m) {
    grid[m] = kGridMinLength *
              std::pow(ratio, static_cast<double>(m) /
                                  static_cast<double>(kGridPointsPerAxis - 1));
  }
  grid[kGridPointsPerAxis - 1] = eps0;  // exact endpoint

  double minimum = std::numeric_limits<double>::infinity();
  for (int a = 0; a < kGridPointsPerAxis; ++a) {
    for (int b = 0; b < kGridPointsPerAxis; ++b) {
      for (int c = 0; c < kGridPointsPerAxis; ++c) {
        const PantsMetric p{grid[a], grid[b], grid[c]};
        minimum = std::min(minimum, min_middle_all_arcs(p));
      }
    }
  }
  return minimum;
}

}  // namespace

ConstantLedger build_ledger(double eps0) {
  if (!(std::isfinite(eps0)) || eps0 <= 0.0 || eps0 > kMaxBoundaryLength) {
    std::ostringstream os;
    os.precision(17);
    os << "length threshold eps0 must lie in (0, " << kMaxBoundaryLength
       << "] (got " << eps0 << ")";
    throw std::domain_error(os.str());
  }

  ConstantLedger g;
  g.eps0 = eps0;
  g.eps0_prime = eps0_prime();
  g.eps_star = eps_star();
  g.c0_prime = g.eps0_prime / 2.0;
  g.M0_paper = 8.0 / g.eps0_prime;
  g.M0_empirical = grid_minimum_middle(eps0);

  const double half = eps0 / 2.0;
  g.k1 = std::sinh(half) / half;

  // Seam chain in the small-threshold regime.
  g.M1 = std::max(2.0 / (g.c0_prime * g.c0_prime),
                  4.0 * g.k1 * g.k1 * g.c0_prime * g.c0_prime);
  g.D1 = distance_bound_from_product_bound(g.M1, eps0);
  g.M = 2.0 * g.D1 + 1.0;
  g.K1prime = std::max({3.0,
                        3.0 * g.M * g.M / (2.0 * g.M0_empirical * eps0),
                        3.0 * g.M / g.M0_empirical,
                        2.0 * eps0 / g.M0_empirical});
  g.K1 = std::max(g.K1prime, 2.0);

  // Loop chain in the small-threshold regime.
  const double k2_loop =
      std::max(g.k1, 2.0 / (1.0 - std::exp(-g.M0_empirical)));
  g.D2 = std::max(std::fabs(std::log(g.eps0_prime / (4.0 * k2_loop))),
                  std::fabs(std::log(k2_loop * g.eps0_prime)));
  const double m2 = 2.0 * g.D2 + 1.0;
  g.K2prime = std::max({3.0,
                        3.0 * m2 * m2 / (g.M0_empirical * eps0),
                        6.0 * m2 / g.M0_empirical,
                        4.0 * eps0 / g.M0_empirical});
  g.K2 = std::max(g.K2prime, 2.0);

  // Seam chain in the large-threshold regime.
  const double sinh_half = std::sinh(half);
  g.Mprime = std::min(g.M0_empirical / 2.0,
                      acosh_stable(1.0 / (sinh_half * sinh_half) + 1.0));
  const double e1 = std::exp(1.0);
  const double m1_bc =
      std::max(8.0 * e1 / (g.eps0_prime * g.eps0_prime),
               eps0 * g.k1 * g.k1 * g.eps0_prime / 4.0);
  const double m1_d = std::max(8.0 * e1 * e1 / (g.eps0_prime * g.eps0_prime),
                               g.k1 * g.k1 * eps0 * eps0 / 4.0);
  const double d_bc = distance_bound_from_product_bound(m1_bc, eps0);
  const double d_d = distance_bound_from_product_bound(m1_d, eps0);
  const double d3 = std::max({g.D1, d_bc, d_d});
  const double m3 = 2.0 * d3 + 1.0;
  g.K3prime = std::max({3.0,
                        3.0 * m3 * m3 / (2.0 * g.Mprime * eps0),
                        3.0 * m3 / g.Mprime,
                        2.0 * eps0 / g.Mprime});
  g.K3dprime = std::max(2.0, 2.0 * e1 / g.Mprime);
  g.K3tprime = g.K3dprime;
  g.K3 = 3.0 * std::max({g.K3prime, g.K3dprime, g.K3tprime});

  // Loop chain in the large-threshold regime.
  g.M0prime =
      std::min(g.M0_empirical / 2.0, asinh_stable(1.0 / sinh_half));
  const double k2_gen =
      std::max(g.k1, 2.0 / (1.0 - std::exp(-2.0 * g.M0prime)));
  g.D2prime =
      std::max(std::fabs(std::log(g.eps0_prime / (4.0 * e1 * k2_gen))),
               std::fabs(std::log(k2_gen * eps0 / 2.0)));
  const double d4 = std::max(g.D2, g.D2prime);
  const double m4 = 2.0 * d4 + 1.0;
  g.K4prime = std::max({3.0,
                        3.0 * m4 * m4 / (2.0 * g.M0prime * eps0),
                        3.0 * m4 / g.M0prime,
                        2.0 * eps0 / g.M0prime});
  g.K4dprime = std::max(2.0, 2.0 * e1 / g.M0prime);
  g.K4 = 2.0 * std::max(g.K4prime, g.K4dprime);

  g.K = std::max({g.K1, g.K2, g.K3, g.K4});
  g.C = std::log(g.K);
  return g;
}

}  // namespace pants_spectra
