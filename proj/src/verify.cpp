#include "pants_spectra/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "pants_spectra/collar.hpp"
#include "pants_spectra/decompose.hpp"
#include "pants_spectra/rng.hpp"

namespace pants_spectra {
namespace {

/// Smallest boundary length drawn by randomized sampling (log-uniform floor).
constexpr double kSampleFloorLength = 1e-6;

/// Additive slack on middle-length floor checks: the floors come from a
/// finite scan, so values between scan points may sit below it by rounding.
constexpr double kMiddleFloorSlack = 1e-9;

[[nodiscard]] std::string num17(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

/// Ratio with the cusp convention 0/0 = 1 (cusp patterns always match, so
/// the arguments are either both zero or both positive).
[[nodiscard]] double ratio_or_one(double a, double b) {
  if (a == 0.0 && b == 0.0) return 1.0;
  return a / b;
}

/// Symmetrized ratio max(a/b, b/a), 1 for the both-zero cusp case.
[[nodiscard]] double sym_ratio(double a, double b) {
  if (a == 0.0 && b == 0.0) return 1.0;
  return std::max(a / b, b / a);
}

[[nodiscard]] CheckRecord make_record(std::string name, double bound,
                                      double lhs, double rhs) {
  return CheckRecord{std::move(name), bound, lhs, rhs, lhs <= rhs};
}

// ---------------------------------------------------------------------------
// Cached per-pair geometry: boundary lengths and all arc decompositions,
// computed once and shared by every check.
// ---------------------------------------------------------------------------

struct ArcGeo {
  bool valid = false;
  double total = 0.0;
  double d_start = 0.0;
  double d_end = 0.0;
  double middle = 0.0;
};

/// Seam slot order (1,2), (1,3), (2,3) — the canonical listing.
constexpr int kSeamPairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};

struct MetricGeo {
  double len[4] = {0.0, 0.0, 0.0, 0.0};  ///< 1-based boundary lengths
  ArcGeo seam[3];
  ArcGeo loop[3];
};

struct PairGeo {
  MetricGeo m1;
  MetricGeo m2;

  [[nodiscard]] PairGeo swapped() const { return {m2, m1}; }
};

[[nodiscard]] MetricGeo build_geo(const PantsMetric& p,
                                  const ConstantLedger& ledger) {
  MetricGeo g;
  for (int i = 1; i <= 3; ++i) g.len[i] = p.boundary(i);
  for (int s = 0; s < 3; ++s) {
    const int i = kSeamPairs[s][0];
    const int j = kSeamPairs[s][1];
    if (p.is_cusp(i) || p.is_cusp(j)) continue;
    const Decomposition d = decompose_seam(p, i, j, ledger);
    g.seam[s] = {true, d.total, d.d_start, d.d_end, d.middle};
  }
  for (int i = 1; i <= 3; ++i) {
    if (p.is_cusp(i)) continue;
    const Decomposition d = decompose_loop(p, i, ledger);
    g.loop[i - 1] = {true, d.total, d.d_start, d.d_end, d.middle};
  }
  return g;
}

void require_relative_part(const MetricPair& pair,
                           const ConstantLedger& ledger) {
  if (!in_relative_part(pair, ledger.eps0)) {
    throw std::domain_error(
        "pair is outside the relative part: a non-cusp boundary length "
        "exceeds eps0 = " +
        num17(ledger.eps0));
  }
}

// ---------------------------------------------------------------------------
// Suprema from cached geometry.
// ---------------------------------------------------------------------------

[[nodiscard]] double sup_curves_from(const PairGeo& g) {
  double sup = 0.0;
  bool any = false;
  for (int i = 1; i <= 3; ++i) {
    if (g.m1.len[i] == 0.0) continue;
    sup = std::max(sup, sym_ratio(g.m1.len[i], g.m2.len[i]));
    any = true;
  }
  if (!any) {
    throw std::domain_error(
        "curve-ratio supremum undefined: all three boundaries are cusps");
  }
  return sup;
}

[[nodiscard]] double sup_arcs_from(const PairGeo& g) {
  double sup = 0.0;
  bool any = false;
  for (int s = 0; s < 3; ++s) {
    if (!g.m1.seam[s].valid) continue;
    sup = std::max(sup, sym_ratio(g.m1.seam[s].total, g.m2.seam[s].total));
    any = true;
  }
  for (int i = 0; i < 3; ++i) {
    if (!g.m1.loop[i].valid) continue;
    sup = std::max(sup, sym_ratio(g.m1.loop[i].total, g.m2.loop[i].total));
    any = true;
  }
  if (!any) {
    throw std::domain_error(
        "arc-ratio supremum undefined: the arc family is empty (all "
        "boundaries are cusps)");
  }
  return sup;
}

// ---------------------------------------------------------------------------
// Check builders on cached geometry.  Ratio orientation is metric-1 over
// metric-2 of the PairGeo as passed; `suffix` decorates reversed runs.
// ---------------------------------------------------------------------------

[[nodiscard]] CheckRecord theorem_key_from(double sup_curves, double sup_all,
                                           const ConstantLedger& ledger) {
  return make_record("theorem_key", ledger.K, sup_all,
                     ledger.K * sup_curves);
}

[[nodiscard]] CheckRecord theorem_main_from(double sup_curves, double sup_all,
                                            const ConstantLedger& ledger) {
  CheckRecord r = make_record("theorem_main", ledger.C, std::log(sup_all),
                              std::log(sup_curves) + ledger.C);
  r.pass = r.pass && sup_curves <= sup_all;  // structural left inequality
  return r;
}

[[nodiscard]] CheckRecord diff_boundary_from(const PairGeo& g, int i, int j,
                                             const ConstantLedger& ledger,
                                             const std::string& suffix) {
  const ArcClass arc = ArcClass::seam(i, j);
  const int slot = arc.a + arc.b - 3;
  if (!g.m1.seam[slot].valid) {
    throw std::logic_error("diff_boundary_from on a cusp-invalidated seam");
  }
  const int k = 6 - arc.a - arc.b;
  const bool small_regime = ledger.eps0 < ledger.eps_star;
  const double bound = small_regime ? ledger.K1 : ledger.K3;
  const double lhs = g.m1.seam[slot].total / g.m2.seam[slot].total;
  const double rhs =
      bound * std::max({1.0, ratio_or_one(g.m1.len[k], g.m2.len[k]),
                        g.m2.len[arc.a] / g.m1.len[arc.a],
                        g.m2.len[arc.b] / g.m1.len[arc.b]});
  return make_record("seam_ratio_bound(" + arc.name() + ")" + suffix, bound,
                     lhs, rhs);
}

[[nodiscard]] CheckRecord same_boundary_from(const PairGeo& g, int i,
                                             const ConstantLedger& ledger,
                                             const std::string& suffix) {
  const ArcClass arc = ArcClass::loop(i);
  if (!g.m1.loop[i - 1].valid) {
    throw std::logic_error("same_boundary_from on a cusp-invalidated loop");
  }
  const int j = i == 1 ? 2 : 1;
  const int k = i == 3 ? 2 : 3;
  // alpha is the other boundary with the larger metric-1 length.
  const int alpha = g.m1.len[j] >= g.m1.len[k] ? j : k;
  const int alpha_prime = alpha == j ? k : j;
  const bool small_regime = ledger.eps0 < ledger.eps_star;
  const double bound = small_regime ? ledger.K2 : ledger.K4;
  const double lhs = g.m1.loop[i - 1].total / g.m2.loop[i - 1].total;
  const double rhs =
      bound *
      std::max({1.0, ratio_or_one(g.m1.len[alpha], g.m2.len[alpha]),
                ratio_or_one(g.m1.len[alpha_prime], g.m2.len[alpha_prime]),
                g.m2.len[i] / g.m1.len[i]});
  return make_record("loop_ratio_bound(" + arc.name() + ")" + suffix, bound,
                     lhs, rhs);
}

void suite_from(const PairGeo& g, const ConstantLedger& ledger,
                std::vector<CheckRecord>* out) {
  const bool small_regime = ledger.eps0 < ledger.eps_star;

  const auto rec = [out](std::string name, double bound, double lhs,
                         double rhs) {
    out->push_back(make_record(std::move(name), bound, lhs, rhs));
  };

  // The exact sandwich for one collar segment at a boundary of length l.
  const auto sandwich = [&rec](const std::string& subject, double l,
                               double segment) {
    const CollarSegmentBounds b = collar_segment_bounds(l);
    rec("collar_segment_floor" + subject, b.lower, b.lower, segment);
    rec("collar_segment_cap" + subject, b.upper, segment, b.upper);
  };

  // --- Seams -------------------------------------------------------------
  for (int s = 0; s < 3; ++s) {
    if (!g.m1.seam[s].valid) continue;
    const int i = kSeamPairs[s][0];
    const int j = kSeamPairs[s][1];
    const int k = 6 - i - j;
    const std::string subj = "(" + ArcClass::seam(i, j).name() + ")";

    // Per-metric floors, gaps, and sandwiches.
    for (int m = 1; m <= 2; ++m) {
      const MetricGeo& gm = m == 1 ? g.m1 : g.m2;
      const ArcGeo& sg = gm.seam[s];
      const std::string tag = m == 1 ? "(m1)" : "(m2)";
      if (small_regime) {
        rec("seam_middle_floor" + subj + tag, ledger.M0_empirical,
            ledger.M0_empirical - kMiddleFloorSlack, sg.middle);
        rec("seam_middle_witness_gap" + subj + tag, ledger.D1,
            std::fabs(gm.len[k] / 2.0 - sg.middle), ledger.D1);
      } else {
        rec("seam_middle_floor" + subj + tag, ledger.Mprime,
            ledger.Mprime - kMiddleFloorSlack, sg.middle);
      }
      if (sg.d_start > 0.0) sandwich(subj + "(start)" + tag, gm.len[i],
                                     sg.d_start);
      if (sg.d_end > 0.0) sandwich(subj + "(end)" + tag, gm.len[j], sg.d_end);
    }

    // Cross-metric ratio bounds, both orientations.
    const auto seam_cross = [&](const MetricGeo& x, const MetricGeo& y,
                                const std::string& sfx) {
      const ArcGeo& sx = x.seam[s];
      const ArcGeo& sy = y.seam[s];
      const double kmid = small_regime ? ledger.K1prime : ledger.K3prime;
      rec("seam_middle_ratio" + subj + sfx, kmid, sx.middle / sy.middle,
          kmid * std::max(1.0, ratio_or_one(x.len[k], y.len[k])));
      if (sx.d_start > 0.0 && sy.d_start > 0.0) {
        rec("seam_collar_ratio_start" + subj + sfx, 2.0,
            sx.d_start / sy.d_start,
            2.0 * std::max(1.0, y.len[i] / x.len[i]));
      }
      if (sx.d_end > 0.0 && sy.d_end > 0.0) {
        rec("seam_collar_ratio_end" + subj + sfx, 2.0, sx.d_end / sy.d_end,
            2.0 * std::max(1.0, y.len[j] / x.len[j]));
      }
      if (!small_regime) {
        if (sx.d_start > 0.0) {
          rec("seam_collar_over_middle_start" + subj + sfx, ledger.K3dprime,
              sx.d_start / (sy.middle + sy.d_start),
              ledger.K3dprime * std::max(1.0, y.len[i] / x.len[i]));
        }
        if (sx.d_end > 0.0) {
          rec("seam_collar_over_middle_end" + subj + sfx, ledger.K3tprime,
              sx.d_end / (sy.middle + sy.d_end),
              ledger.K3tprime * std::max(1.0, y.len[j] / x.len[j]));
        }
      }
    };
    seam_cross(g.m1, g.m2, "");
    seam_cross(g.m2, g.m1, "(rev)");
  }

  // --- Loops -------------------------------------------------------------
  for (int i = 1; i <= 3; ++i) {
    if (!g.m1.loop[i - 1].valid) continue;
    const int j = i == 1 ? 2 : 1;
    const int k = i == 3 ? 2 : 3;
    const std::string subj = "(" + ArcClass::loop(i).name() + ")";

    for (int m = 1; m <= 2; ++m) {
      const MetricGeo& gm = m == 1 ? g.m1 : g.m2;
      const ArcGeo& lg = gm.loop[i - 1];
      const std::string tag = m == 1 ? "(m1)" : "(m2)";
      if (small_regime) {
        rec("loop_middle_floor" + subj + tag, ledger.M0_empirical,
            ledger.M0_empirical / 2.0 - kMiddleFloorSlack, lg.middle / 2.0);
        rec("loop_middle_witness_gap" + subj + tag, ledger.D2,
            std::fabs(lg.middle / 2.0 -
                      std::max(gm.len[j], gm.len[k]) / 2.0),
            ledger.D2);
      } else {
        rec("loop_middle_floor" + subj + tag, ledger.M0prime,
            ledger.M0prime - kMiddleFloorSlack, lg.middle / 2.0);
      }
      if (lg.d_start > 0.0) sandwich(subj + tag, gm.len[i], lg.d_start);
    }

    const auto loop_cross = [&](const MetricGeo& x, const MetricGeo& y,
                                const std::string& sfx) {
      const ArcGeo& lx = x.loop[i - 1];
      const ArcGeo& ly = y.loop[i - 1];
      // alpha = the other boundary with the larger length in the first
      // metric of this orientation.
      const int alpha = x.len[j] >= x.len[k] ? j : k;
      const double kmid = small_regime ? ledger.K2prime : ledger.K4prime;
      rec("loop_middle_ratio" + subj + sfx, kmid,
          (lx.middle / 2.0) / (ly.middle / 2.0),
          kmid * std::max(1.0, ratio_or_one(x.len[alpha], y.len[alpha])));
      if (lx.d_start > 0.0 && ly.d_start > 0.0) {
        rec("loop_collar_ratio" + subj + sfx, 2.0, lx.d_start / ly.d_start,
            2.0 * std::max(1.0, y.len[i] / x.len[i]));
      }
      if (!small_regime && lx.d_start > 0.0) {
        rec("loop_collar_over_middle" + subj + sfx, ledger.K4dprime,
            lx.d_start / (ly.middle / 2.0 + ly.d_start),
            ledger.K4dprime * std::max(1.0, y.len[i] / x.len[i]));
      }
    };
    loop_cross(g.m1, g.m2, "");
    loop_cross(g.m2, g.m1, "(rev)");
  }
}

[[nodiscard]] CheckRecord thick_from(const PairGeo& g, double eps,
                                     const ConstantLedger& ledger,
                                     const std::string& suffix) {
  for (int i = 1; i <= 3; ++i) {
    for (const MetricGeo* gm : {&g.m1, &g.m2}) {
      const double l = gm->len[i];
      if (l == 0.0) continue;
      if (l < eps || l > ledger.eps0) {
        throw std::domain_error(
            "thickness precondition failed: boundary length " + num17(l) +
            " outside [" + num17(eps) + ", " + num17(ledger.eps0) + "]");
      }
    }
  }
  // One-sided ratios metric-2 over metric-1.
  double r_curves = 0.0;
  bool any = false;
  for (int i = 1; i <= 3; ++i) {
    if (g.m1.len[i] == 0.0) continue;
    r_curves = std::max(r_curves, g.m2.len[i] / g.m1.len[i]);
    any = true;
  }
  if (!any) {
    throw std::domain_error(
        "thick-part check undefined: all boundaries are cusps");
  }
  double r_all = r_curves;
  for (int s = 0; s < 3; ++s) {
    if (!g.m1.seam[s].valid) continue;
    r_all = std::max(r_all, g.m2.seam[s].total / g.m1.seam[s].total);
  }
  for (int i = 0; i < 3; ++i) {
    if (!g.m1.loop[i].valid) continue;
    r_all = std::max(r_all, g.m2.loop[i].total / g.m1.loop[i].total);
  }
  const double k0 = r_all / r_curves;
  CheckRecord r = make_record("thick_one_sided_bound" + suffix, k0, r_all,
                              k0 * r_curves);
  r.pass = std::isfinite(k0);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API.
// ---------------------------------------------------------------------------

MetricPair MetricPair::make(const PantsMetric& a, const PantsMetric& b) {
  MetricPair pair{a, b};
  validate_pair(pair);
  return pair;
}

void validate_pair(const MetricPair& pair) {
  validate_metric(pair.x1);
  validate_metric(pair.x2);
  for (int i = 1; i <= 3; ++i) {
    if (pair.x1.is_cusp(i) != pair.x2.is_cusp(i)) {
      throw std::domain_error(
          "cusp patterns differ at boundary " + std::to_string(i) +
          " (the metrics must live on the same marked surface)");
    }
  }
}

bool in_relative_part(const MetricPair& pair, double eps0) {
  for (int i = 1; i <= 3; ++i) {
    if (!pair.x1.is_cusp(i) && pair.x1.boundary(i) > eps0) return false;
    if (!pair.x2.is_cusp(i) && pair.x2.boundary(i) > eps0) return false;
  }
  return true;
}

double ratio_sup_curves(const MetricPair& pair) {
  validate_pair(pair);
  double sup = 0.0;
  bool any = false;
  for (int i = 1; i <= 3; ++i) {
    if (pair.x1.is_cusp(i)) continue;
    sup = std::max(sup, sym_ratio(pair.x1.boundary(i), pair.x2.boundary(i)));
    any = true;
  }
  if (!any) {
    throw std::domain_error(
        "curve-ratio supremum undefined: all three boundaries are cusps");
  }
  return sup;
}

double ratio_sup_arcs(const MetricPair& pair) {
  validate_pair(pair);
  double sup = 0.0;
  bool any = false;
  for (const auto& ij : kSeamPairs) {
    if (pair.x1.is_cusp(ij[0]) || pair.x1.is_cusp(ij[1])) continue;
    sup = std::max(sup, sym_ratio(seam_length(pair.x1, ij[0], ij[1]),
                                  seam_length(pair.x2, ij[0], ij[1])));
    any = true;
  }
  for (int i = 1; i <= 3; ++i) {
    if (pair.x1.is_cusp(i)) continue;
    sup = std::max(sup, sym_ratio(loop_arc_length(pair.x1, i),
                                  loop_arc_length(pair.x2, i)));
    any = true;
  }
  if (!any) {
    throw std::domain_error(
        "arc-ratio supremum undefined: the arc family is empty (all "
        "boundaries are cusps)");
  }
  return sup;
}

CheckRecord check_theorem_key(const MetricPair& pair,
                              const ConstantLedger& ledger) {
  validate_pair(pair);
  require_relative_part(pair, ledger);
  const double sup_curves = ratio_sup_curves(pair);
  const double sup_all = std::max(sup_curves, ratio_sup_arcs(pair));
  return theorem_key_from(sup_curves, sup_all, ledger);
}

CheckRecord check_theorem_main(const MetricPair& pair,
                               const ConstantLedger& ledger) {
  validate_pair(pair);
  require_relative_part(pair, ledger);
  const double sup_curves = ratio_sup_curves(pair);
  const double sup_all = std::max(sup_curves, ratio_sup_arcs(pair));
  return theorem_main_from(sup_curves, sup_all, ledger);
}

CheckRecord check_diff_boundary(const MetricPair& pair, int i, int j,
                                const ConstantLedger& ledger) {
  validate_pair(pair);
  require_relative_part(pair, ledger);
  const ArcClass arc = ArcClass::seam(i, j);
  if (pair.x1.is_cusp(arc.a) || pair.x1.is_cusp(arc.b)) {
    throw std::domain_error("arc " + arc.name() +
                            " is invalid: an endpoint boundary is a cusp");
  }
  const PairGeo g{build_geo(pair.x1, ledger), build_geo(pair.x2, ledger)};
  return diff_boundary_from(g, i, j, ledger, "");
}

CheckRecord check_same_boundary(const MetricPair& pair, int i,
                                const ConstantLedger& ledger) {
  validate_pair(pair);
  require_relative_part(pair, ledger);
  const ArcClass arc = ArcClass::loop(i);
  if (pair.x1.is_cusp(arc.a)) {
    throw std::domain_error("arc " + arc.name() +
                            " is invalid: the base boundary is a cusp");
  }
  const PairGeo g{build_geo(pair.x1, ledger), build_geo(pair.x2, ledger)};
  return same_boundary_from(g, i, ledger, "");
}

std::vector<CheckRecord> check_lemma_suite(const MetricPair& pair,
                                           const ConstantLedger& ledger) {
  validate_pair(pair);
  require_relative_part(pair, ledger);
  const PairGeo g{build_geo(pair.x1, ledger), build_geo(pair.x2, ledger)};
  std::vector<CheckRecord> out;
  suite_from(g, ledger, &out);
  return out;
}

CheckRecord check_thick_part(const MetricPair& pair, double eps,
                             const ConstantLedger& ledger) {
  validate_pair(pair);
  if (!(eps > 0.0) || !(eps <= ledger.eps0)) {
    throw std::domain_error("thickness eps must lie in (0, eps0] (got " +
                            num17(eps) + ")");
  }
  const PairGeo g{build_geo(pair.x1, ledger), build_geo(pair.x2, ledger)};
  return thick_from(g, eps, ledger, "");
}

double empirical_infimum_middle(double eps0, std::uint64_t samples,
                                std::uint64_t seed) {
  if (!(std::isfinite(eps0)) || eps0 < kSampleFloorLength ||
      eps0 > kMaxBoundaryLength) {
    throw std::domain_error("eps0 must lie in [" + num17(kSampleFloorLength) +
                            ", " + num17(kMaxBoundaryLength) + "] (got " +
                            num17(eps0) + ")");
  }
  if (samples == 0) {
    throw std::domain_error("at least one sample is required");
  }
  SplitMix64 rng(seed);
  double minimum = std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 0; s < samples; ++s) {
    const double l1 = rng.log_uniform(kSampleFloorLength, eps0);
    const double l2 = rng.log_uniform(kSampleFloorLength, eps0);
    const double l3 = rng.log_uniform(kSampleFloorLength, eps0);
    minimum = std::min(minimum, min_middle_all_arcs(PantsMetric{l1, l2, l3}));
  }
  return minimum;
}

RatioReport make_ratio_report(const MetricPair& pair,
                              const ConstantLedger& ledger,
                              std::optional<double> thick_eps) {
  validate_pair(pair);
  require_relative_part(pair, ledger);
  const PairGeo g{build_geo(pair.x1, ledger), build_geo(pair.x2, ledger)};

  RatioReport r;
  r.per_class.reserve(9);
  for (int i = 1; i <= 3; ++i) {
    r.per_class.push_back({"curve:" + std::to_string(i), g.m1.len[i],
                           g.m2.len[i], sym_ratio(g.m1.len[i], g.m2.len[i])});
  }
  for (int s = 0; s < 3; ++s) {
    const std::string name =
        ArcClass::seam(kSeamPairs[s][0], kSeamPairs[s][1]).name();
    if (g.m1.seam[s].valid) {
      r.per_class.push_back({name, g.m1.seam[s].total, g.m2.seam[s].total,
                             sym_ratio(g.m1.seam[s].total,
                                       g.m2.seam[s].total)});
    } else {
      r.per_class.push_back({name, 0.0, 0.0, 1.0});
    }
  }
  for (int i = 1; i <= 3; ++i) {
    const std::string name = ArcClass::loop(i).name();
    if (g.m1.loop[i - 1].valid) {
      r.per_class.push_back({name, g.m1.loop[i - 1].total,
                             g.m2.loop[i - 1].total,
                             sym_ratio(g.m1.loop[i - 1].total,
                                       g.m2.loop[i - 1].total)});
    } else {
      r.per_class.push_back({name, 0.0, 0.0, 1.0});
    }
  }

  r.sup_curves = sup_curves_from(g);
  r.sup_arcs = sup_arcs_from(g);
  r.sup_all = std::max(r.sup_curves, r.sup_arcs);

  r.checks.push_back(theorem_key_from(r.sup_curves, r.sup_all, ledger));
  r.checks.push_back(theorem_main_from(r.sup_curves, r.sup_all, ledger));
  const PairGeo gr = g.swapped();
  for (int s = 0; s < 3; ++s) {
    if (!g.m1.seam[s].valid) continue;
    const int i = kSeamPairs[s][0];
    const int j = kSeamPairs[s][1];
    r.checks.push_back(diff_boundary_from(g, i, j, ledger, ""));
    r.checks.push_back(diff_boundary_from(gr, i, j, ledger, "(rev)"));
  }
  for (int i = 1; i <= 3; ++i) {
    if (!g.m1.loop[i - 1].valid) continue;
    r.checks.push_back(same_boundary_from(g, i, ledger, ""));
    r.checks.push_back(same_boundary_from(gr, i, ledger, "(rev)"));
  }
  suite_from(g, ledger, &r.checks);
  if (thick_eps) {
    r.checks.push_back(thick_from(g, *thick_eps, ledger, ""));
    r.checks.push_back(thick_from(gr, *thick_eps, ledger, "(rev)"));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sweep.
// ---------------------------------------------------------------------------

namespace {

/// Worker-local aggregation, merged deterministically in worker order.
struct Accum {
  double max_k = 1.0;
  bool has_worst = false;
  PantsMetric worst_a;
  PantsMetric worst_b;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t errors = 0;
  std::map<std::string, CheckTally> tallies;
  bool any_k0 = false;
  double max_k0 = 0.0;
};

void merge_into(Accum* into, const Accum& from) {
  if (from.has_worst && (!into->has_worst || from.max_k > into->max_k)) {
    into->max_k = std::max(into->max_k, from.max_k);
    into->has_worst = true;
    into->worst_a = from.worst_a;
    into->worst_b = from.worst_b;
  }
  into->passed += from.passed;
  into->failed += from.failed;
  into->errors += from.errors;
  for (const auto& [name, tally] : from.tallies) {
    CheckTally& t = into->tallies[name];
    t.applied += tally.applied;
    t.failed += tally.failed;
  }
  if (from.any_k0) {
    into->max_k0 = into->any_k0 ? std::max(into->max_k0, from.max_k0)
                                : from.max_k0;
    into->any_k0 = true;
  }
}

[[nodiscard]] unsigned sweep_thread_count(std::uint64_t n_pairs) {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PANTS_SPECTRA_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) {
      cap = static_cast<unsigned>(v);
    }
  }
  const std::uint64_t limit = std::max<std::uint64_t>(1, n_pairs);
  return static_cast<unsigned>(
      std::min<std::uint64_t>(cap, limit));
}

void process_pair(std::uint64_t idx, const SweepConfig& config,
                  const ConstantLedger& ledger, SweepRow* row, Accum* acc) {
  row->pair_id = idx;
  SplitMix64 rng(substream_seed(config.seed, idx));
  const double lo =
      config.thick_eps ? *config.thick_eps : kSampleFloorLength;
  const auto draw_metric = [&]() {
    double l[3] = {0.0, 0.0, 0.0};
    for (int b = 0; b < 3 - config.n_cusps; ++b) {
      l[b] = rng.log_uniform(lo, config.eps0);
    }
    return PantsMetric{l[0], l[1], l[2]};
  };
  row->a = draw_metric();
  row->b = draw_metric();
  try {
    const MetricPair pair = MetricPair::make(row->a, row->b);
    const RatioReport rep = make_ratio_report(pair, ledger, config.thick_eps);
    row->sup_curves = rep.sup_curves;
    row->sup_arcs = rep.sup_arcs;
    row->empirical_k = rep.sup_all / rep.sup_curves;
    row->all_checks_pass = true;
    for (const CheckRecord& c : rep.checks) {
      const std::string base = c.name.substr(0, c.name.find('('));
      CheckTally& t = acc->tallies[base];
      ++t.applied;
      if (!c.pass) ++t.failed;
      row->all_checks_pass = row->all_checks_pass && c.pass;
      if (base == "theorem_key") {
        row->theorem_key_pass = c.pass;
      } else if (base == "theorem_main") {
        row->theorem_main_pass = c.pass;
      } else if (base == "thick_one_sided_bound") {
        acc->max_k0 = acc->any_k0 ? std::max(acc->max_k0, c.bound_used)
                                  : c.bound_used;
        acc->any_k0 = true;
      }
    }
    if (row->all_checks_pass) {
      ++acc->passed;
    } else {
      ++acc->failed;
    }
    if (!acc->has_worst || row->empirical_k > acc->max_k) {
      acc->max_k = std::max(acc->max_k, row->empirical_k);
      acc->has_worst = true;
      acc->worst_a = row->a;
      acc->worst_b = row->b;
    }
  } catch (const std::exception& e) {
    row->error = true;
    row->error_message = e.what();
    ++acc->errors;
  }
}

}  // namespace

SweepResult sweep(const SweepConfig& config) {
  if (config.n_cusps < 0 || config.n_cusps > 2) {
    throw std::domain_error("n_cusps must be 0, 1, or 2 (got " +
                            std::to_string(config.n_cusps) + ")");
  }
  if (config.eps0 < kSampleFloorLength) {
    throw std::domain_error("sweep requires eps0 >= " +
                            num17(kSampleFloorLength) + " (got " +
                            num17(config.eps0) + ")");
  }
  if (config.thick_eps) {
    if (!(*config.thick_eps >= kMinBoundaryLength) ||
        !(*config.thick_eps <= config.eps0)) {
      throw std::domain_error("thick_eps must lie in [" +
                              num17(kMinBoundaryLength) + ", eps0] (got " +
                              num17(*config.thick_eps) + ")");
    }
  }
  const ConstantLedger ledger = build_ledger(config.eps0);

  SweepResult result;
  result.rows.resize(config.n_pairs);
  Accum total;

  if (config.n_pairs > 0) {
    const unsigned n_threads = sweep_thread_count(config.n_pairs);
    if (n_threads <= 1) {
      for (std::uint64_t idx = 0; idx < config.n_pairs; ++idx) {
        process_pair(idx, config, ledger, &result.rows[idx], &total);
      }
    } else {
      std::vector<Accum> accums(n_threads);
      std::vector<std::thread> workers;
      workers.reserve(n_threads);
      const std::uint64_t chunk =
          (config.n_pairs + n_threads - 1) / n_threads;
      for (unsigned t = 0; t < n_threads; ++t) {
        const std::uint64_t begin = static_cast<std::uint64_t>(t) * chunk;
        const std::uint64_t end =
            std::min<std::uint64_t>(begin + chunk, config.n_pairs);
        workers.emplace_back([&, t, begin, end]() {
          for (std::uint64_t idx = begin; idx < end; ++idx) {
            process_pair(idx, config, ledger, &result.rows[idx], &accums[t]);
          }
        });
      }
      for (std::thread& w : workers) w.join();
      for (const Accum& a : accums) merge_into(&total, a);
    }
  }

  SweepSummary& s = result.summary;
  s.eps0 = config.eps0;
  s.n_pairs = config.n_pairs;
  s.seed = config.seed;
  s.n_cusps = config.n_cusps;
  s.thick_eps = config.thick_eps;
  s.empirical_min_K = total.max_k;
  s.empirical_min_C = std::log(total.max_k);
  s.worst_a = total.worst_a;
  s.worst_b = total.worst_b;
  s.pairs_all_checks_passed = total.passed;
  s.pairs_with_failures = total.failed;
  s.errors = total.errors;
  s.tallies = std::move(total.tallies);
  if (total.any_k0) s.empirical_K0 = total.max_k0;
  return result;
}

}  // namespace pants_spectra
