#include "pants_spectra/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pants_spectra/collar.hpp"

namespace pants_spectra {
namespace {

/// Case tag from the two endpoint segments.
[[nodiscard]] CaseTag classify(double d_start, double d_end) {
  if (d_start > 0.0 && d_end > 0.0) return CaseTag::A;
  if (d_start == 0.0 && d_end > 0.0) return CaseTag::B;
  if (d_start > 0.0 && d_end == 0.0) return CaseTag::C;
  return CaseTag::D;
}

}  // namespace

std::string case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::A: return "A";
    case CaseTag::B: return "B";
    case CaseTag::C: return "C";
    case CaseTag::D: return "D";
  }
  throw std::logic_error("unreachable case tag");
}

Decomposition decompose_seam(const PantsMetric& p, int i, int j,
                             const ConstantLedger& ledger) {
  Decomposition d;
  d.arc = ArcClass::seam(i, j);
  d.total = seam_length(p, d.arc.a, d.arc.b);
  d.d_start = inner_boundary_offset(p.boundary(d.arc.a), ledger);
  d.d_end = inner_boundary_offset(p.boundary(d.arc.b), ledger);
  d.middle = d.total - d.d_start - d.d_end;
  d.case_tag = classify(d.d_start, d.d_end);
  return d;
}

Decomposition decompose_loop(const PantsMetric& p, int i,
                             const ConstantLedger& ledger) {
  Decomposition d;
  d.arc = ArcClass::loop(i);
  d.total = loop_arc_length(p, i);
  const double segment = inner_boundary_offset(p.boundary(i), ledger);
  d.d_start = segment;
  d.d_end = segment;
  d.middle = d.total - 2.0 * segment;
  d.case_tag = segment > 0.0 ? CaseTag::A : CaseTag::B;
  return d;
}

Decomposition decompose_arc(const PantsMetric& p, const ArcClass& arc,
                            const ConstantLedger& ledger) {
  if (arc.kind == ArcClass::Kind::Seam) {
    return decompose_seam(p, arc.a, arc.b, ledger);
  }
  return decompose_loop(p, arc.a, ledger);
}

std::vector<Decomposition> decompose_all(const PantsMetric& p,
                                         const ConstantLedger& ledger) {
  validate_metric(p);
  std::vector<Decomposition> out;
  out.reserve(6);
  constexpr int seam_pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& ij : seam_pairs) {
    if (p.is_cusp(ij[0]) || p.is_cusp(ij[1])) continue;
    out.push_back(decompose_seam(p, ij[0], ij[1], ledger));
  }
  for (int i = 1; i <= 3; ++i) {
    if (p.is_cusp(i)) continue;
    out.push_back(decompose_loop(p, i, ledger));
  }
  return out;
}

double min_middle_all_arcs(const PantsMetric& p) {
  validate_metric(p);
  const auto segment = [](double l) {
    return l < eps_star() ? offset_for_target(l, eps0_prime()) : 0.0;
  };
  double minimum = std::numeric_limits<double>::infinity();
  bool any = false;
  constexpr int seam_pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& ij : seam_pairs) {
    const double li = p.boundary(ij[0]);
    const double lj = p.boundary(ij[1]);
    if (li == 0.0 || lj == 0.0) continue;
    const double middle =
        seam_length(p, ij[0], ij[1]) - segment(li) - segment(lj);
    minimum = std::min(minimum, middle);
    any = true;
  }
  for (int i = 1; i <= 3; ++i) {
    const double li = p.boundary(i);
    if (li == 0.0) continue;
    const double middle = loop_arc_length(p, i) - 2.0 * segment(li);
    minimum = std::min(minimum, middle);
    any = true;
  }
  if (!any) {
    throw std::domain_error(
        "no arc class is valid on a pants whose boundaries are all cusps");
  }
  return minimum;
}

CollarSegmentBounds collar_segment_bounds(double l) {
  if (!(l > 0.0) || !(l < eps_star())) {
    std::ostringstream os;
    os.precision(17);
    os << "collar segment bracket requires 0 < l < " << eps_star()
       << " (got " << l << ")";
    throw std::domain_error(os.str());
  }
  const double lower = std::log(eps0_prime() / 2.0) - std::log(l / 2.0);
  return {lower, 2.0 * lower};
}

}  // namespace pants_spectra
