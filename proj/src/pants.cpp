#include "pants_spectra/pants.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pants_spectra/hyp_trig.hpp"

namespace pants_spectra {
namespace {

/// Relative inset (times the boundary length) of the root bracket for the
/// loop split; roots this close to a pentagon corner are reported as errors
/// rather than polished to an unverifiable value.
constexpr double kLoopBracketInsetRel = 1e-12;

/// Iteration cap for the bisection phase of the loop split root.
constexpr int kLoopBisectionMaxIter = 200;

/// Bisection stops once the bracket width falls below this multiple of the
/// half-length (about two units in the last place).
constexpr double kLoopBisectionWidthRel = 4e-16;

/// Newton polish steps applied after bisection.
constexpr int kLoopNewtonSteps = 5;

/// Required relative residual of the split equation at the returned root.
constexpr double kLoopSplitResidualTol = 1e-12;

/// Required relative residual of both pentagon identities for the returned
/// loop length.
constexpr double kLoopPentagonResidualTol = 1e-9;

/// Render a double with 17 significant digits for diagnostics.
[[nodiscard]] std::string num17(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

/// Trim ASCII whitespace from both ends.
[[nodiscard]] std::string trim(const std::string& s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

/// Parse one decimal number, requiring the whole token to be consumed.
[[nodiscard]] double parse_double_token(const std::string& token,
                                        const std::string& context) {
  const std::string t = trim(token);
  if (t.empty()) {
    throw std::invalid_argument("empty boundary length in '" + context + "'");
  }
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("could not parse boundary length '" + t +
                                "' in '" + context + "'");
  }
  if (pos != t.size()) {
    throw std::invalid_argument("trailing characters after number '" + t +
                                "' in '" + context + "'");
  }
  return value;
}

/// Parse one small positive integer (boundary index), full consumption.
[[nodiscard]] int parse_index_token(const std::string& token,
                                    const std::string& context) {
  const std::string t = trim(token);
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(t, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("could not parse boundary index '" + t +
                                "' in '" + context + "'");
  }
  if (t.empty() || pos != t.size()) {
    throw std::invalid_argument("could not parse boundary index '" + t +
                                "' in '" + context + "'");
  }
  return value;
}

/// The two boundary indices other than i, in increasing order.
void other_indices(int i, int* j, int* k) {
  switch (i) {
    case 1: *j = 2; *k = 3; return;
    case 2: *j = 1; *k = 3; return;
    case 3: *j = 1; *k = 2; return;
    default:
      throw std::out_of_range("boundary index must be 1, 2, or 3 (got " +
                              std::to_string(i) + ")");
  }
}

/// Result of the loop split root-find: the split parameter and the half
/// lengths it was solved against.
struct LoopSplit {
  double t = 0.0;   ///< distance along the half-boundary toward index j
  double h = 0.0;   ///< half-length of the base boundary
  double cj = 0.0;  ///< half-length of the lower-indexed other boundary
  double ck = 0.0;  ///< half-length of the higher-indexed other boundary
};

/**
 * @brief Solve cosh(cj) sinh(h - t) = cosh(ck) sinh(t) for t in (0, h).
 *
 * Works on the log-domain form
 *   g(t) = [log cosh(cj) + log sinh(h - t)] - [log cosh(ck) + log sinh(t)],
 * which is strictly decreasing from +inf to -inf on (0, h), so the root is
 * unique.  Bracketed bisection is followed by a short Newton polish with
 * the iterates clamped to the bracket; the residual |g| at the returned
 * root is the relative mismatch of the two sides and must be at most
 * kLoopSplitResidualTol.
 */
[[nodiscard]] LoopSplit solve_loop_split(const PantsMetric& p, int i) {
  const double li = p.boundary(i);
  if (li == 0.0) {
    throw std::domain_error(
        "loop arc requires a geodesic base boundary, but boundary " +
        std::to_string(i) + " is a cusp");
  }
  int j = 0;
  int k = 0;
  other_indices(i, &j, &k);

  LoopSplit s;
  s.h = li / 2.0;
  s.cj = p.boundary(j) / 2.0;
  s.ck = p.boundary(k) / 2.0;

  const double lcj = log_cosh(s.cj);
  const double lck = log_cosh(s.ck);
  const auto g = [&](double t) {
    return (lcj + log_sinh(s.h - t)) - (lck + log_sinh(t));
  };

  const double inset = li * kLoopBracketInsetRel;
  double lo = inset;
  double hi = s.h - inset;
  if (!(lo < hi)) {
    throw std::runtime_error("loop split bracket collapsed for boundary " +
                             std::to_string(i) + " of length " + num17(li));
  }
  double g_lo = g(lo);
  double g_hi = g(hi);
  if (g_lo == 0.0) {
    s.t = lo;
    return s;
  }
  if (g_hi == 0.0) {
    s.t = hi;
    return s;
  }
  if (g_lo < 0.0 || g_hi > 0.0) {
    throw std::runtime_error(
        "loop split root lies outside the supported bracket (" + num17(lo) +
        ", " + num17(hi) + ") for boundary lengths (" + num17(p.l1) + ", " +
        num17(p.l2) + ", " + num17(p.l3) + "), base boundary " +
        std::to_string(i) + "; g(lo)=" + num17(g_lo) +
        ", g(hi)=" + num17(g_hi));
  }

  const double width_target = s.h * kLoopBisectionWidthRel;
  for (int iter = 0; iter < kLoopBisectionMaxIter && (hi - lo) > width_target;
       ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket is a single ulp wide
    const double gm = g(mid);
    if (gm > 0.0) {
      lo = mid;
    } else if (gm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      hi = mid;
      break;
    }
  }

  double t = 0.5 * (lo + hi);
  double gt = g(t);
  double best_t = t;
  double best_abs = std::fabs(gt);
  for (int step = 0; step < kLoopNewtonSteps && gt != 0.0; ++step) {
    // g'(t) = -(coth(h - t) + coth(t)) is strictly negative on the bracket.
    const double slope = 1.0 / std::tanh(s.h - t) + 1.0 / std::tanh(t);
    double next = t + gt / slope;
    next = std::clamp(next, lo, hi);
    if (next == t) break;
    t = next;
    gt = g(t);
    if (std::fabs(gt) < best_abs) {
      best_t = t;
      best_abs = std::fabs(gt);
    }
  }

  if (!(best_abs <= kLoopSplitResidualTol)) {
    throw std::runtime_error(
        "loop split equation residual " + num17(best_abs) +
        " exceeds tolerance " + num17(kLoopSplitResidualTol) +
        " for boundary lengths (" + num17(p.l1) + ", " + num17(p.l2) + ", " +
        num17(p.l3) + "), base boundary " + std::to_string(i));
  }
  s.t = best_t;
  return s;
}

}  // namespace

double PantsMetric::boundary(int i) const {
  switch (i) {
    case 1: return l1;
    case 2: return l2;
    case 3: return l3;
    default:
      throw std::out_of_range("boundary index must be 1, 2, or 3 (got " +
                              std::to_string(i) + ")");
  }
}

PantsMetric PantsMetric::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  if (parts.size() != 3) {
    throw std::invalid_argument(
        "expected exactly three comma-separated boundary lengths, got '" +
        text + "'");
  }
  PantsMetric p;
  p.l1 = parse_double_token(parts[0], text);
  p.l2 = parse_double_token(parts[1], text);
  p.l3 = parse_double_token(parts[2], text);
  validate_metric(p);
  return p;
}

void validate_metric(const PantsMetric& p) {
  const double values[3] = {p.l1, p.l2, p.l3};
  for (int i = 0; i < 3; ++i) {
    const double v = values[i];
    const std::string label = "l" + std::to_string(i + 1);
    if (!std::isfinite(v)) {
      throw std::domain_error("boundary length " + label +
                              " must be finite (got " + num17(v) + ")");
    }
    if (v < 0.0) {
      throw std::domain_error("boundary length " + label +
                              " must be nonnegative (got " + num17(v) + ")");
    }
    if (v > 0.0 && (v < kMinBoundaryLength || v > kMaxBoundaryLength)) {
      throw std::domain_error(
          "positive boundary length " + label + " must lie in [" +
          num17(kMinBoundaryLength) + ", " + num17(kMaxBoundaryLength) +
          "] (got " + num17(v) + "); use 0 for a cusp");
    }
  }
}

ArcClass ArcClass::seam(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) {
    throw std::out_of_range("seam boundary indices must be in 1..3 (got " +
                            std::to_string(i) + ", " + std::to_string(j) +
                            ")");
  }
  if (i == j) {
    throw std::invalid_argument(
        "seam requires two distinct boundary indices (got " +
        std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  ArcClass a;
  a.kind = Kind::Seam;
  a.a = std::min(i, j);
  a.b = std::max(i, j);
  return a;
}

ArcClass ArcClass::loop(int i) {
  if (i < 1 || i > 3) {
    throw std::out_of_range("loop boundary index must be in 1..3 (got " +
                            std::to_string(i) + ")");
  }
  ArcClass a;
  a.kind = Kind::Loop;
  a.a = i;
  a.b = 0;
  return a;
}

std::string ArcClass::name() const {
  if (kind == Kind::Seam) {
    return "seam:" + std::to_string(a) + "," + std::to_string(b);
  }
  return "loop:" + std::to_string(a);
}

ArcClass ArcClass::parse(const std::string& text) {
  const std::string t = trim(text);
  const auto colon = t.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument(
        "expected 'seam:i,j' or 'loop:i', got '" + text + "'");
  }
  const std::string head = trim(t.substr(0, colon));
  const std::string tail = t.substr(colon + 1);
  if (head == "seam") {
    const auto comma = tail.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument(
          "seam arc needs two indices 'seam:i,j', got '" + text + "'");
    }
    const int i = parse_index_token(tail.substr(0, comma), text);
    const int j = parse_index_token(tail.substr(comma + 1), text);
    return ArcClass::seam(i, j);
  }
  if (head == "loop") {
    const int i = parse_index_token(tail, text);
    return ArcClass::loop(i);
  }
  throw std::invalid_argument("unknown arc kind '" + head + "' in '" + text +
                              "' (expected 'seam' or 'loop')");
}

double curve_length(const PantsMetric& p, CurveClass c) {
  validate_metric(p);
  const double l = p.boundary(c.index);
  if (l == 0.0) {
    throw std::domain_error("boundary " + std::to_string(c.index) +
                            " is a cusp and carries no closed geodesic");
  }
  return l;
}

double seam_length(const PantsMetric& p, int i, int j) {
  validate_metric(p);
  const ArcClass a = ArcClass::seam(i, j);  // validates and canonicalizes
  const double li = p.boundary(a.a);
  const double lj = p.boundary(a.b);
  if (li == 0.0 || lj == 0.0) {
    throw std::domain_error(
        "seam arc requires geodesic boundaries at both ends, but boundary " +
        std::to_string(li == 0.0 ? a.a : a.b) + " is a cusp");
  }
  const int k = 6 - a.a - a.b;  // the third boundary index
  const double lk = p.boundary(k);
  return hexagon_side(li / 2.0, lj / 2.0, lk / 2.0);
}

double loop_split(const PantsMetric& p, int i) {
  validate_metric(p);
  return solve_loop_split(p, i).t;
}

double loop_arc_length(const PantsMetric& p, int i) {
  validate_metric(p);
  const LoopSplit s = solve_loop_split(p, i);

  // sinh(L/2) = cosh(cj) / sinh(t); the exponent stays far below overflow
  // for in-range boundary lengths (at most ~405).
  const double log_sinh_half = log_cosh(s.cj) - log_sinh(s.t);
  const double half = asinh_stable(std::exp(log_sinh_half));
  const double length = 2.0 * half;

  // Verify both right-angled pentagon identities in the log domain:
  //   sinh(L/2) sinh(t)     = cosh(cj)
  //   sinh(L/2) sinh(h - t) = cosh(ck)
  const double log_sinh_half_back = log_sinh(half);
  const double r1 = log_sinh_half_back + log_sinh(s.t) - log_cosh(s.cj);
  const double r2 =
      log_sinh_half_back + log_sinh(s.h - s.t) - log_cosh(s.ck);
  const double rel1 = std::fabs(std::expm1(r1));
  const double rel2 = std::fabs(std::expm1(r2));
  if (!(rel1 <= kLoopPentagonResidualTol && rel2 <= kLoopPentagonResidualTol)) {
    throw std::runtime_error(
        "loop length failed pentagon verification: residuals " + num17(rel1) +
        ", " + num17(rel2) + " exceed " + num17(kLoopPentagonResidualTol) +
        " for boundary lengths (" + num17(p.l1) + ", " + num17(p.l2) + ", " +
        num17(p.l3) + "), base boundary " + std::to_string(i));
  }
  return length;
}

double arc_length(const PantsMetric& p, const ArcClass& a) {
  if (a.kind == ArcClass::Kind::Seam) {
    return seam_length(p, a.a, a.b);
  }
  return loop_arc_length(p, a.a);
}

std::vector<SpectrumEntry> spectrum(const PantsMetric& p) {
  validate_metric(p);
  std::vector<SpectrumEntry> out;
  out.reserve(9);
  for (int i = 1; i <= 3; ++i) {
    if (p.is_cusp(i)) continue;
    out.push_back({"curve", i, 0, curve_length(p, CurveClass{i})});
  }
  constexpr int seam_pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& ij : seam_pairs) {
    if (p.is_cusp(ij[0]) || p.is_cusp(ij[1])) continue;
    out.push_back({"seam", ij[0], ij[1], seam_length(p, ij[0], ij[1])});
  }
  for (int i = 1; i <= 3; ++i) {
    if (p.is_cusp(i)) continue;
    out.push_back({"loop", i, 0, loop_arc_length(p, i)});
  }
  return out;
}

}  // namespace pants_spectra
