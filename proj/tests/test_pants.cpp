#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pants_spectra/hyp_trig.hpp"
#include "pants_spectra/pants.hpp"
#include "test_util.hpp"

namespace ps = pants_spectra;
using test_util::rel_err;

namespace {

/// Frozen lengths from the 50-digit offline computation, rounded to double.
constexpr double kSeam_030303 = 5.1898366893172008547;
constexpr double kLoop_030303 = 6.5901198112259221542;
constexpr double kSeam12_010103 = 7.3837882508866067110;
constexpr double kSeam12_050103 = 5.7792484049006759898;
constexpr double kLoopT_020304 = 0.049783681386850476798;
constexpr double kLoop1_020304 = 7.4092321202438192655;
constexpr double kSeam12_0303cusp = 5.1842794167878216691;
constexpr double kLoop1_03cuspcusp = 6.5677658845159381569;
constexpr double kLoop1_03cusp01 = 6.5690122472909907853;
constexpr double kSeam13_03cusp01 = 6.2812274654645742318;
constexpr double kLoop3_03cusp01 = 8.7753933897523942290;

constexpr double kFrozenTol = 1e-12;

}  // namespace

TEST_CASE("metric parsing accepts well-formed triples") {
  const ps::PantsMetric p = ps::PantsMetric::parse("0.3,0.4,0.5");
  CHECK(p.l1 == 0.3);
  CHECK(p.l2 == 0.4);
  CHECK(p.l3 == 0.5);

  const ps::PantsMetric q = ps::PantsMetric::parse(" 0.3 , 0 , 0.1 ");
  CHECK(q.l1 == 0.3);
  CHECK(q.l2 == 0.0);
  CHECK(q.is_cusp(2));
  CHECK_FALSE(q.is_cusp(1));
  CHECK(q.l3 == 0.1);

  const ps::PantsMetric r = ps::PantsMetric::parse("1e-12,700,0");
  CHECK(r.l1 == 1e-12);
  CHECK(r.l2 == 700.0);
}

TEST_CASE("metric parsing rejects malformed input") {
  CHECK_THROWS_AS((void)ps::PantsMetric::parse("0.3,0.4"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)ps::PantsMetric::parse("0.3,0.4,0.5,0.6"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)ps::PantsMetric::parse("0.3,abc,0.5"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)ps::PantsMetric::parse("0.3,0.4x,0.5"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)ps::PantsMetric::parse("0.3,,0.5"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)ps::PantsMetric::parse(""), std::invalid_argument);
}

TEST_CASE("metric validation enforces the supported length range") {
  CHECK_NOTHROW(ps::validate_metric({1e-12, 700.0, 0.0}));
  CHECK_THROWS_AS(ps::validate_metric({1e-13, 0.3, 0.3}), std::domain_error);
  CHECK_THROWS_AS(ps::validate_metric({0.3, 701.0, 0.3}), std::domain_error);
  CHECK_THROWS_AS(ps::validate_metric({0.3, -0.1, 0.3}), std::domain_error);
  CHECK_THROWS_AS(ps::validate_metric({std::nan(""), 0.3, 0.3}),
                  std::domain_error);
  CHECK_THROWS_AS(
      ps::validate_metric({std::numeric_limits<double>::infinity(), 0.3, 0.3}),
      std::domain_error);

  // The range diagnostic points at the cusp encoding.
  try {
    ps::validate_metric({1e-13, 0.3, 0.3});
    FAIL("expected a domain_error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("use 0 for a cusp") != std::string::npos);
  }
}

TEST_CASE("boundary access is 1-based and range-checked") {
  const ps::PantsMetric p{0.3, 0.4, 0.5};
  CHECK(p.boundary(1) == 0.3);
  CHECK(p.boundary(2) == 0.4);
  CHECK(p.boundary(3) == 0.5);
  CHECK_THROWS_AS((void)p.boundary(0), std::out_of_range);
  CHECK_THROWS_AS((void)p.boundary(4), std::out_of_range);
}

TEST_CASE("arc classes canonicalize, print, and parse") {
  const ps::ArcClass s = ps::ArcClass::seam(2, 1);
  CHECK(s.kind == ps::ArcClass::Kind::Seam);
  CHECK(s.a == 1);
  CHECK(s.b == 2);
  CHECK(s.name() == "seam:1,2");

  const ps::ArcClass l = ps::ArcClass::loop(2);
  CHECK(l.kind == ps::ArcClass::Kind::Loop);
  CHECK(l.a == 2);
  CHECK(l.b == 0);
  CHECK(l.name() == "loop:2");

  // Round trips through the text form for every class.
  const char* names[6] = {"seam:1,2", "seam:1,3", "seam:2,3",
                          "loop:1",   "loop:2",   "loop:3"};
  for (const char* n : names) {
    CHECK(ps::ArcClass::parse(n).name() == n);
  }
  CHECK(ps::ArcClass::parse("seam:3,1").name() == "seam:1,3");
  CHECK(ps::ArcClass::parse(" loop: 2 ").name() == "loop:2");

  CHECK_THROWS_AS((void)ps::ArcClass::seam(1, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)ps::ArcClass::seam(0, 2), std::out_of_range);
  CHECK_THROWS_AS((void)ps::ArcClass::seam(1, 4), std::out_of_range);
  CHECK_THROWS_AS((void)ps::ArcClass::loop(0), std::out_of_range);
  CHECK_THROWS_AS((void)ps::ArcClass::loop(4), std::out_of_range);
  CHECK_THROWS_AS((void)ps::ArcClass::parse("spiral:1"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)ps::ArcClass::parse("seam:1"), std::invalid_argument);
  CHECK_THROWS_AS((void)ps::ArcClass::parse("seam:1,2,3"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)ps::ArcClass::parse("loop:"), std::invalid_argument);
  CHECK_THROWS_AS((void)ps::ArcClass::parse("loop"), std::invalid_argument);
}

TEST_CASE("curve lengths are the boundary lengths") {
  const ps::PantsMetric p{0.3, 0.0, 0.1};
  CHECK(ps::curve_length(p, ps::CurveClass{1}) == 0.3);
  CHECK(ps::curve_length(p, ps::CurveClass{3}) == 0.1);
  CHECK_THROWS_AS((void)ps::curve_length(p, ps::CurveClass{2}),
                  std::domain_error);
  CHECK_THROWS_AS((void)ps::curve_length(p, ps::CurveClass{0}),
                  std::out_of_range);
}

TEST_CASE("seam lengths match frozen references") {
  CHECK(rel_err(ps::seam_length({0.3, 0.3, 0.3}, 1, 2), kSeam_030303) <=
        kFrozenTol);
  CHECK(rel_err(ps::seam_length({0.1, 0.1, 0.3}, 1, 2), kSeam12_010103) <=
        kFrozenTol);
  CHECK(rel_err(ps::seam_length({0.5, 0.1, 0.3}, 1, 2), kSeam12_050103) <=
        kFrozenTol);
  CHECK(rel_err(ps::seam_length({0.3, 0.3, 0.0}, 1, 2), kSeam12_0303cusp) <=
        kFrozenTol);
  CHECK(rel_err(ps::seam_length({0.3, 0.0, 0.1}, 1, 3), kSeam13_03cusp01) <=
        kFrozenTol);
}

TEST_CASE("seam length is symmetric in its endpoints") {
  const ps::PantsMetric p{0.2, 0.7, 1.3};
  CHECK(ps::seam_length(p, 1, 2) == ps::seam_length(p, 2, 1));
  CHECK(ps::seam_length(p, 3, 1) == ps::seam_length(p, 1, 3));
  // All three seams of an equilateral metric coincide.
  const ps::PantsMetric e{0.3, 0.3, 0.3};
  CHECK(ps::seam_length(e, 1, 2) == ps::seam_length(e, 1, 3));
  CHECK(ps::seam_length(e, 1, 2) == ps::seam_length(e, 2, 3));
}

TEST_CASE("seam endpoints on cusps are rejected") {
  const ps::PantsMetric p{0.3, 0.0, 0.1};
  CHECK_THROWS_AS((void)ps::seam_length(p, 1, 2), std::domain_error);
  CHECK_THROWS_AS((void)ps::seam_length(p, 2, 3), std::domain_error);
  CHECK_NOTHROW((void)ps::seam_length(p, 1, 3));
  CHECK_THROWS_AS((void)ps::seam_length(p, 0, 2), std::out_of_range);
  CHECK_THROWS_AS((void)ps::seam_length(p, 1, 1), std::invalid_argument);
}

TEST_CASE("seam length is continuous as a boundary shrinks to a cusp") {
  const double near = ps::seam_length({0.3, 0.3, 1e-12}, 1, 2);
  const double at = ps::seam_length({0.3, 0.3, 0.0}, 1, 2);
  CHECK(rel_err(near, at) <= 1e-9);
}

TEST_CASE("loop lengths and splits match frozen references") {
  const ps::PantsMetric sym{0.3, 0.3, 0.3};
  CHECK(rel_err(ps::loop_split(sym, 1), 0.075) <= kFrozenTol);
  CHECK(rel_err(ps::loop_arc_length(sym, 1), kLoop_030303) <= kFrozenTol);
  CHECK(rel_err(ps::loop_arc_length(sym, 2), kLoop_030303) <= kFrozenTol);

  const ps::PantsMetric p{0.2, 0.3, 0.4};
  CHECK(rel_err(ps::loop_split(p, 1), kLoopT_020304) <= kFrozenTol);
  CHECK(rel_err(ps::loop_arc_length(p, 1), kLoop1_020304) <= kFrozenTol);

  const ps::PantsMetric cusped{0.3, 0.0, 0.1};
  CHECK(rel_err(ps::loop_arc_length(cusped, 1), kLoop1_03cusp01) <=
        kFrozenTol);
  CHECK(rel_err(ps::loop_arc_length(cusped, 3), kLoop3_03cusp01) <=
        kFrozenTol);
  CHECK(rel_err(ps::loop_arc_length({0.3, 0.0, 0.0}, 1), kLoop1_03cuspcusp) <=
        kFrozenTol);
}

TEST_CASE("loop arcs based on a cusp are rejected") {
  const ps::PantsMetric p{0.3, 0.0, 0.1};
  CHECK_THROWS_AS((void)ps::loop_arc_length(p, 2), std::domain_error);
  CHECK_THROWS_AS((void)ps::loop_split(p, 2), std::domain_error);
  CHECK_THROWS_AS((void)ps::loop_arc_length(p, 4), std::out_of_range);
}

TEST_CASE("symmetric loops match the closed form") {
  // When the two far boundaries agree the split is exactly h/2 and
  //   L = 2 asinh(cosh(m/2) / sinh(l1/4)).
  test_util::TestRng rng(0x70AC5u);
  for (int trial = 0; trial < 2000; ++trial) {
    const double l1 = rng.log_uniform(1e-4, 6.0);
    const double m = rng.log_uniform(1e-4, 6.0);
    const ps::PantsMetric p{l1, m, m};
    const double closed =
        2.0 * ps::asinh_stable(std::cosh(m / 2.0) / std::sinh(l1 / 4.0));
    CAPTURE(l1);
    CAPTURE(m);
    CHECK(rel_err(ps::loop_arc_length(p, 1), closed) <= 1e-12);
  }
}

TEST_CASE("loop lengths satisfy both pentagon identities") {
  test_util::TestRng rng(0xBEEFu);
  for (int trial = 0; trial < 200; ++trial) {
    const ps::PantsMetric p{rng.log_uniform(1e-3, 6.0),
                            rng.log_uniform(1e-3, 6.0),
                            rng.log_uniform(1e-3, 6.0)};
    for (int i = 1; i <= 3; ++i) {
      const double length = ps::loop_arc_length(p, i);
      const double t = ps::loop_split(p, i);
      const int j = (i == 1) ? 2 : 1;
      const int k = (i == 3) ? 2 : 3;
      const double h = p.boundary(i) / 2.0;
      const double sinh_half = std::sinh(length / 2.0);
      CAPTURE(p.l1);
      CAPTURE(p.l2);
      CAPTURE(p.l3);
      CAPTURE(i);
      CHECK(rel_err(sinh_half * std::sinh(t),
                    std::cosh(p.boundary(j) / 2.0)) <= 1e-9);
      CHECK(rel_err(sinh_half * std::sinh(h - t),
                    std::cosh(p.boundary(k) / 2.0)) <= 1e-9);
    }
  }
}

TEST_CASE("arc_length dispatches to the seam and loop formulas") {
  const ps::PantsMetric p{0.2, 0.3, 0.4};
  CHECK(ps::arc_length(p, ps::ArcClass::seam(1, 2)) ==
        ps::seam_length(p, 1, 2));
  CHECK(ps::arc_length(p, ps::ArcClass::seam(2, 3)) ==
        ps::seam_length(p, 2, 3));
  CHECK(ps::arc_length(p, ps::ArcClass::loop(2)) ==
        ps::loop_arc_length(p, 2));
}

TEST_CASE("spectrum enumerates classes in canonical order") {
  const auto full = ps::spectrum({0.3, 0.4, 0.5});
  REQUIRE(full.size() == 9);
  const char* kinds[9] = {"curve", "curve", "curve", "seam", "seam",
                          "seam",  "loop",  "loop",  "loop"};
  const int index_a[9] = {1, 2, 3, 1, 1, 2, 1, 2, 3};
  const int index_b[9] = {0, 0, 0, 2, 3, 3, 0, 0, 0};
  for (std::size_t r = 0; r < 9; ++r) {
    CAPTURE(r);
    CHECK(full[r].class_kind == kinds[r]);
    CHECK(full[r].index_a == index_a[r]);
    CHECK(full[r].index_b == index_b[r]);
  }
  const ps::PantsMetric p{0.3, 0.4, 0.5};
  CHECK(full[0].length == 0.3);
  CHECK(full[3].length == ps::seam_length(p, 1, 2));
  CHECK(full[8].length == ps::loop_arc_length(p, 3));
}

TEST_CASE("spectrum omits classes destroyed by cusps") {
  const auto cusped = ps::spectrum({0.3, 0.0, 0.1});
  REQUIRE(cusped.size() == 5);
  CHECK(cusped[0].class_kind == "curve");
  CHECK(cusped[0].index_a == 1);
  CHECK(cusped[1].class_kind == "curve");
  CHECK(cusped[1].index_a == 3);
  CHECK(cusped[2].class_kind == "seam");
  CHECK(cusped[2].index_a == 1);
  CHECK(cusped[2].index_b == 3);
  CHECK(cusped[3].class_kind == "loop");
  CHECK(cusped[3].index_a == 1);
  CHECK(cusped[4].class_kind == "loop");
  CHECK(cusped[4].index_a == 3);

  CHECK(ps::spectrum({0.0, 0.0, 0.0}).empty());
  CHECK(ps::spectrum({0.0, 0.0, 0.3}).size() == 2);  // curve 3 and loop 3
}
