#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "pants_spectra/collar.hpp"
#include "pants_spectra/decompose.hpp"
#include "pants_spectra/ledger.hpp"
#include "pants_spectra/pants.hpp"
#include "test_util.hpp"

namespace ps = pants_spectra;
using test_util::rel_err;

namespace {

/// Frozen values from the 50-digit offline computation, rounded to double.
constexpr double kOffset01 = 2.8662246804459136441;   // segment at l = 0.1
constexpr double kOffset03 = 1.7405359184191129815;   // segment at l = 0.3
constexpr double kMiddle_010103_s12 = 1.6513388899947794228;
constexpr double kMiddle_050103_s12 = 2.9130237244547623457;
constexpr double kGridCornerMiddle = 1.6388417493184353553;  // (1e-6)^3
constexpr double kSegLower02 = 1.4831642183352019148;
constexpr double kSegUpper02 = 2.9663284366704038297;

constexpr double kFrozenTol = 1e-12;

}  // namespace

TEST_CASE("case tags render as single letters") {
  CHECK(ps::case_tag_name(ps::CaseTag::A) == "A");
  CHECK(ps::case_tag_name(ps::CaseTag::B) == "B");
  CHECK(ps::case_tag_name(ps::CaseTag::C) == "C");
  CHECK(ps::case_tag_name(ps::CaseTag::D) == "D");
}

TEST_CASE("seam decomposition covers all four endpoint cases") {
  const ps::ConstantLedger led = ps::build_ledger(0.3);

  SUBCASE("both endpoints short: case A") {
    const ps::Decomposition d =
        ps::decompose_seam({0.1, 0.1, 0.3}, 1, 2, led);
    CHECK(d.case_tag == ps::CaseTag::A);
    CHECK(d.arc.name() == "seam:1,2");
    CHECK(rel_err(d.d_start, kOffset01) <= kFrozenTol);
    CHECK(d.d_start == d.d_end);
    CHECK(rel_err(d.middle, kMiddle_010103_s12) <= kFrozenTol);
    CHECK(rel_err(d.total, 7.3837882508866067110) <= kFrozenTol);
  }

  SUBCASE("only the end short: case B") {
    const ps::Decomposition d =
        ps::decompose_seam({0.5, 0.1, 0.3}, 1, 2, led);
    CHECK(d.case_tag == ps::CaseTag::B);
    CHECK(d.d_start == 0.0);
    CHECK(rel_err(d.d_end, kOffset01) <= kFrozenTol);
    CHECK(rel_err(d.middle, kMiddle_050103_s12) <= kFrozenTol);
  }

  SUBCASE("only the start short: case C") {
    const ps::Decomposition d =
        ps::decompose_seam({0.1, 0.5, 0.3}, 1, 2, led);
    CHECK(d.case_tag == ps::CaseTag::C);
    CHECK(rel_err(d.d_start, kOffset01) <= kFrozenTol);
    CHECK(d.d_end == 0.0);
    // Total and middle agree with case B by endpoint symmetry of the seam.
    CHECK(rel_err(d.middle, kMiddle_050103_s12) <= kFrozenTol);
  }

  SUBCASE("neither endpoint short: case D") {
    const ps::Decomposition d =
        ps::decompose_seam({0.5, 0.6, 0.3}, 1, 2, led);
    CHECK(d.case_tag == ps::CaseTag::D);
    CHECK(d.d_start == 0.0);
    CHECK(d.d_end == 0.0);
    CHECK(d.middle == d.total);
  }
}

TEST_CASE("loop decomposition has equal segments and two cases") {
  const ps::ConstantLedger led = ps::build_ledger(0.3);

  const ps::Decomposition a = ps::decompose_loop({0.3, 0.3, 0.3}, 1, led);
  CHECK(a.case_tag == ps::CaseTag::A);
  CHECK(a.arc.name() == "loop:1");
  CHECK(rel_err(a.d_start, kOffset03) <= kFrozenTol);
  CHECK(a.d_start == a.d_end);
  CHECK(rel_err(a.total, 6.5901198112259221542) <= kFrozenTol);

  // A long base boundary carries no segments even when the others are short.
  const ps::Decomposition b = ps::decompose_loop({0.5, 0.3, 0.3}, 1, led);
  CHECK(b.case_tag == ps::CaseTag::B);
  CHECK(b.d_start == 0.0);
  CHECK(b.d_end == 0.0);
  CHECK(b.middle == b.total);
}

TEST_CASE("decomposition is independent of the ledger's eps0") {
  // Collar segments depend only on the absolute constants, which every
  // ledger carries identically.
  const ps::ConstantLedger l03 = ps::build_ledger(0.3);
  const ps::ConstantLedger l60 = ps::build_ledger(6.0);
  const ps::PantsMetric p{0.1, 0.5, 0.2};
  for (int i = 1; i <= 2; ++i) {
    const ps::Decomposition a = ps::decompose_seam(p, i, 3, l03);
    const ps::Decomposition b = ps::decompose_seam(p, i, 3, l60);
    CHECK(a.d_start == b.d_start);
    CHECK(a.d_end == b.d_end);
    CHECK(a.middle == b.middle);
    CHECK(a.case_tag == b.case_tag);
  }
}

TEST_CASE("decomposition splits sum back to the total") {
  const ps::ConstantLedger led = ps::build_ledger(0.3);
  test_util::TestRng rng(0xDEC0u);
  for (int trial = 0; trial < 500; ++trial) {
    const ps::PantsMetric p{rng.log_uniform(1e-4, 6.0),
                            rng.log_uniform(1e-4, 6.0),
                            rng.log_uniform(1e-4, 6.0)};
    for (const ps::Decomposition& d : ps::decompose_all(p, led)) {
      CAPTURE(p.l1);
      CAPTURE(p.l2);
      CAPTURE(p.l3);
      CAPTURE(d.arc.name());
      CHECK(std::fabs(d.total - (d.d_start + d.middle + d.d_end)) <= 1e-12);
      CHECK(d.d_start >= 0.0);
      CHECK(d.d_end >= 0.0);
      const bool start_pos = d.d_start > 0.0;
      const bool end_pos = d.d_end > 0.0;
      if (start_pos && end_pos) CHECK(d.case_tag == ps::CaseTag::A);
      if (!start_pos && end_pos) CHECK(d.case_tag == ps::CaseTag::B);
      if (start_pos && !end_pos) CHECK(d.case_tag == ps::CaseTag::C);
      if (!start_pos && !end_pos) {
        CHECK((d.case_tag == ps::CaseTag::D ||
               d.case_tag == ps::CaseTag::B));  // loops use B for "none"
        CHECK(d.middle == d.total);
      }
      if (d.arc.kind == ps::ArcClass::Kind::Loop) {
        CHECK(d.d_start == d.d_end);
      }
    }
  }
}

TEST_CASE("decompose_arc dispatches on the class kind") {
  const ps::ConstantLedger led = ps::build_ledger(0.3);
  const ps::PantsMetric p{0.2, 0.3, 0.4};
  const ps::Decomposition s =
      ps::decompose_arc(p, ps::ArcClass::seam(2, 1), led);
  CHECK(s.total == ps::seam_length(p, 1, 2));
  const ps::Decomposition l =
      ps::decompose_arc(p, ps::ArcClass::loop(3), led);
  CHECK(l.total == ps::loop_arc_length(p, 3));
}

TEST_CASE("cusp endpoints are rejected, cusp classes are omitted") {
  const ps::ConstantLedger led = ps::build_ledger(0.3);
  const ps::PantsMetric p{0.3, 0.0, 0.1};
  CHECK_THROWS_AS((void)ps::decompose_seam(p, 1, 2, led), std::domain_error);
  CHECK_THROWS_AS((void)ps::decompose_loop(p, 2, led), std::domain_error);

  const auto rows = ps::decompose_all(p, led);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].arc.name() == "seam:1,3");
  CHECK(rows[1].arc.name() == "loop:1");
  CHECK(rows[2].arc.name() == "loop:3");

  CHECK(ps::decompose_all({0.0, 0.0, 0.0}, led).empty());
}

TEST_CASE("decompose_all enumerates six arcs in canonical order") {
  const ps::ConstantLedger led = ps::build_ledger(0.3);
  const auto rows = ps::decompose_all({0.2, 0.3, 0.4}, led);
  REQUIRE(rows.size() == 6);
  const char* names[6] = {"seam:1,2", "seam:1,3", "seam:2,3",
                          "loop:1",   "loop:2",   "loop:3"};
  for (std::size_t r = 0; r < 6; ++r) {
    CHECK(rows[r].arc.name() == names[r]);
  }
}

TEST_CASE("minimum middle agrees with the decomposition rows") {
  const ps::ConstantLedger led = ps::build_ledger(0.3);
  test_util::TestRng rng(0x313Fu);
  for (int trial = 0; trial < 200; ++trial) {
    const ps::PantsMetric p{rng.log_uniform(1e-5, 2.0),
                            rng.log_uniform(1e-5, 2.0),
                            rng.log_uniform(1e-5, 2.0)};
    double from_rows = std::numeric_limits<double>::infinity();
    for (const ps::Decomposition& d : ps::decompose_all(p, led)) {
      from_rows = std::min(from_rows, d.middle);
    }
    CHECK(ps::min_middle_all_arcs(p) == from_rows);
  }
}

TEST_CASE("minimum middle at the scan corner matches the frozen value") {
  CHECK(rel_err(ps::min_middle_all_arcs({1e-6, 1e-6, 1e-6}),
                kGridCornerMiddle) <= 1e-10);
  CHECK_THROWS_AS((void)ps::min_middle_all_arcs({0.0, 0.0, 0.0}),
                  std::domain_error);
}

TEST_CASE("collar segment bracket matches frozen values") {
  const ps::CollarSegmentBounds b = ps::collar_segment_bounds(0.2);
  CHECK(rel_err(b.lower, kSegLower02) <= kFrozenTol);
  CHECK(rel_err(b.upper, kSegUpper02) <= kFrozenTol);
  CHECK(b.upper == 2.0 * b.lower);

  CHECK_THROWS_AS((void)ps::collar_segment_bounds(0.4), std::domain_error);
  CHECK_THROWS_AS((void)ps::collar_segment_bounds(ps::eps_star()),
                  std::domain_error);
  CHECK_THROWS_AS((void)ps::collar_segment_bounds(0.0), std::domain_error);
  CHECK_THROWS_AS((void)ps::collar_segment_bounds(-0.1), std::domain_error);
}

TEST_CASE("collar segment bracket contains the exact segment") {
  test_util::TestRng rng(0x5E67u);
  for (int trial = 0; trial < 5000; ++trial) {
    const double l =
        rng.log_uniform(1e-6, ps::eps_star() * (1.0 - 1e-12));
    const double d = ps::offset_for_target(l, ps::eps0_prime());
    const ps::CollarSegmentBounds b = ps::collar_segment_bounds(l);
    CAPTURE(l);
    CHECK(b.lower <= d);
    CHECK(d <= b.upper);
  }
}
