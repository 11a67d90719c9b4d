#include "pants_spectra/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace pants_spectra {
namespace {

using nlohmann::json;

/// Append one CSV line from already-formatted cells.
void csv_line(std::string* out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out->push_back(',');
    out->append(cells[i]);
  }
  out->push_back('\n');
}

[[nodiscard]] std::string bool01(bool b) { return b ? "1" : "0"; }

[[nodiscard]] CaseTag case_tag_from_name(const std::string& name) {
  if (name == "A") return CaseTag::A;
  if (name == "B") return CaseTag::B;
  if (name == "C") return CaseTag::C;
  if (name == "D") return CaseTag::D;
  throw std::invalid_argument("unknown case tag \"" + name + "\"");
}

}  // namespace

std::string g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// JSON hooks.
// ---------------------------------------------------------------------------

void to_json(json& j, const PantsMetric& p) { j = json{p.l1, p.l2, p.l3}; }

void from_json(const json& j, PantsMetric& p) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument(
        "a pants metric must be a JSON array of three lengths");
  }
  p.l1 = j.at(0).get<double>();
  p.l2 = j.at(1).get<double>();
  p.l3 = j.at(2).get<double>();
}

void to_json(json& j, const ArcClass& a) { j = a.name(); }

void from_json(const json& j, ArcClass& a) {
  a = ArcClass::parse(j.get<std::string>());
}

void to_json(json& j, const SpectrumEntry& e) {
  j = json{{"class_kind", e.class_kind},
           {"index_a", e.index_a},
           {"index_b", e.index_b},
           {"length", e.length}};
}

void from_json(const json& j, SpectrumEntry& e) {
  j.at("class_kind").get_to(e.class_kind);
  j.at("index_a").get_to(e.index_a);
  j.at("index_b").get_to(e.index_b);
  j.at("length").get_to(e.length);
}

void to_json(json& j, const Decomposition& d) {
  j = json{{"arc", d.arc},
           {"total", d.total},
           {"d_start", d.d_start},
           {"d_end", d.d_end},
           {"middle", d.middle},
           {"case_tag", case_tag_name(d.case_tag)}};
}

void from_json(const json& j, Decomposition& d) {
  j.at("arc").get_to(d.arc);
  j.at("total").get_to(d.total);
  j.at("d_start").get_to(d.d_start);
  j.at("d_end").get_to(d.d_end);
  j.at("middle").get_to(d.middle);
  d.case_tag = case_tag_from_name(j.at("case_tag").get<std::string>());
}

void to_json(json& j, const CollarSegmentBounds& b) {
  j = json{{"lower", b.lower}, {"upper", b.upper}};
}

void from_json(const json& j, CollarSegmentBounds& b) {
  j.at("lower").get_to(b.lower);
  j.at("upper").get_to(b.upper);
}

// X-macro over the ledger fields keeps the JSON keys identical to the field
// names with a single listing.
#define PANTS_SPECTRA_LEDGER_FIELDS(X)                                        \
  X(eps0)                                                                     \
  X(eps0_prime)                                                               \
  X(eps_star)                                                                 \
  X(c0_prime)                                                                 \
  X(M0_paper)                                                                 \
  X(M0_empirical)                                                             \
  X(k1)                                                                       \
  X(M1)                                                                       \
  X(D1)                                                                       \
  X(M)                                                                        \
  X(Mprime)                                                                   \
  X(M0prime)                                                                  \
  X(D2)                                                                       \
  X(D2prime)                                                                  \
  X(K1prime)                                                                  \
  X(K1)                                                                       \
  X(K2prime)                                                                  \
  X(K2)                                                                       \
  X(K3prime)                                                                  \
  X(K3dprime)                                                                 \
  X(K3tprime)                                                                 \
  X(K3)                                                                       \
  X(K4prime)                                                                  \
  X(K4dprime)                                                                 \
  X(K4)                                                                       \
  X(K)                                                                        \
  X(C)

void to_json(json& j, const ConstantLedger& ledger) {
  j = json::object();
#define PANTS_SPECTRA_PUT(field) j[#field] = ledger.field;
  PANTS_SPECTRA_LEDGER_FIELDS(PANTS_SPECTRA_PUT)
#undef PANTS_SPECTRA_PUT
}

void from_json(const json& j, ConstantLedger& ledger) {
#define PANTS_SPECTRA_GET(field) j.at(#field).get_to(ledger.field);
  PANTS_SPECTRA_LEDGER_FIELDS(PANTS_SPECTRA_GET)
#undef PANTS_SPECTRA_GET
}

void to_json(json& j, const ClassRatio& r) {
  j = json{{"class", r.class_name},
           {"l1", r.l1},
           {"l2", r.l2},
           {"ratio_max", r.ratio_max}};
}

void from_json(const json& j, ClassRatio& r) {
  j.at("class").get_to(r.class_name);
  j.at("l1").get_to(r.l1);
  j.at("l2").get_to(r.l2);
  j.at("ratio_max").get_to(r.ratio_max);
}

void to_json(json& j, const CheckRecord& r) {
  j = json{{"name", r.name},
           {"bound_used", r.bound_used},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"pass", r.pass}};
}

void from_json(const json& j, CheckRecord& r) {
  j.at("name").get_to(r.name);
  j.at("bound_used").get_to(r.bound_used);
  j.at("lhs").get_to(r.lhs);
  j.at("rhs").get_to(r.rhs);
  j.at("pass").get_to(r.pass);
}

void to_json(json& j, const RatioReport& r) {
  j = json{{"per_class", r.per_class},
           {"sup_curves", r.sup_curves},
           {"sup_arcs", r.sup_arcs},
           {"sup_all", r.sup_all},
           {"checks", r.checks}};
}

void from_json(const json& j, RatioReport& r) {
  j.at("per_class").get_to(r.per_class);
  j.at("sup_curves").get_to(r.sup_curves);
  j.at("sup_arcs").get_to(r.sup_arcs);
  j.at("sup_all").get_to(r.sup_all);
  j.at("checks").get_to(r.checks);
}

void to_json(json& j, const SweepConfig& c) {
  j = json{{"eps0", c.eps0},
           {"n_pairs", c.n_pairs},
           {"seed", c.seed},
           {"n_cusps", c.n_cusps}};
  if (c.thick_eps) j["thick_eps"] = *c.thick_eps;
}

void from_json(const json& j, SweepConfig& c) {
  j.at("eps0").get_to(c.eps0);
  j.at("n_pairs").get_to(c.n_pairs);
  j.at("seed").get_to(c.seed);
  j.at("n_cusps").get_to(c.n_cusps);
  c.thick_eps.reset();
  if (j.contains("thick_eps")) c.thick_eps = j.at("thick_eps").get<double>();
}

void to_json(json& j, const SweepRow& r) {
  j = json{{"pair_id", r.pair_id},
           {"a", r.a},
           {"b", r.b},
           {"sup_curves", r.sup_curves},
           {"sup_arcs", r.sup_arcs},
           {"empirical_k", r.empirical_k},
           {"theorem_key_pass", r.theorem_key_pass},
           {"theorem_main_pass", r.theorem_main_pass},
           {"all_checks_pass", r.all_checks_pass},
           {"error", r.error}};
  if (r.error) j["error_message"] = r.error_message;
}

void from_json(const json& j, SweepRow& r) {
  j.at("pair_id").get_to(r.pair_id);
  j.at("a").get_to(r.a);
  j.at("b").get_to(r.b);
  j.at("sup_curves").get_to(r.sup_curves);
  j.at("sup_arcs").get_to(r.sup_arcs);
  j.at("empirical_k").get_to(r.empirical_k);
  j.at("theorem_key_pass").get_to(r.theorem_key_pass);
  j.at("theorem_main_pass").get_to(r.theorem_main_pass);
  j.at("all_checks_pass").get_to(r.all_checks_pass);
  j.at("error").get_to(r.error);
  r.error_message.clear();
  if (j.contains("error_message")) {
    j.at("error_message").get_to(r.error_message);
  }
}

void to_json(json& j, const CheckTally& t) {
  j = json{{"applied", t.applied}, {"failed", t.failed}};
}

void from_json(const json& j, CheckTally& t) {
  j.at("applied").get_to(t.applied);
  j.at("failed").get_to(t.failed);
}

void to_json(json& j, const SweepSummary& s) {
  j = json{{"eps0", s.eps0},
           {"n_pairs", s.n_pairs},
           {"seed", s.seed},
           {"n_cusps", s.n_cusps},
           {"empirical_min_K", s.empirical_min_K},
           {"empirical_min_C", s.empirical_min_C},
           {"worst_a", s.worst_a},
           {"worst_b", s.worst_b},
           {"pairs_all_checks_passed", s.pairs_all_checks_passed},
           {"pairs_with_failures", s.pairs_with_failures},
           {"errors", s.errors},
           {"tallies", s.tallies}};
  if (s.thick_eps) j["thick_eps"] = *s.thick_eps;
  if (s.empirical_K0) j["empirical_K0"] = *s.empirical_K0;
}

void from_json(const json& j, SweepSummary& s) {
  j.at("eps0").get_to(s.eps0);
  j.at("n_pairs").get_to(s.n_pairs);
  j.at("seed").get_to(s.seed);
  j.at("n_cusps").get_to(s.n_cusps);
  j.at("empirical_min_K").get_to(s.empirical_min_K);
  j.at("empirical_min_C").get_to(s.empirical_min_C);
  j.at("worst_a").get_to(s.worst_a);
  j.at("worst_b").get_to(s.worst_b);
  j.at("pairs_all_checks_passed").get_to(s.pairs_all_checks_passed);
  j.at("pairs_with_failures").get_to(s.pairs_with_failures);
  j.at("errors").get_to(s.errors);
  j.at("tallies").get_to(s.tallies);
  s.thick_eps.reset();
  if (j.contains("thick_eps")) s.thick_eps = j.at("thick_eps").get<double>();
  s.empirical_K0.reset();
  if (j.contains("empirical_K0")) {
    s.empirical_K0 = j.at("empirical_K0").get<double>();
  }
}

void to_json(json& j, const SweepResult& r) {
  j = json{{"summary", r.summary}, {"rows", r.rows}};
}

void from_json(const json& j, SweepResult& r) {
  j.at("summary").get_to(r.summary);
  j.at("rows").get_to(r.rows);
}

void to_json(json& j, const DivergenceRow& r) {
  j = json{{"n", r.n},
           {"l", r.l},
           {"curve_sup", r.curve_sup},
           {"arc_sup", r.arc_sup},
           {"seam_length", r.seam_length},
           {"loop_length", r.loop_length}};
}

void from_json(const json& j, DivergenceRow& r) {
  j.at("n").get_to(r.n);
  j.at("l").get_to(r.l);
  j.at("curve_sup").get_to(r.curve_sup);
  j.at("arc_sup").get_to(r.arc_sup);
  j.at("seam_length").get_to(r.seam_length);
  j.at("loop_length").get_to(r.loop_length);
}

void to_json(json& j, const GrowthRateReport& r) {
  j = json{{"insufficient_data", r.insufficient_data},
           {"pass", r.pass},
           {"target", r.target},
           {"tolerance", r.tolerance},
           {"max_abs_deviation", r.max_abs_deviation},
           {"increments_tested", r.increments_tested}};
}

void from_json(const json& j, GrowthRateReport& r) {
  j.at("insufficient_data").get_to(r.insufficient_data);
  j.at("pass").get_to(r.pass);
  j.at("target").get_to(r.target);
  j.at("tolerance").get_to(r.tolerance);
  j.at("max_abs_deviation").get_to(r.max_abs_deviation);
  j.at("increments_tested").get_to(r.increments_tested);
}

void to_json(json& j, const CoexistenceReport& r) {
  j = json{{"pass", r.pass},
           {"pairs_checked", r.pairs_checked},
           {"worst_lhs_over_rhs", r.worst_lhs_over_rhs}};
}

void from_json(const json& j, CoexistenceReport& r) {
  j.at("pass").get_to(r.pass);
  j.at("pairs_checked").get_to(r.pairs_checked);
  j.at("worst_lhs_over_rhs").get_to(r.worst_lhs_over_rhs);
}

// ---------------------------------------------------------------------------
// CSV rendering.
// ---------------------------------------------------------------------------

std::string spectrum_csv(const std::vector<SpectrumEntry>& rows) {
  std::string out = "class_kind,index_a,index_b,length\n";
  for (const SpectrumEntry& e : rows) {
    csv_line(&out, {e.class_kind, std::to_string(e.index_a),
                    std::to_string(e.index_b), g17(e.length)});
  }
  return out;
}

std::string decompositions_csv(const std::vector<Decomposition>& rows) {
  std::string out = "arc,total,d_start,d_end,middle,case_tag\n";
  for (const Decomposition& d : rows) {
    // The arc name contains a comma ("seam:1,2"), so quote that cell.
    csv_line(&out, {"\"" + d.arc.name() + "\"", g17(d.total), g17(d.d_start),
                    g17(d.d_end), g17(d.middle), case_tag_name(d.case_tag)});
  }
  return out;
}

std::string ledger_csv(const ConstantLedger& ledger) {
  std::string out = "name,value\n";
#define PANTS_SPECTRA_ROW(field) csv_line(&out, {#field, g17(ledger.field)});
  PANTS_SPECTRA_LEDGER_FIELDS(PANTS_SPECTRA_ROW)
#undef PANTS_SPECTRA_ROW
  return out;
}

std::string checks_csv(const std::vector<CheckRecord>& rows) {
  std::string out = "name,bound_used,lhs,rhs,pass\n";
  for (const CheckRecord& r : rows) {
    csv_line(&out, {"\"" + r.name + "\"", g17(r.bound_used), g17(r.lhs),
                    g17(r.rhs), bool01(r.pass)});
  }
  return out;
}

std::string sweep_rows_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "pair_id, l1a,l2a,l3a, l1b,l2b,l3b, sup_curves, sup_arcs, "
      "theorem_key_pass, theorem_main_pass, empirical_K\n";
  for (const SweepRow& r : rows) {
    csv_line(&out,
             {std::to_string(r.pair_id), g17(r.a.l1), g17(r.a.l2),
              g17(r.a.l3), g17(r.b.l1), g17(r.b.l2), g17(r.b.l3),
              g17(r.sup_curves), g17(r.sup_arcs), bool01(r.theorem_key_pass),
              bool01(r.theorem_main_pass), g17(r.empirical_k)});
  }
  return out;
}

std::string divergence_csv(const std::vector<DivergenceRow>& rows) {
  std::string out = "n, l, curve_sup, arc_sup, seam_length, loop_length\n";
  for (const DivergenceRow& r : rows) {
    csv_line(&out, {std::to_string(r.n), g17(r.l), g17(r.curve_sup),
                    g17(r.arc_sup), g17(r.seam_length), g17(r.loop_length)});
  }
  return out;
}

}  // namespace pants_spectra
