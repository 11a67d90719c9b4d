#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pants_spectra/decompose.hpp"
#include "pants_spectra/halving_family.hpp"
#include "pants_spectra/ledger.hpp"
#include "pants_spectra/pants.hpp"
#include "pants_spectra/verify.hpp"

namespace pants_spectra {

/// Format a double with 17 significant digits — enough to round-trip
/// binary64 exactly.  Used by every text (non-JSON) output path.
[[nodiscard]] std::string g17(double x);

// ---------------------------------------------------------------------------
// JSON serialization (nlohmann ADL hooks).  Every type a command can print
// also parses back with equal values, so outputs round-trip.
// ---------------------------------------------------------------------------

void to_json(nlohmann::json& j, const PantsMetric& p);
void from_json(const nlohmann::json& j, PantsMetric& p);

void to_json(nlohmann::json& j, const ArcClass& a);
void from_json(const nlohmann::json& j, ArcClass& a);

void to_json(nlohmann::json& j, const SpectrumEntry& e);
void from_json(const nlohmann::json& j, SpectrumEntry& e);

void to_json(nlohmann::json& j, const Decomposition& d);
void from_json(const nlohmann::json& j, Decomposition& d);

void to_json(nlohmann::json& j, const CollarSegmentBounds& b);
void from_json(const nlohmann::json& j, CollarSegmentBounds& b);

void to_json(nlohmann::json& j, const ConstantLedger& ledger);
void from_json(const nlohmann::json& j, ConstantLedger& ledger);

void to_json(nlohmann::json& j, const ClassRatio& r);
void from_json(const nlohmann::json& j, ClassRatio& r);

void to_json(nlohmann::json& j, const CheckRecord& r);
void from_json(const nlohmann::json& j, CheckRecord& r);

void to_json(nlohmann::json& j, const RatioReport& r);
void from_json(const nlohmann::json& j, RatioReport& r);

void to_json(nlohmann::json& j, const SweepConfig& c);
void from_json(const nlohmann::json& j, SweepConfig& c);

void to_json(nlohmann::json& j, const SweepRow& r);
void from_json(const nlohmann::json& j, SweepRow& r);

void to_json(nlohmann::json& j, const CheckTally& t);
void from_json(const nlohmann::json& j, CheckTally& t);

void to_json(nlohmann::json& j, const SweepSummary& s);
void from_json(const nlohmann::json& j, SweepSummary& s);

void to_json(nlohmann::json& j, const SweepResult& r);
void from_json(const nlohmann::json& j, SweepResult& r);

void to_json(nlohmann::json& j, const DivergenceRow& r);
void from_json(const nlohmann::json& j, DivergenceRow& r);

void to_json(nlohmann::json& j, const GrowthRateReport& r);
void from_json(const nlohmann::json& j, GrowthRateReport& r);

void to_json(nlohmann::json& j, const CoexistenceReport& r);
void from_json(const nlohmann::json& j, CoexistenceReport& r);

// ---------------------------------------------------------------------------
// CSV rendering.  Column schemas are frozen (documented in the README);
// numbers use g17, booleans print as 1/0.
// ---------------------------------------------------------------------------

/// Header "class_kind,index_a,index_b,length".
[[nodiscard]] std::string spectrum_csv(const std::vector<SpectrumEntry>& rows);

/// Header "arc,total,d_start,d_end,middle,case_tag".
[[nodiscard]] std::string decompositions_csv(
    const std::vector<Decomposition>& rows);

/// Header "name,value"; one row per ledger constant, in ledger order.
[[nodiscard]] std::string ledger_csv(const ConstantLedger& ledger);

/// Header "name,bound_used,lhs,rhs,pass"; check names are quoted (they
/// contain commas in arc subjects).
[[nodiscard]] std::string checks_csv(const std::vector<CheckRecord>& rows);

/// Header "pair_id, l1a,l2a,l3a, l1b,l2b,l3b, sup_curves, sup_arcs,
/// theorem_key_pass, theorem_main_pass, empirical_K".
[[nodiscard]] std::string sweep_rows_csv(const std::vector<SweepRow>& rows);

/// Header "n, l, curve_sup, arc_sup, seam_length, loop_length".
[[nodiscard]] std::string divergence_csv(const std::vector<DivergenceRow>& rows);

}  // namespace pants_spectra
