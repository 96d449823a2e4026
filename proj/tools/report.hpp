#pragma once
// JSON / CSV / text rendering of library results, plus the inverse parsers used by the
// round-trip tests.

#include "toricsing/chain.hpp"
#include "toricsing/enumerators.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace toricsing::report {

using Json = nlohmann::ordered_json;

Json int_json(const Int& x);
Int json_int(const Json& j);
Json ints_json(const std::vector<Int>& v);
std::vector<Int> json_ints(const Json& j);

Json to_json(const CyclicQuotientType& t);
CyclicQuotientType type_from_json(const Json& j);

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

// {"base": {"kind", "r", "q"}, "weights": [...]}
Json to_json(const BaseSingularity& b);
BaseSingularity base_from_json(const Json& j);
Json to_json(const WeightedBlowup& b);
WeightedBlowup blowup_from_json(const Json& j);

struct BlowupReport {
  ChartReport charts;
  Rat a_S_0;
  bool operator==(const BlowupReport& o) const {
    return charts.charts == o.charts.charts && charts.verdicts == o.charts.verdicts &&
           charts.cs_points == o.charts.cs_points && a_S_0 == o.a_S_0;
  }
};
Json to_json(const BlowupReport& r);
BlowupReport blowup_report_from_json(const Json& j);

Json to_json(const TripleRecord& t);
TripleRecord triple_from_json(const Json& j);

Json cone_json(const std::array<Vec3, 3>& gens);
std::array<Vec3, 3> cone_from_json(const Json& j);

Json to_json(const EnumerationReport& r);
EnumerationReport enumeration_from_json(const Json& j);

// Transcript entry: {step, triple, boundary, gamma, betas}.
struct TranscriptEntry {
  long step = 0;
  std::optional<std::array<Int, 3>> triple, boundary, betas;
  Rat gamma_sq, k_gamma;
  bool operator==(const TranscriptEntry& o) const = default;
};
TranscriptEntry transcript_entry(const ChainState& s);
Json to_json(const std::vector<TranscriptEntry>& t);
std::vector<TranscriptEntry> transcript_from_json(const Json& j);

// A flat table: header plus rows of cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table enumeration_table(const EnumerationReport& r);
Table chart_table(const BlowupReport& r);
Table transcript_table(const std::vector<TranscriptEntry>& t);

std::string render_csv(const Table& t);
std::string render_text(const Table& t);

std::string join_ints(const std::vector<Int>& v, const std::string& sep = ",");

}  // namespace toricsing::report
