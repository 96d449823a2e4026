#include "report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toricsing::report {

Json int_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());  // beyond 64 bits: decimal string
}

Int json_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw std::invalid_argument("expected an integer in JSON");
}

Json ints_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

std::vector<Int> json_ints(const Json& j) {
  std::vector<Int> v;
  for (const auto& x : j) v.push_back(json_int(x));
  return v;
}

static Json arr3(const std::optional<std::array<Int, 3>>& a) {
  if (!a) return nullptr;
  return ints_json({(*a)[0], (*a)[1], (*a)[2]});
}

static std::optional<std::array<Int, 3>> arr3_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  auto v = json_ints(j);
  if (v.size() != 3) throw std::invalid_argument("expected three integers");
  return std::array<Int, 3>{v[0], v[1], v[2]};
}

Json to_json(const CyclicQuotientType& t) {
  return Json{{"r", int_json(t.r)}, {"weights", ints_json({t.a[0], t.a[1], t.a[2]})}};
}

CyclicQuotientType type_from_json(const Json& j) {
  auto w = json_ints(j.at("weights"));
  if (w.size() != 3) throw std::invalid_argument("type needs three weights");
  return CyclicQuotientType(json_int(j.at("r")), w[0], w[1], w[2]);
}

Json to_json(const Verdict& v) {
  Json j{{"kind", to_string(v.kind)}, {"witness_k", nullptr}};
  if (v.witness_k) j["witness_k"] = *v.witness_k;
  return j;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.kind = verdict_kind_from_string(j.at("kind").get<std::string>());
  if (!j.at("witness_k").is_null()) v.witness_k = j.at("witness_k").get<long>();
  return v;
}

Json to_json(const BaseSingularity& b) {
  switch (b.kind) {
    case BaseSingularity::Kind::smooth:
      return Json{{"kind", "smooth"}};
    case BaseSingularity::Kind::odp:
      return Json{{"kind", "odp"}};
    default:
      return Json{{"kind", "cyclic"}, {"r", int_json(b.r)}, {"q", int_json(b.q)}};
  }
}

BaseSingularity base_from_json(const Json& j) {
  auto k = j.at("kind").get<std::string>();
  if (k == "smooth") return BaseSingularity::smooth();
  if (k == "odp") return BaseSingularity::odp();
  if (k == "cyclic") return BaseSingularity::cyclic(json_int(j.at("r")), json_int(j.at("q")));
  throw std::invalid_argument("unknown base kind " + k);
}

Json to_json(const WeightedBlowup& b) { return Json{{"base", to_json(b.base)}, {"weights", ints_json(b.weights)}}; }

WeightedBlowup blowup_from_json(const Json& j) {
  return make_blowup(base_from_json(j.at("base")), json_ints(j.at("weights")));
}

Json to_json(const BlowupReport& r) {
  Json charts = Json::array(), verdicts = Json::array(), cs = Json::array();
  for (const auto& c : r.charts.charts) charts.push_back(to_json(c));
  for (const auto& v : r.charts.verdicts) verdicts.push_back(to_json(v));
  for (const auto& p : r.charts.cs_points) cs.push_back(p);
  return Json{{"charts", charts}, {"verdicts", verdicts}, {"a_S_0", to_string(r.a_S_0)}, {"cs_points", cs}};
}

BlowupReport blowup_report_from_json(const Json& j) {
  BlowupReport r;
  for (const auto& c : j.at("charts")) r.charts.charts.push_back(type_from_json(c));
  for (const auto& v : j.at("verdicts")) r.charts.verdicts.push_back(verdict_from_json(v));
  for (const auto& p : j.at("cs_points")) r.charts.cs_points.push_back(p.get<std::string>());
  r.a_S_0 = parse_rat(j.at("a_S_0").get<std::string>());
  return r;
}

Json to_json(const TripleRecord& t) {
  Json j{{"case", t.case_id}, {"params", ints_json(t.params)}, {"type", to_string(t.type)}};
  if (t.split_degree) j["split_degree"] = int_json(*t.split_degree);
  return j;
}

TripleRecord triple_from_json(const Json& j) {
  TripleRecord t;
  t.case_id = j.at("case").get<std::string>();
  t.params = json_ints(j.at("params"));
  t.type = ade_type_from_string(j.at("type").get<std::string>());
  if (j.contains("split_degree")) t.split_degree = json_int(j.at("split_degree"));
  return t;
}

Json cone_json(const std::array<Vec3, 3>& gens) {
  Json g = Json::array();
  for (const auto& v : gens) g.push_back(ints_json({v[0], v[1], v[2]}));
  return Json{{"generators", g}};
}

std::array<Vec3, 3> cone_from_json(const Json& j) {
  std::array<Vec3, 3> out;
  const auto& g = j.at("generators");
  if (g.size() != 3) throw std::invalid_argument("cone needs three generators");
  for (std::size_t i = 0; i < 3; ++i) {
    auto v = json_ints(g[i]);
    if (v.size() != 3) throw std::invalid_argument("generator needs three coordinates");
    out[i] = {v[0], v[1], v[2]};
  }
  return out;
}

Json to_json(const EnumerationReport& r) {
  Json hits = Json::array();
  for (std::size_t i = 0; i < r.hits.size(); ++i)
    hits.push_back(Json{{r.key_name, ints_json(r.hits[i])}, {"family", r.tags[i]}, {r.value_name, to_string(r.values[i])}});
  Json errs = Json::array();
  for (const auto& e : r.errors) errs.push_back(e);
  return Json{{"bound", r.bound}, {"key", r.key_name}, {"value", r.value_name}, {"hits", hits}, {"errors", errs}};
}

EnumerationReport enumeration_from_json(const Json& j) {
  EnumerationReport r;
  r.bound = j.at("bound").get<long>();
  r.key_name = j.at("key").get<std::string>();
  r.value_name = j.at("value").get<std::string>();
  for (const auto& h : j.at("hits")) {
    r.hits.push_back(json_ints(h.at(r.key_name)));
    r.tags.push_back(h.at("family").get<std::string>());
    r.values.push_back(parse_rat(h.at(r.value_name).get<std::string>()));
  }
  for (const auto& e : j.at("errors")) r.errors.push_back(e.get<std::string>());
  return r;
}

TranscriptEntry transcript_entry(const ChainState& s) {
  return {s.step, s.triple, s.boundary, s.betas, s.gamma_sq, s.k_gamma};
}

Json to_json(const std::vector<TranscriptEntry>& t) {
  Json a = Json::array();
  for (const auto& e : t)
    a.push_back(Json{{"step", e.step},
                     {"triple", arr3(e.triple)},
                     {"boundary", arr3(e.boundary)},
                     {"gamma", Json::array({to_string(e.gamma_sq), to_string(e.k_gamma)})},
                     {"betas", arr3(e.betas)}});
  return a;
}

std::vector<TranscriptEntry> transcript_from_json(const Json& j) {
  std::vector<TranscriptEntry> t;
  for (const auto& e : j) {
    TranscriptEntry x;
    x.step = e.at("step").get<long>();
    x.triple = arr3_from(e.at("triple"));
    x.boundary = arr3_from(e.at("boundary"));
    x.betas = arr3_from(e.at("betas"));
    const auto& g = e.at("gamma");
    if (g.size() != 2) throw std::invalid_argument("gamma needs two entries");
    x.gamma_sq = parse_rat(g[0].get<std::string>());
    x.k_gamma = parse_rat(g[1].get<std::string>());
    t.push_back(x);
  }
  return t;
}

std::string join_ints(const std::vector<Int>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].get_str();
  return s;
}

static std::string opt3(const std::optional<std::array<Int, 3>>& a) {
  return a ? join_ints({(*a)[0], (*a)[1], (*a)[2]}) : "";
}

Table enumeration_table(const EnumerationReport& r) {
  Table t{{r.key_name, "family", r.value_name}, {}};
  for (std::size_t i = 0; i < r.hits.size(); ++i) t.rows.push_back({join_ints(r.hits[i]), r.tags[i], to_string(r.values[i])});
  return t;
}

Table chart_table(const BlowupReport& r) {
  Table t{{"chart", "type", "verdict", "witness_k"}, {}};
  for (std::size_t i = 0; i < r.charts.charts.size(); ++i) {
    const auto& v = r.charts.verdicts[i];
    t.rows.push_back({"P" + std::to_string(i + 1), to_string(r.charts.charts[i]), to_string(v.kind),
                      v.witness_k ? std::to_string(*v.witness_k) : ""});
  }
  return t;
}

Table transcript_table(const std::vector<TranscriptEntry>& tr) {
  Table t{{"step", "triple", "boundary", "gamma_sq", "k_gamma", "betas"}, {}};
  for (const auto& e : tr)
    t.rows.push_back({std::to_string(e.step), opt3(e.triple), opt3(e.boundary), to_string(e.gamma_sq),
                      to_string(e.k_gamma), opt3(e.betas)});
  return t;
}

static std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render_csv(const Table& t) {
  std::ostringstream o;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) o << (i ? "," : "") << csv_cell(cells[i]);
    o << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return o.str();
}

std::string render_text(const Table& t) {
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  std::ostringstream o;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    o << s << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return o.str();
}

}  // namespace toricsing::report
