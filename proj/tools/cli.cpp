#include "cli.hpp"

#include "report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace toricsing::cli {

namespace {

using report::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Int> parse_list(const std::string& s, const std::string& what) {
  try {
    return parse_int_list(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(what + ": " + e.what());
  }
}

Int parse_one(const std::string& s, const std::string& what) {
  try {
    return parse_int(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(what + ": " + e.what());
  }
}

BaseSingularity parse_base(const std::string& s) {
  if (s == "smooth") return BaseSingularity::smooth();
  if (s == "odp") return BaseSingularity::odp();
  if (s.rfind("cyclic:", 0) == 0) {
    auto v = parse_list(s.substr(7), "--base");
    if (v.size() != 2) throw UsageError("--base cyclic:r,q needs two integers");
    return BaseSingularity::cyclic(v[0], v[1]);
  }
  throw UsageError("--base must be smooth, odp or cyclic:r,q");
}

std::vector<ChainStepArgs> parse_betas(const std::string& s) {
  std::vector<ChainStepArgs> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" ") == std::string::npos) continue;
    auto v = parse_list(item, "--betas");
    if (v.size() != 2 && v.size() != 3) throw UsageError("--betas entries are b1,b2 or b1,b2,j");
    ChainStepArgs sp{v[0], v[1], 1};
    if (v.size() == 3) sp.j = static_cast<int>(to_long(v[2]));
    out.push_back(sp);
  }
  return out;
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

report::Table object_table(const Json& j) {
  report::Table t;
  std::vector<std::string> row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    t.header.push_back(it.key());
    row.push_back(cell(it.value()));
  }
  t.rows.push_back(row);
  return t;
}

struct Output {
  Json json;
  std::optional<report::Table> table;
};

void emit(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << o.json.dump(2) << "\n";
    return;
  }
  report::Table t = o.table ? *o.table : object_table(o.json);
  out << (format == "csv" ? report::render_csv(t) : report::render_text(t));
}

Output enumeration_output(const EnumerationReport& r) { return {report::to_json(r), report::enumeration_table(r)}; }

EnumerationReport quadric_table(long bound) {
  EnumerationReport r;
  r.bound = bound;
  for (long w1 = 1; w1 <= bound; ++w1)
    for (long w2 = 1; w2 <= bound; ++w2)
      for (long w3 = 1; w3 <= bound; ++w3) {
        long w4 = w1 + w2 - w3;
        if (w4 < 1 || w4 > bound) continue;
        std::vector<Int> w{Int(w1), Int(w2), Int(w3), Int(w4)};
        if (gcd(gcd(w[0], w[1]), gcd(w[2], w[3])) != 1 || odp_representative(w) != w) continue;
        auto p = quadric_surface_pair({w[0], w[1], w[2], w[3]});
        std::string tag = "d=" + report::join_ints({p.d13, p.d14, p.d23, p.d24}) + ";plt=";
        std::vector<Int> classes;
        for (const auto& g : w)
          if (std::find(classes.begin(), classes.end(), g) == classes.end() &&
              quadric_triple_condition(p.w, g, QuadricMode::plt))
            classes.push_back(g);
        std::sort(classes.begin(), classes.end());
        tag += classes.empty() ? "none" : "O(" + report::join_ints(classes, "),O(") + ")";
        r.hits.push_back(w);
        r.tags.push_back(tag);
        r.values.push_back(discrepancy_zero(make_blowup(BaseSingularity::odp(), w)));
      }
  return r;
}

EnumerationReport canonical_triple_table(long bound) {
  EnumerationReport r;
  r.bound = bound;
  r.key_name = "weights_gamma";
  struct Row {
    std::vector<Int> key;
    std::string tag;
    Rat value;
  };
  std::vector<Row> rows;
  for (const auto& e : canonical_table(bound)) {
    std::vector<Int> key{e.weights[0], e.weights[1], e.weights[2], e.gamma_degree};
    std::string tag = to_string(e.type);
    if (e.split_degree) tag += " split O(" + e.split_degree->get_str() + ")";
    auto b = make_blowup(BaseSingularity::smooth(), {e.weights[0], e.weights[1], e.weights[2]});
    if (!is_canonical_blowup(b)) r.errors.push_back("not canonical " + report::join_ints(key));
    if (!triple_ample_and_adjunction(exceptional_surface(e.weights), e.gamma_degree).ample)
      r.errors.push_back("not anti-ample " + report::join_ints(key));
    rows.push_back({key, tag, discrepancy_zero(b)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.key != b.key ? a.key < b.key : a.tag < b.tag;
  });
  for (auto& x : rows) {
    r.hits.push_back(x.key);
    r.tags.push_back(x.tag);
    r.values.push_back(x.value);
  }
  return r;
}

Json member_json(const WPSPair& pair, const Int& g) {
  try {
    return report::ints_json(gamma_different(pair, g));
  } catch (const std::domain_error&) {
    return nullptr;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"toricsing: toric blow-ups, cyclic quotient singularities and plt triples"};
  app.name("toricsing");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  int jobs = 0;
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", jobs, "worker threads for enumerations (TORICSING_JOBS mirrors it)");

  std::string quotient, rule_name = "default";
  auto* classify = app.add_subcommand("classify", "verdict for a cyclic quotient r,a1,a2,a3");
  classify->add_option("--quotient", quotient, "r,a1,a2,a3")->required();
  classify->add_option("--criterion", rule_name, "default or stated")->check(CLI::IsMember({"default", "stated"}));

  std::string base_s, weights_s;
  auto* blowup = app.add_subcommand("blowup", "charts of a weighted blow-up");
  blowup->add_option("--base", base_s, "smooth, odp or cyclic:r,q")->required();
  blowup->add_option("--weights", weights_s, "w1,w2,w3 (w1,w2,w3,w4 for odp)")->required();
  blowup->add_option("--criterion", rule_name, "default or stated")->check(CLI::IsMember({"default", "stated"}));

  long bound = 0;
  bool terminal = false;
  auto* enumerate = app.add_subcommand("enumerate", "bounded search for canonical or terminal blow-ups");
  enumerate->add_option("--base", base_s, "smooth, odp or cyclic:r,q")->required();
  enumerate->add_option("--bound", bound, "maximal weight")->required();
  enumerate->add_flag("--terminal", terminal, "terminal instead of canonical");
  enumerate->add_option("--criterion", rule_name, "default or stated")->check(CLI::IsMember({"default", "stated"}));

  std::string surface_s, boundary_s, params_s;
  std::string gamma_s;
  int case_id = 0;
  auto* triple = app.add_subcommand("triple", "classify a plt triple or a canonical triple");
  triple->add_option("--surface", surface_s, "a1,a2,a3");
  triple->add_option("--boundary", boundary_s, "d1,d2,d3 (1 = no boundary)");
  triple->add_option("--gamma", gamma_s, "degree of the curve");
  triple->add_option("--weights", weights_s, "blow-up weights w1,w2,w3 for the canonical table");
  triple->add_option("--case", case_id, "9 or 10 with --params");
  triple->add_option("--params", params_s, "parameters of case 9 or 10");

  auto* chain = app.add_subcommand("chain", "chains of blow-ups along the marked curve");
  chain->require_subcommand(1);
  std::string betas_s;
  auto* chain_run = chain->add_subcommand("run", "run a chain");
  chain_run->add_option("--base", base_s, "smooth or cyclic:r,q")->required();
  chain_run->add_option("--weights", weights_s, "w1,w2,w3")->required();
  chain_run->add_option("--triple-case", case_id, "plt case 1..8")->required();
  chain_run->add_option("--params", params_s, "parameters of the case")->required();
  chain_run->add_option("--betas", betas_s, "b1,b2[,j];b1,b2[,j];...");

  std::string table_name;
  auto* table = app.add_subcommand("table", "golden tables");
  table->add_option("name", table_name, "cantoric, defS, defS2 or lemm2")
      ->required()
      ->check(CLI::IsMember({"cantoric", "defS", "defS2", "lemm2"}));
  table->add_option("--bound", bound, "bound")->required();
  table->add_option("--case", case_id, "plt case for defS");
  table->add_option("--criterion", rule_name, "default or stated")->check(CLI::IsMember({"default", "stated"}));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (jobs <= 0) {
    if (const char* env = std::getenv("TORICSING_JOBS")) {
      try {
        jobs = std::stoi(env);
      } catch (const std::exception&) {
        err << "usage error: TORICSING_JOBS must be an integer\n";
        return 2;
      }
    }
  }
  if (jobs <= 0) jobs = 1;
  CanonicalRule rule = rule_name == "stated" ? CanonicalRule::stated_criterion : CanonicalRule::oracle_off_domain;

  try {
    Output o;
    if (*classify) {
      auto v = parse_list(quotient, "--quotient");
      if (v.size() != 4) throw UsageError("--quotient takes r,a1,a2,a3");
      if (v[0] < 1) throw UsageError("r must be >= 1");
      CyclicQuotientType t(v[0], v[1], v[2], v[3]);
      bool term = is_terminal(t);
      Json md = nullptr;
      if (term && !t.smooth()) md = to_string(minimal_discrepancy(t));
      o.json = Json{{"input", report::to_json(t)},
                    {"normalized", report::to_json(normalize(t))},
                    {"verdict", report::to_json(is_canonical(t, rule))},
                    {"terminal", term},
                    {"minimal_discrepancy", md}};
    } else if (*blowup) {
      auto b = make_blowup(parse_base(base_s), parse_list(weights_s, "--weights"));
      report::BlowupReport r{charts(b, rule), discrepancy_zero(b)};
      o.json = Json{{"blowup", report::to_json(b)}};
      o.json.update(report::to_json(r));
      o.table = report::chart_table(r);
    } else if (*enumerate) {
      if (bound < 1) throw UsageError("--bound must be positive");
      auto base = parse_base(base_s);
      EnumerationReport r;
      switch (base.kind) {
        case BaseSingularity::Kind::smooth:
          r = terminal ? enumerate_terminal_cyclic(1, 0, bound, jobs) : enumerate_canonical_smooth(bound, jobs, rule);
          break;
        case BaseSingularity::Kind::odp:
          if (terminal) throw UsageError("--terminal is not available for the odp base");
          r = enumerate_canonical_odp(bound, jobs);
          break;
        case BaseSingularity::Kind::cyclic:
          if (!terminal) throw UsageError("cyclic bases enumerate terminal blow-ups (add --terminal)");
          r = enumerate_terminal_cyclic(base.r, base.q, bound, jobs);
          break;
      }
      o = enumeration_output(r);
    } else if (*triple) {
      if (case_id == 9 || case_id == 10) {
        auto rec = classify_plt_record(case_id, parse_list(params_s, "--params"));
        o.json = Json{{"triple", rec ? report::to_json(*rec) : Json(nullptr)}};
      } else if (case_id != 0) {
        throw UsageError("--case is only for the records 9 and 10");
      } else if (!weights_s.empty()) {
        if (gamma_s.empty()) throw UsageError("--weights needs --gamma");
        auto w = parse_list(weights_s, "--weights");
        if (w.size() != 3) throw UsageError("--weights takes w1,w2,w3");
        Json m = Json::array();
        for (const auto& r : classify_canonical_triple({w[0], w[1], w[2]}, parse_one(gamma_s, "--gamma")))
          m.push_back(report::to_json(r));
        o.json = Json{{"matches", m}};
      } else {
        if (surface_s.empty() || boundary_s.empty() || gamma_s.empty())
          throw UsageError("triple needs --surface, --boundary and --gamma");
        auto a = parse_list(surface_s, "--surface");
        auto d = parse_list(boundary_s, "--boundary");
        Int g = parse_one(gamma_s, "--gamma");
        if (a.size() != 3 || d.size() != 3) throw UsageError("--surface and --boundary take three integers");
        auto rec = classify_plt_triple({{a[0], a[1], a[2]}, {d[0], d[1], d[2]}, g});
        auto pair = make_wps_pair({a[0], a[1], a[2]}, {d[0], d[1], d[2]});
        auto aa = triple_ample_and_adjunction(pair, g);
        o.json = Json{{"triple", rec ? report::to_json(*rec) : Json(nullptr)},
                      {"ample", aa.ample},
                      {"anti_degree", to_string(aa.anti_degree)},
                      {"gamma_log_degree", to_string(aa.gamma_log_degree)},
                      {"multiplicities", member_json(pair, g)}};
      }
    } else if (*chain) {
      auto b = make_blowup(parse_base(base_s), parse_list(weights_s, "--weights"));
      TripleRecord t;
      t.case_id = "plt-" + std::to_string(case_id);
      t.params = parse_list(params_s, "--params");
      auto cr = run_chain(b, t, parse_betas(betas_s));
      std::vector<report::TranscriptEntry> tr;
      for (const auto& s : cr.states) tr.push_back(report::transcript_entry(s));
      o.json = report::to_json(tr);
      o.table = report::transcript_table(tr);
      emit(o, format, out);
      if (cr.error) {
        err << "error: " << *cr.error << "\n";
        return 1;
      }
      return 0;
    } else if (*table) {
      EnumerationReport r;
      if (table_name == "cantoric") {
        r = enumerate_canonical_smooth(bound, jobs, rule);
      } else if (table_name == "defS") {
        if (case_id < 1 || case_id > 8) throw UsageError("table defS needs --case 1..8");
        r = enumerate_plt_triples_case(case_id, bound, jobs);
      } else if (table_name == "defS2") {
        r = quadric_table(bound);
      } else {
        r = canonical_triple_table(bound);
      }
      o = enumeration_output(r);
    }
    emit(o, format, out);
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace toricsing::cli
