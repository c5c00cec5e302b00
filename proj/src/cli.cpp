#include "onepoint/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "onepoint/demo.hpp"
#include "onepoint/io.hpp"

namespace onepoint {

namespace {

ProblemSpec load_problem(const std::string& spec) {
  if (spec.empty()) throw Error("cli/bad-config", "a problem is required");
  if (std::filesystem::exists(spec)) {
    std::ifstream in(spec);
    if (!in) throw Error("cli/bad-problem", "cannot read '" + spec + "'");
    Json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw Error("cli/bad-problem", "problem file parse: " + std::string(e.what()));
    }
    return problem_from_json(j);
  }
  return catalog(spec);
}

std::string table_text(const InvariantTable& t) {
  std::ostringstream out;
  out << "# " << (t.problem.name.empty() ? "problem" : t.problem.name)
      << "  n_g(d), d <= " << t.d_max << ", g <= " << t.g_max << "\n";
  out << "d g value\n";
  for (long d = 1; d <= t.d_max; ++d)
    for (long g = 0; g <= t.g_max; ++g)
      out << d << " " << g << " " << to_string(t.at(g, d)) << "\n";
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

RunResult run_invariants(const RunConfig& cfg) {
  ProblemSpec p = load_problem(cfg.problem);
  InvariantTable t = invariants(p, cfg.d_max, cfg.g_max);
  if (cfg.format == "json") return {0, dump(json_of(t))};
  return {0, table_text(t)};
}

RunResult run_guess(const RunConfig& cfg) {
  ProblemSpec p = load_problem(cfg.problem);
  auto res = search_minimal(p, cfg.order, cfg.degree, cfg.n, cfg.buffer);
  if (cfg.format == "json") {
    Json j;
    j["found"] = res.has_value();
    if (res) {
      j["R"] = res->R;
      j["D"] = res->D;
      j["relation"] = json_of(res->relation);
      Json gd = Json::array();
      for (const auto& g : res->gd) gd.push_back(json_of(g));
      j["gd"] = gd;
    }
    Json trace = Json::array();
    auto probes = res ? res->trace : search_trace(p, cfg.order, cfg.degree,
                                                  cfg.n, cfg.buffer);
    for (const auto& probe : probes)
      trace.push_back({{"R", probe.R},
                       {"D", probe.D},
                       {"candidates", probe.candidates},
                       {"kept", probe.kept}});
    j["trace"] = trace;
    return {0, dump(j)};
  }
  std::ostringstream out;
  if (!res) {
    out << "no recursion found within bounds (R <= " << cfg.order
        << ", D <= " << cfg.degree << ", N = " << cfg.n << ")\n";
    return {0, out.str()};
  }
  out << "recursion found at R = " << res->R << ", D = " << res->D << "\n";
  out << "h-level: " << pretty_relation(res->relation) << "\n";
  for (const auto& g : res->gd)
    out << "gd-form: " << pretty_gd(g, p.symbol) << "\n";
  return {0, out.str()};
}

RunResult run_verify(const RunConfig& cfg) {
  ProblemSpec p = load_problem(cfg.problem);
  if (cfg.recursion_file.empty())
    throw Error("cli/bad-config", "verify needs --recursion <file>");
  std::ifstream in(cfg.recursion_file);
  if (!in)
    throw Error("cli/bad-recursion", "cannot read '" + cfg.recursion_file + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("cli/bad-recursion", "recursion parse: " + std::string(e.what()));
  }
  HLevelRelation rel;
  std::string form = j.at("form").get<std::string>();
  if (form == "hlevel") {
    rel = relation_from_json(j);
  } else if (form == "gd") {
    rel = from_gd_form(gd_from_json(j), p.stride);
  } else {
    throw Error("cli/bad-recursion", "unknown form '" + form + "'");
  }
  auto fail = verify(rel, p, 1, cfg.d_max);
  if (cfg.format == "json") {
    Json out;
    out["holds"] = !fail.has_value();
    if (fail) out["first_failing_d"] = *fail;
    return {0, dump(out)};
  }
  std::ostringstream out;
  if (fail)
    out << "relation FAILS first at d = " << *fail << "\n";
  else
    out << "relation holds for all d <= " << cfg.d_max << "\n";
  return {0, out.str()};
}

RunResult run_closure_demo(const RunConfig& cfg) {
  if (cfg.demo != "monotone")
    throw Error("cli/unknown-demo", "unknown closure demo '" + cfg.demo + "'");
  ClosureDemo demo = closure_demo_monotone();
  if (cfg.format == "json") {
    Json j;
    j["rec1"] = json_of(demo.rec1);
    j["rec2"] = json_of(demo.rec2);
    j["rec3"] = json_of(demo.rec3);
    j["cauchy"] = json_of(demo.cauchy);
    j["hadamard"] = json_of(demo.hadamard);
    j["final"] = json_of(demo.final_rec);
    Json gd = Json::array();
    for (const auto& g : demo.gd) gd.push_back(json_of(g));
    j["gd"] = gd;
    return {0, dump(j)};
  }
  std::ostringstream out;
  out << "rec1 (u ratio G(dh)/(dh)):   " << pretty_recurrence(demo.rec1, "u")
      << "\n";
  out << "rec2 (v ratio -G(-(d+1)h)/((d+1)h)): "
      << pretty_recurrence(demo.rec2, "v") << "\n";
  out << "rec3 (sequence 1/d):         " << pretty_recurrence(demo.rec3, "s")
      << "\n";
  out << "cauchy product:              " << pretty_recurrence(demo.cauchy, "c")
      << "\n";
  out << "hadamard with 1/d:           "
      << pretty_recurrence(demo.hadamard, "m") << "\n";
  out << "reduced:                     "
      << pretty_recurrence(demo.final_rec, "m") << "\n";
  for (const auto& g : demo.gd)
    out << "gd-form: " << pretty_gd(g, "m") << "\n";
  return {0, out.str()};
}

RunResult run_oracle(const RunConfig& cfg) {
  std::string kind = cfg.oracle_kind;
  GluingCount counts;
  if (kind == "ribbon") {
    counts = ribbon_gluings(cfg.oracle_d);
  } else if (kind == "dessin") {
    counts = dessin_counts(cfg.oracle_d);
  } else if (kind == "bms") {
    counts = bms_counts(cfg.oracle_m, cfg.oracle_d);
  } else if (kind == "monotone") {
    counts.d = cfg.oracle_d;
    counts.genus_histogram[cfg.oracle_g] =
        monotone_factorizations(cfg.oracle_d, cfg.oracle_g);
  } else {
    throw Error("cli/bad-config", "unknown oracle kind '" + kind + "'");
  }
  if (cfg.format == "json") return {0, dump(json_of(counts, kind))};
  std::ostringstream out;
  out << "# oracle:" << kind << " d = " << counts.d << "\n";
  out << "g count\n";
  for (const auto& [g, v] : counts.genus_histogram)
    out << g << " " << to_string(v) << "\n";
  return {0, out.str()};
}

RunResult run_catalog(const RunConfig& cfg) {
  if (cfg.format == "json") {
    Json j;
    Json problems = Json::array();
    for (const auto& name : catalog_names()) problems.push_back(name);
    j["problems"] = problems;
    Json recs = Json::array();
    for (const auto& r : catalog_recursions())
      recs.push_back({{"name", r.name},
                      {"preset", r.preset},
                      {"stride", r.stride},
                      {"recursion", json_of(r.rec)},
                      {"pretty", pretty_gd(r.rec, r.symbol)}});
    j["recursions"] = recs;
    return {0, dump(j)};
  }
  std::ostringstream out;
  out << "problems:\n";
  for (const auto& name : catalog_names()) out << "  " << name << "\n";
  out << "recursions:\n";
  for (const auto& r : catalog_recursions())
    out << "  " << r.name << ": " << pretty_gd(r.rec, r.symbol) << "\n";
  return {0, out.str()};
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  if (cfg.d_max < 1 || cfg.g_max < 0 || cfg.n < 1 || cfg.buffer < 0)
    throw Error("cli/bad-config", "bounds must be positive");
  if (cfg.format != "json" && cfg.format != "table" && cfg.format != "pretty")
    throw Error("cli/bad-config", "format must be json, table or pretty");
  if (cfg.command == "invariants") return run_invariants(cfg);
  if (cfg.command == "guess") return run_guess(cfg);
  if (cfg.command == "verify") return run_verify(cfg);
  if (cfg.command == "closure-demo") return run_closure_demo(cfg);
  if (cfg.command == "oracle") return run_oracle(cfg);
  if (cfg.command == "catalog") return run_catalog(cfg);
  throw Error("cli/bad-config", "unknown command '" + cfg.command + "'");
}

}  // namespace onepoint
