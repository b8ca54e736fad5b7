#include "latticemaps/runconfig.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

#include "latticemaps/gallery.hpp"
#include "latticemaps/monodromy.hpp"
#include "latticemaps/verify.hpp"

namespace latticemaps {

std::string to_string(Command c) {
  switch (c) {
    case Command::VERIFY:
      return "verify";
    case Command::ORBIT:
      return "orbit";
    case Command::INVARIANTS:
      return "invariants";
    case Command::GALLERY:
      return "gallery";
  }
  return "?";
}

std::string to_string(OutputFormat f) {
  return f == OutputFormat::JSON ? "json" : "csv";
}

ConfigError::ConfigError(const std::string& pointer, const std::string& message)
    : std::runtime_error(pointer.empty() ? message : pointer + ": " + message),
      pointer_(pointer) {}

namespace {

using nlohmann::ordered_json;

Command command_from_string(const std::string& s, const std::string& pointer) {
  if (s == "verify") return Command::VERIFY;
  if (s == "orbit") return Command::ORBIT;
  if (s == "invariants") return Command::INVARIANTS;
  if (s == "gallery") return Command::GALLERY;
  throw ConfigError(pointer,
                    "expected one of \"verify\", \"orbit\", \"invariants\", "
                    "\"gallery\"");
}

Rat rat_field(const ordered_json& j, const std::string& pointer) {
  if (!j.is_string())
    throw ConfigError(pointer, "expected a rational string \"p\" or \"p/q\"");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ConfigError(pointer, e.what());
  }
}

long long int_field(const ordered_json& j, const std::string& pointer,
                    long long lo, const std::string& requirement) {
  if (!j.is_number_integer()) throw ConfigError(pointer, requirement);
  long long v = j.get<long long>();
  if (v < lo) throw ConfigError(pointer, requirement);
  return v;
}

std::string string_field(const ordered_json& j, const std::string& pointer) {
  if (!j.is_string()) throw ConfigError(pointer, "expected a string");
  return j.get<std::string>();
}

BoundaryId boundary_field(const ordered_json& j, const std::string& pointer,
                          QuadId quad) {
  std::string name = string_field(j, pointer);
  BoundaryId id;
  try {
    id = boundary_id_from_string(name);
  } catch (const std::exception&) {
    throw ConfigError(pointer, "unknown boundary row \"" + name + "\"");
  }
  if (quad_of(id) != quad)
    throw ConfigError(pointer, "row \"" + name +
                                   "\" does not belong to equation \"" +
                                   to_string(quad) + "\"");
  return id;
}

void parse_strip_block(const ordered_json& doc, RunConfig& cfg) {
  static const char* const kStripKeys[] = {"equation",       "mu",
                                           "mode",           "n",
                                           "boundary_minus", "boundary_plus"};
  bool any = false;
  for (const char* k : kStripKeys) any = any || doc.contains(k);
  if (!any) return;
  for (const char* k : kStripKeys)
    if (!doc.contains(k))
      throw ConfigError(std::string("/") + k,
                        "required when a strip is configured");

  QuadId quad;
  {
    std::string name = string_field(doc["equation"], "/equation");
    try {
      quad = quad_id_from_string(name);
    } catch (const std::exception&) {
      throw ConfigError("/equation", "unknown equation \"" + name + "\"");
    }
  }
  Rat mu = rat_field(doc["mu"], "/mu");
  long long n = int_field(doc["n"], "/n", 2, "expected an integer >= 2");
  BoundaryId minus = boundary_field(doc["boundary_minus"], "/boundary_minus",
                                    quad);
  BoundaryId plus = boundary_field(doc["boundary_plus"], "/boundary_plus",
                                   quad);

  const ordered_json& jm = doc["mode"];
  bool well_keyed = jm.is_object() && jm.size() == 1 &&
                    (jm.contains("autonomous") || jm.contains("general"));
  if (!well_keyed)
    throw ConfigError("/mode",
                      "expected exactly one of \"autonomous\" or \"general\"");
  if (jm.contains("autonomous")) {
    Rat alpha = rat_field(jm["autonomous"], "/mode/autonomous");
    cfg.strip = strip_autonomous(quad, minus, plus, static_cast<int>(n), mu,
                                 alpha);
  } else {
    const ordered_json& jg = jm["general"];
    if (!jg.is_array() || static_cast<long long>(jg.size()) != n - 1)
      throw ConfigError("/mode/general",
                        "expected an array of n - 1 = " +
                            std::to_string(n - 1) + " rational strings");
    std::vector<Rat> alphas;
    for (std::size_t k = 0; k < jg.size(); ++k)
      alphas.push_back(
          rat_field(jg[k], "/mode/general/" + std::to_string(k)));
    cfg.strip = strip_general(quad, minus, plus, static_cast<int>(n), mu,
                              alphas);
  }
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw ConfigError("", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("", "expected a JSON object");

  static const std::vector<std::string> kKnown = {
      "command",        "equation",      "mu",      "mode",
      "n",              "boundary_minus", "boundary_plus", "initial",
      "steps",          "samples",       "rng_seed", "format",
      "out",            "gallery_action", "gallery_id"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (std::find(kKnown.begin(), kKnown.end(), it.key()) == kKnown.end())
      throw ConfigError("/" + it.key(), "unknown field");

  RunConfig cfg;
  if (doc.contains("command"))
    cfg.command = command_from_string(string_field(doc["command"], "/command"),
                                      "/command");

  parse_strip_block(doc, cfg);

  if (doc.contains("initial")) {
    const ordered_json& ji = doc["initial"];
    if (!ji.is_array())
      throw ConfigError("/initial", "expected an array of rational strings");
    if (!cfg.strip)
      throw ConfigError("/initial", "requires the strip fields");
    if (static_cast<int>(ji.size()) != cfg.strip->n)
      throw ConfigError("/initial", "expected n = " +
                                        std::to_string(cfg.strip->n) +
                                        " entries");
    for (std::size_t k = 0; k < ji.size(); ++k)
      cfg.initial.push_back(rat_field(ji[k], "/initial/" + std::to_string(k)));
  }

  if (doc.contains("steps"))
    cfg.steps = static_cast<long>(
        int_field(doc["steps"], "/steps", 0, "expected an integer >= 0"));
  if (doc.contains("samples"))
    cfg.samples = static_cast<int>(
        int_field(doc["samples"], "/samples", 1, "expected an integer >= 1"));
  if (doc.contains("rng_seed")) {
    const ordered_json& js = doc["rng_seed"];
    bool ok = js.is_number_unsigned() ||
              (js.is_number_integer() && js.get<long long>() >= 0);
    if (!ok) throw ConfigError("/rng_seed", "expected an unsigned integer");
    cfg.rng_seed = js.get<std::uint64_t>();
  }
  if (doc.contains("format")) {
    std::string f = string_field(doc["format"], "/format");
    if (f == "json")
      cfg.format = OutputFormat::JSON;
    else if (f == "csv")
      cfg.format = OutputFormat::CSV;
    else
      throw ConfigError("/format", "expected \"json\" or \"csv\"");
  }
  if (doc.contains("out")) cfg.out = string_field(doc["out"], "/out");
  if (doc.contains("gallery_action")) {
    std::string a = string_field(doc["gallery_action"], "/gallery_action");
    if (a != "list" && a != "check")
      throw ConfigError("/gallery_action", "expected \"list\" or \"check\"");
    cfg.gallery_action = a;
  }
  if (doc.contains("gallery_id"))
    cfg.gallery_id = string_field(doc["gallery_id"], "/gallery_id");

  return cfg;
}

void apply_env_overrides(RunConfig& config) {
  const char* env = std::getenv("LATTICEMAPS_RNG_SEED");
  if (env == nullptr || *env == '\0') return;
  std::string s(env);
  bool digits = std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
  if (!digits)
    throw ConfigError("/rng_seed",
                      "environment override LATTICEMAPS_RNG_SEED is not an "
                      "unsigned decimal integer");
  try {
    config.rng_seed = std::stoull(s, nullptr, 10);
  } catch (const std::exception&) {
    throw ConfigError("/rng_seed",
                      "environment override LATTICEMAPS_RNG_SEED is out of "
                      "range");
  }
}

namespace {

const StripConfig& require_strip(const RunConfig& cfg, const char* command) {
  if (!cfg.strip)
    throw ConfigError("/equation", std::string("the strip fields are "
                                               "required for ") +
                                       command);
  return *cfg.strip;
}

const std::vector<Rat>& require_initial(const RunConfig& cfg,
                                        const char* command) {
  if (cfg.initial.empty())
    throw ConfigError("/initial",
                      std::string("an initial field vector is required for ") +
                          command);
  return cfg.initial;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

ordered_json rat_strings(const std::vector<Rat>& vals) {
  ordered_json arr = ordered_json::array();
  for (const Rat& v : vals) arr.push_back(v.to_string());
  return arr;
}

RunResult run_verify_command(const RunConfig& cfg) {
  SuiteReport rep = run_verify_suite(cfg.samples, cfg.rng_seed, 0);
  RunResult r;
  if (cfg.format == OutputFormat::JSON) {
    r.output = suite_report_json(rep);
  } else {
    std::string out = "row,check,pass,samples\n";
    for (const SuiteCell& cell : rep.cells) {
      out += cell.row + "," + cell.check + "," +
             (cell.pass ? "true" : "false") + "," +
             std::to_string(cell.samples) + "\n";
    }
    r.output = out;
  }
  r.exit_code = rep.all_pass() ? 0 : 1;
  return r;
}

RunResult run_orbit_command(const RunConfig& cfg) {
  const StripConfig& sc = require_strip(cfg, "orbit");
  const std::vector<Rat>& seed = require_initial(cfg, "orbit");

  StripState state = initial_state(sc, seed);
  const InvariantScheme scheme = invariant_scheme(sc, state);
  const std::size_t m = scheme.zero_trace ? 0 : scheme.kept.size();

  struct Row {
    long step;
    std::vector<Rat> x, a, inv;
  };
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(cfg.steps) + 1);
  for (long s = 0;;) {
    Row row{s, state.x, state.a, {}};
    if (m > 0) row.inv = invariant_values(sc, state, scheme);
    rows.push_back(std::move(row));
    if (s == cfg.steps) break;
    try {
      state = step_up(sc, state);
    } catch (const StripSingular&) {
      // Deterministic reseed: restart the configured orbit from its initial
      // state, so every conserved quantity keeps its value across the
      // restart; the fresh state is the next emitted row.
      state = initial_state(sc, seed);
    }
    ++s;
  }

  RunResult r;
  if (cfg.format == OutputFormat::CSV) {
    std::string out = "step";
    for (int i = 1; i <= sc.n; ++i) out += ",x_" + std::to_string(i);
    for (int i = 1; i <= sc.n - 1; ++i) out += ",alpha_" + std::to_string(i);
    for (std::size_t k = 0; k < m; ++k) out += ",inv_" + std::to_string(k);
    out += "\n";
    for (const Row& row : rows) {
      out += std::to_string(row.step);
      for (const Rat& v : row.x) out += "," + v.to_string();
      for (const Rat& v : row.a) out += "," + v.to_string();
      for (const Rat& v : row.inv) out += "," + v.to_string();
      out += "\n";
    }
    r.output = out;
  } else {
    ordered_json j;
    j["command"] = "orbit";
    j["steps"] = cfg.steps;
    ordered_json jrows = ordered_json::array();
    for (const Row& row : rows) {
      ordered_json jr;
      jr["step"] = row.step;
      jr["x"] = rat_strings(row.x);
      jr["alpha"] = rat_strings(row.a);
      jr["inv"] = rat_strings(row.inv);
      jrows.push_back(std::move(jr));
    }
    j["rows"] = std::move(jrows);
    r.output = j.dump();
  }
  r.exit_code = 0;
  return r;
}

RunResult run_invariants_command(const RunConfig& cfg) {
  const StripConfig& sc = require_strip(cfg, "invariants");
  const std::vector<Rat>& seed = require_initial(cfg, "invariants");

  StripState state = initial_state(sc, seed);
  InvariantReport report = extract_invariants(double_row(sc, state));
  InvariantScheme scheme = invariant_scheme(sc, state);
  const std::size_t m = scheme.zero_trace ? 0 : scheme.kept.size();

  std::vector<std::vector<Rat>> traj;
  traj.push_back(m > 0 ? invariant_values(sc, state, scheme)
                       : std::vector<Rat>{});
  bool truncated = false;
  for (long s = 1; s <= cfg.steps; ++s) {
    try {
      state = step_up(sc, state);
    } catch (const StripSingular&) {
      truncated = true;
      break;
    }
    traj.push_back(m > 0 ? invariant_values(sc, state, scheme)
                         : std::vector<Rat>{});
  }

  std::vector<std::string> laws;
  for (std::size_t ki = 0; ki < m; ++ki) {
    long k = report.k_class[ki];
    if (k == 1)
      laws.push_back("conserved");
    else if (k == 2 && traj.size() >= 2 && traj[1][ki] == -traj[0][ki])
      laws.push_back("alternating");
    else
      laws.push_back("period-" + std::to_string(k));
  }

  bool drift_ok = true;
  std::vector<std::vector<Rat>> drift(traj.size(),
                                      std::vector<Rat>(m, Rat(0)));
  for (std::size_t s = 0; s < traj.size(); ++s) {
    for (std::size_t ki = 0; ki < m; ++ki) {
      std::size_t k = static_cast<std::size_t>(report.k_class[ki]);
      if (s >= k) {
        drift[s][ki] = traj[s][ki] - traj[s - k][ki];
        if (!drift[s][ki].is_zero()) drift_ok = false;
      }
    }
  }

  RunResult r;
  if (cfg.format == OutputFormat::CSV) {
    std::string out = "step";
    for (std::size_t k = 0; k < m; ++k) out += ",inv_" + std::to_string(k);
    for (std::size_t k = 0; k < m; ++k) out += ",drift_" + std::to_string(k);
    out += "\n";
    for (std::size_t s = 0; s < traj.size(); ++s) {
      out += std::to_string(s);
      for (const Rat& v : traj[s]) out += "," + v.to_string();
      for (const Rat& v : drift[s]) out += "," + v.to_string();
      out += "\n";
    }
    r.output = out;
  } else {
    ordered_json j;
    j["command"] = "invariants";
    j["report"] = ordered_json::parse(invariant_report_json(report));
    j["laws"] = laws;
    j["steps_requested"] = cfg.steps;
    j["steps_realized"] = static_cast<long>(traj.size()) - 1;
    j["truncated_singular"] = truncated;
    j["drift_ok"] = drift_ok;
    ordered_json jtraj = ordered_json::array();
    for (std::size_t s = 0; s < traj.size(); ++s) {
      ordered_json jr;
      jr["step"] = s;
      jr["values"] = rat_strings(traj[s]);
      jr["drift"] = rat_strings(drift[s]);
      jtraj.push_back(std::move(jr));
    }
    j["trajectory"] = std::move(jtraj);
    r.output = j.dump();
  }
  r.exit_code = drift_ok ? 0 : 1;
  return r;
}

RunResult run_gallery_command(const RunConfig& cfg) {
  RunResult r;
  if (cfg.gallery_action == "list") {
    std::vector<std::string> ids = gallery_ids();
    if (cfg.format == OutputFormat::JSON) {
      ordered_json j;
      j["command"] = "gallery";
      j["ids"] = ids;
      r.output = j.dump();
    } else {
      std::string out = "id\n";
      for (const std::string& id : ids) out += id + "\n";
      r.output = out;
    }
    r.exit_code = 0;
    return r;
  }

  if (cfg.gallery_id.empty())
    throw ConfigError("/gallery_id", "an entry id is required for gallery "
                                     "check");
  std::vector<std::string> ids = gallery_ids();
  if (std::find(ids.begin(), ids.end(), cfg.gallery_id) == ids.end())
    throw ConfigError("/gallery_id",
                      "unknown gallery id \"" + cfg.gallery_id + "\"");
  const StripConfig& sc = require_strip(cfg, "gallery check");
  const std::vector<Rat>& seed = require_initial(cfg, "gallery check");
  CrosscheckReport rep;
  try {
    rep = gallery_crosscheck(cfg.gallery_id, sc, seed, cfg.steps);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("/gallery_id", e.what());
  }
  if (cfg.format == OutputFormat::JSON) {
    r.output = crosscheck_report_json(rep);
  } else {
    std::string out =
        "id,match,steps_requested,steps_realized,truncated_singular,detail\n";
    out += rep.id;
    out += rep.match ? ",true," : ",false,";
    out += std::to_string(rep.steps_requested) + "," +
           std::to_string(rep.steps_realized) + ",";
    out += rep.truncated_singular ? "true," : "false,";
    out += csv_quote(rep.detail) + "\n";
    r.output = out;
  }
  r.exit_code = rep.match ? 0 : 1;
  return r;
}

}  // namespace

RunResult execute(const RunConfig& config) {
  if (!config.command)
    throw ConfigError("/command", "required");
  switch (*config.command) {
    case Command::VERIFY:
      return run_verify_command(config);
    case Command::ORBIT:
      return run_orbit_command(config);
    case Command::INVARIANTS:
      return run_invariants_command(config);
    case Command::GALLERY:
      return run_gallery_command(config);
  }
  throw ConfigError("/command", "required");
}

}  // namespace latticemaps
