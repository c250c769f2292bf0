#pragma once

// Command-line front end: check, regions, related, reduce, apply, bench,
// convert. Every command prints one JSON document; failures print a JSON
// error record on the error stream and return the ErrorKind as exit status.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covred/approx.hpp"
#include "covred/bench.hpp"
#include "covred/document.hpp"
#include "covred/dynamic.hpp"
#include "covred/reduct.hpp"
#include "covred/related.hpp"
#include "covred/system.hpp"
#include "covred/table.hpp"

namespace covred::cli {

using json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::usage, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json labels_of(const CoveringSystem& system, const ObjectSet& set) {
  json arr = json::array();
  for (auto x : set) arr.push_back(system.label(x));
  return arr;
}

inline json names_of(const CoveringSystem& system, const CoveringSet& set) {
  json arr = json::array();
  for (auto c : set) arr.push_back(system.covering(c).name());
  return arr;
}

inline json family_json(const CoveringSystem& system, const RelatedFamily& family) {
  json members = json::array();
  json outside = json::array();
  for (std::size_t x = 0; x < system.universe_size(); ++x) {
    if (family.contains(x))
      members.push_back({{"object", system.label(x)}, {"coverings", names_of(system, family.of(x))}});
    else
      outside.push_back(system.label(x));
  }
  return {{"members", members}, {"outside_positive", outside}};
}

inline json implicants_json(const CoveringSystem& system, const std::vector<CoveringSet>& sets) {
  json arr = json::array();
  for (const auto& s : sets) arr.push_back(names_of(system, s));
  return arr;
}

inline json reducts_json(const CoveringSystem& system, const std::optional<ReductSet>& reducts) {
  if (!reducts) return nullptr;
  return {{"kind", to_string(reducts->kind)}, {"implicants", implicants_json(system, reducts->implicants)}};
}

inline json notes_json(const ConstructionReport& report) { return report.notes; }

/// Covering names or 1-based positions, comma separated.
inline CoveringSet parse_selection(const CoveringSystem& system, const std::string& text) {
  CoveringSet sel(system.covering_count());
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (auto c = system.find_covering(item)) {
      sel.set(*c);
      continue;
    }
    std::size_t pos = 0;
    std::size_t idx = 0;
    try {
      idx = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || idx == 0 || idx > system.covering_count())
      throw Error(ErrorKind::usage, "unknown covering '" + item + "' in selection");
    sel.set(idx - 1);
  }
  return sel;
}

inline json error_record(ErrorKind kind, const std::string& message) {
  return {{"error", {{"kind", to_string(kind)}, {"code", static_cast<int>(kind)}, {"message", message}}}};
}

struct Options {
  std::string input;
  std::string events;
  std::string output;
  std::string selection;
  std::string decision;
  std::vector<std::string> radius;
  std::size_t oracle_guard = default_oracle_guard;
  std::size_t implicant_cap = ReductOptions{}.implicant_cap;
  bool oracle = false;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::size_t objects = 5000;
  std::size_t coverings = 10;
  std::size_t classes = 5;
  std::size_t adds = 100;
  std::size_t deletes = 100;
  bool per_event = false;
};

inline json cmd_check(const Options& o) {
  ConstructionReport notes;
  const auto system = parse_system(read_file(o.input), &notes);
  const auto pos = positive_region(system, system.all_coverings());
  return {{"command", "check"},
          {"valid", true},
          {"universe_size", system.universe_size()},
          {"coverings", system.covering_count()},
          {"classes", system.decision().size()},
          {"consistency", to_string(classify_consistency(system))},
          {"positive", labels_of(system, pos)},
          {"notes", notes_json(notes)}};
}

inline json cmd_regions(const Options& o) {
  ConstructionReport notes;
  const auto system = parse_system(read_file(o.input), &notes);
  const auto sel = o.selection.empty() ? system.all_coverings() : parse_selection(system, o.selection);
  const auto report = regions(system, sel);
  json classes = json::array();
  for (std::size_t j = 0; j < report.per_class.size(); ++j) {
    const auto& r = report.per_class[j];
    classes.push_back({{"class", labels_of(system, system.decision()[j])},
                       {"lower", labels_of(system, r.lower)},
                       {"upper", labels_of(system, r.upper)},
                       {"boundary", labels_of(system, r.boundary)},
                       {"negative", labels_of(system, r.negative)}});
  }
  return {{"command", "regions"},
          {"selection", names_of(system, sel)},
          {"positive", labels_of(system, report.positive)},
          {"per_class", classes},
          {"notes", notes_json(notes)}};
}

inline json cmd_related(const Options& o) {
  ConstructionReport notes;
  const auto system = parse_system(read_file(o.input), &notes);
  const auto witness = witness_blocks(system);
  const auto family = related_family(system, witness);
  json wit = json::array();
  for (const auto& e : witness.entries())
    wit.push_back({{"covering", system.covering(e.covering).name()},
                   {"block", e.block},
                   {"members", labels_of(system, system.covering(e.covering).block(e.block))},
                   {"class", e.decision_class}});
  json distinct = json::array();
  for (const auto& r : family.distinct()) distinct.push_back(names_of(system, r));
  return {{"command", "related"},
          {"witness_blocks", wit},
          {"related_family", family_json(system, family)},
          {"distinct", distinct},
          {"notes", notes_json(notes)}};
}

inline json cmd_reduce(const Options& o) {
  ConstructionReport notes;
  const auto system = parse_system(read_file(o.input), &notes);
  const ReductOptions ropts{o.implicant_cap};
  const auto family = related_family(system);
  const auto consistency = family.positive() == system.universe() ? Consistency::consistent : Consistency::inconsistent;
  json out = {{"command", "reduce"},
              {"consistency", to_string(consistency)},
              {"related_family", family_json(system, family)}};
  if (family.positive().none()) {
    out["clauses"] = json::array();
    out["reducts"] = nullptr;
  } else {
    const auto cnf = related_function(family);
    const auto result = reduced_disjunctive_form(cnf, ropts);
    out["clauses"] = implicants_json(system, cnf.clauses);
    out["kind"] = consistency == Consistency::consistent ? "reducts" : "pos_preserving_implicants";
    out["reducts"] = implicants_json(system, result.implicants);
    if (o.oracle) {
      const auto oracle = oracle_reducts(system, o.oracle_guard);
      out["oracle_agrees"] = oracle.implicants == result.implicants;
    }
  }
  out["notes"] = notes_json(notes);
  return out;
}

inline json state_summary(const IncrementalState& s) {
  return {{"universe_size", s.system.universe_size()},
          {"consistency", to_string(s.consistency())},
          {"related_family", family_json(s.system, s.family)},
          {"reducts", reducts_json(s.system, s.reducts)}};
}

inline json cmd_apply(const Options& o) {
  if (o.events.empty()) throw Error(ErrorKind::usage, "apply needs --events");
  ConstructionReport notes;
  const auto system = parse_system(read_file(o.input), &notes);
  const auto events = parse_events(read_file(o.events));
  const ReductOptions ropts{o.implicant_cap};
  auto state = rebuild(system, ropts);
  json steps = json::array();
  for (std::size_t i = 0; i < events.size(); ++i) {
    ConstructionReport event_notes;
    UpdateOptions uopts{ropts, nullptr, &event_notes};
    const auto spec = resolve_event(state.system, events[i]);
    const std::string who = std::holds_alternative<DeleteSpec>(spec) ? events[i].label : std::string();
    state = covred::apply(std::move(state), spec, uopts);
    auto summary = state_summary(state);
    summary["event"] = i;
    summary["op"] = events[i].op == EventRecord::Op::add ? "add" : "delete";
    summary["object"] = events[i].op == EventRecord::Op::add ? state.system.labels().back() : who;
    summary["notes"] = notes_json(event_notes);
    steps.push_back(std::move(summary));
  }
  return {{"command", "apply"}, {"initial", state_summary(rebuild(system, ropts))}, {"steps", steps},
          {"notes", notes_json(notes)}};
}

inline json cmd_bench(const Options& o, bool& failed) {
  const ReductOptions ropts{o.implicant_cap};
  BenchReport report;
  json setup;
  if (!o.input.empty()) {
    if (o.events.empty()) throw Error(ErrorKind::usage, "bench with --input needs --events");
    const auto system = parse_system(read_file(o.input));
    report = run_replay_bench(system, parse_events(read_file(o.events)), ropts);
    setup = {{"mode", "replay"}, {"input", o.input}, {"events", o.events}};
  } else {
    SyntheticBenchOptions opts;
    opts.system.objects = o.objects;
    opts.system.coverings = o.coverings;
    opts.system.classes = o.classes;
    opts.adds = o.adds;
    opts.deletes = o.deletes;
    opts.trials = o.trials;
    opts.seed = o.seed;
    opts.reduct = ropts;
    if (o.objects == 0 || o.coverings == 0 || o.classes == 0)
      throw Error(ErrorKind::usage, "--objects, --coverings and --classes must be positive");
    report = run_synthetic_bench(opts);
    setup = {{"mode", "synthetic"}, {"objects", o.objects}, {"coverings", o.coverings}, {"classes", o.classes},
             {"adds", o.adds}, {"deletes", o.deletes}, {"trials", o.trials}, {"seed", o.seed}};
  }
  failed = !report.ok();
  json out = {{"command", "bench"},
              {"setup", setup},
              {"status", report.status()},
              {"identical_outputs", report.identical},
              {"events", report.events.size()},
              {"median_incremental_ns", report.median_incremental_ns},
              {"median_full_ns", report.median_full_ns},
              {"speedup", report.speedup}};
  if (o.per_event) {
    json rows = json::array();
    for (const auto& e : report.events)
      rows.push_back({{"trial", e.trial}, {"op", e.op}, {"universe_size", e.universe_size},
                      {"incremental_ns", e.incremental_ns}, {"full_ns", e.full_ns},
                      {"family_size", e.family_size}, {"clause_count", e.clause_count},
                      {"reduct_count", e.reduct_count}, {"identical", e.identical}});
    out["per_event"] = rows;
  }
  return out;
}

inline std::string cmd_convert(const Options& o) {
  const auto table = read_csv(read_file(o.input));
  TableSchema schema;
  const auto cols = table.header.size();
  schema.kinds.assign(cols, AttributeKind::nominal);
  schema.radius.assign(cols, 0.0);
  auto column = [&](const std::string& name) {
    for (std::size_t a = 0; a < cols; ++a)
      if (table.header[a] == name) return a;
    throw Error(ErrorKind::usage, "no column named '" + name + "'");
  };
  schema.decision_column = o.decision.empty() ? cols - 1 : column(o.decision);
  for (const auto& spec : o.radius) {
    const auto eq = spec.rfind('=');
    if (eq == std::string::npos) throw Error(ErrorKind::usage, "--radius expects COLUMN=VALUE, got '" + spec + "'");
    const auto a = column(spec.substr(0, eq));
    try {
      schema.radius[a] = std::stod(spec.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::usage, "bad radius in '" + spec + "'");
    }
    schema.kinds[a] = AttributeKind::numeric;
  }
  auto system = convert_table(table, schema);
  require_valid(system);
  return serialize_system(system);
}

/// Runs one command line; returns the process exit status.
inline int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering rough-set reducts with incremental maintenance", "covred"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--input", o.input, "input document");
    if (required) opt->required();
  };
  auto output = [&](CLI::App* sub) { sub->add_option("--output", o.output, "write the result here instead of stdout"); };
  auto cap = [&](CLI::App* sub) {
    sub->add_option("--implicant-cap", o.implicant_cap, "abort when partial implicants exceed this count");
  };

  auto* check = app.add_subcommand("check", "validate a system and classify its consistency");
  input(check);
  output(check);
  auto* reg = app.add_subcommand("regions", "lower/upper approximations and regions per decision class");
  input(reg);
  output(reg);
  reg->add_option("--selection", o.selection, "covering names or 1-based positions, comma separated");
  auto* rel = app.add_subcommand("related", "witness blocks and related family");
  input(rel);
  output(rel);
  auto* red = app.add_subcommand("reduce", "all reducts via the related function");
  input(red);
  output(red);
  cap(red);
  red->add_flag("--oracle", o.oracle, "cross-check against exhaustive subset enumeration");
  red->add_option("--oracle-guard", o.oracle_guard, "largest covering count the oracle accepts");
  auto* app_cmd = app.add_subcommand("apply", "replay insertions and deletions incrementally");
  input(app_cmd);
  output(app_cmd);
  cap(app_cmd);
  app_cmd->add_option("--events", o.events, "event document")->required();
  auto* bench = app.add_subcommand("bench", "incremental maintenance against full recomputation");
  input(bench, false);
  output(bench);
  cap(bench);
  bench->add_option("--events", o.events, "event document (with --input)");
  bench->add_option("--trials", o.trials, "synthetic trials");
  bench->add_option("--seed", o.seed, "random seed");
  bench->add_option("--objects", o.objects, "synthetic universe size");
  bench->add_option("--coverings", o.coverings, "synthetic covering count");
  bench->add_option("--classes", o.classes, "synthetic decision classes");
  bench->add_option("--adds", o.adds, "insertions per trial");
  bench->add_option("--deletes", o.deletes, "deletions per trial");
  bench->add_flag("--per-event", o.per_event, "include per-event rows");
  auto* conv = app.add_subcommand("convert", "build a system document from a CSV table");
  input(conv);
  output(conv);
  conv->add_option("--decision", o.decision, "decision column (default: last)");
  conv->add_option("--radius", o.radius, "COLUMN=VALUE; marks the column numeric with that neighborhood radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_record(ErrorKind::usage, e.what()).dump() << "\n";
    return static_cast<int>(ErrorKind::usage);
  }

  try {
    std::string text;
    int status = 0;
    if (*check) text = cmd_check(o).dump(2);
    else if (*reg) text = cmd_regions(o).dump(2);
    else if (*rel) text = cmd_related(o).dump(2);
    else if (*red) text = cmd_reduce(o).dump(2);
    else if (*app_cmd) text = cmd_apply(o).dump(2);
    else if (*bench) {
      bool failed = false;
      text = cmd_bench(o, failed).dump(2);
      if (failed) status = static_cast<int>(ErrorKind::validation);
    } else if (*conv) {
      text = cmd_convert(o);
    }
    if (!text.empty() && text.back() != '\n') text += '\n';
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream f(o.output, std::ios::binary);
      if (!f) throw Error(ErrorKind::usage, "cannot write '" + o.output + "'");
      f << text;
    }
    return status;
  } catch (const Error& e) {
    err << error_record(e.kind(), e.what()).dump() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << error_record(ErrorKind::validation, e.what()).dump() << "\n";
    return static_cast<int>(ErrorKind::validation);
  }
}

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"covred"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_command(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace covred::cli
