#pragma once

// JSON documents for systems and event streams. Field names are frozen; see
// docs/FORMATS.md.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "covred/dynamic.hpp"
#include "covred/system.hpp"

namespace covred {

inline constexpr std::string_view system_format_tag = "covred-system";
inline constexpr std::string_view events_format_tag = "covred-events";
inline constexpr int document_version = 1;

namespace detail {

using nlohmann::json;

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::validation, std::string("malformed document: ") + e.what());
  }
}

inline void expect(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::validation, "malformed document: " + what);
}

inline void check_header(const json& doc, std::string_view tag) {
  expect(doc.is_object(), "top level must be an object");
  expect(doc.contains("format") && doc["format"].is_string() && doc["format"].get<std::string>() == tag,
         "\"format\" must be \"" + std::string(tag) + "\"");
  expect(doc.contains("version") && doc["version"].is_number_integer() && doc["version"].get<int>() == document_version,
         "unsupported \"version\"");
}

inline std::string quoted(const std::string& s) { return json(s).dump(); }

inline void write_label_list(std::ostream& out, const CoveringSystem& system, const ObjectSet& set) {
  out << '[';
  bool first = true;
  for (auto x : set) {
    if (!first) out << ", ";
    first = false;
    out << quoted(system.label(x));
  }
  out << ']';
}

}  // namespace detail

/// Parses and validates a system document. Duplicate blocks are merged and
/// noted in report.
inline CoveringSystem parse_system(std::string_view text, ConstructionReport* report = nullptr) {
  using detail::expect;
  const auto doc = detail::parse_json(text);
  detail::check_header(doc, system_format_tag);

  expect(doc.contains("objects") && doc["objects"].is_array(), "\"objects\" must be an array of labels");
  std::vector<std::string> labels;
  std::unordered_map<std::string, ObjectId> ids;
  for (const auto& v : doc["objects"]) {
    expect(v.is_string(), "object labels must be strings");
    auto label = v.get<std::string>();
    expect(ids.emplace(label, labels.size()).second, "duplicate object label '" + label + "'");
    labels.push_back(std::move(label));
  }
  const auto n = labels.size();
  if (doc.contains("universe_size"))
    expect(doc["universe_size"].is_number_unsigned() && doc["universe_size"].get<std::size_t>() == n,
           "\"universe_size\" disagrees with \"objects\"");

  auto read_set = [&](const detail::json& arr, const std::string& where) {
    expect(arr.is_array(), where + " must be an array of labels");
    ObjectSet s(n);
    for (const auto& v : arr) {
      expect(v.is_string(), where + " contains a non-string label");
      const auto it = ids.find(v.get<std::string>());
      expect(it != ids.end(), where + " names unknown object '" + v.get<std::string>() + "'");
      s.set(it->second);
    }
    return s;
  };

  expect(doc.contains("coverings") && doc["coverings"].is_array(), "\"coverings\" must be an array");
  std::vector<Covering> coverings;
  for (std::size_t c = 0; c < doc["coverings"].size(); ++c) {
    const auto& cj = doc["coverings"][c];
    const std::string where = "covering " + std::to_string(c);
    expect(cj.is_object() && cj.contains("name") && cj["name"].is_string(), where + " needs a string \"name\"");
    expect(cj.contains("blocks") && cj["blocks"].is_array(), where + " needs a \"blocks\" array");
    std::vector<ObjectSet> blocks;
    for (std::size_t b = 0; b < cj["blocks"].size(); ++b)
      blocks.push_back(read_set(cj["blocks"][b], where + " block " + std::to_string(b)));
    coverings.emplace_back(cj["name"].get<std::string>(), n, std::move(blocks), report);
  }

  expect(doc.contains("decision") && doc["decision"].is_array(), "\"decision\" must be an array of classes");
  std::vector<ObjectSet> classes;
  for (std::size_t j = 0; j < doc["decision"].size(); ++j)
    classes.push_back(read_set(doc["decision"][j], "decision class " + std::to_string(j)));

  CoveringSystem system(n, std::move(coverings), DecisionPartition(n, std::move(classes)), std::move(labels));
  require_valid(system);
  return system;
}

inline std::string serialize_system(const CoveringSystem& system) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": " << detail::quoted(std::string(system_format_tag)) << ",\n";
  out << "  \"version\": " << document_version << ",\n";
  out << "  \"universe_size\": " << system.universe_size() << ",\n";
  out << "  \"objects\": [";
  for (std::size_t x = 0; x < system.universe_size(); ++x) out << (x ? ", " : "") << detail::quoted(system.label(x));
  out << "],\n";
  out << "  \"coverings\": [";
  for (std::size_t c = 0; c < system.covering_count(); ++c) {
    const auto& cov = system.covering(c);
    out << (c ? ",\n" : "\n") << "    {\n      \"name\": " << detail::quoted(cov.name()) << ",\n      \"blocks\": [";
    for (std::size_t b = 0; b < cov.size(); ++b) {
      out << (b ? ",\n" : "\n") << "        ";
      detail::write_label_list(out, system, cov.block(b));
    }
    out << (cov.size() ? "\n      ]" : "]") << "\n    }";
  }
  out << (system.covering_count() ? "\n  ],\n" : "],\n");
  out << "  \"decision\": [";
  for (std::size_t j = 0; j < system.decision().size(); ++j) {
    out << (j ? ",\n" : "\n") << "    ";
    detail::write_label_list(out, system, system.decision()[j]);
  }
  out << (system.decision().size() ? "\n  ]\n" : "]\n");
  out << "}\n";
  return out.str();
}

/// One entry of an event document, still in label form.
struct EventRecord {
  enum class Op { add, remove };
  Op op = Op::add;
  std::string label;
  /// add only
  std::size_t decision_class = 0;
  std::vector<std::vector<std::size_t>> absorbing;

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

inline std::vector<EventRecord> parse_events(std::string_view text) {
  using detail::expect;
  const auto doc = detail::parse_json(text);
  detail::check_header(doc, events_format_tag);
  expect(doc.contains("events") && doc["events"].is_array(), "\"events\" must be an array");
  std::vector<EventRecord> out;
  for (std::size_t i = 0; i < doc["events"].size(); ++i) {
    const auto& e = doc["events"][i];
    const std::string where = "event " + std::to_string(i);
    expect(e.is_object() && e.contains("op") && e["op"].is_string(), where + " needs a string \"op\"");
    EventRecord r;
    const auto op = e["op"].get<std::string>();
    if (e.contains("label")) {
      expect(e["label"].is_string(), where + " \"label\" must be a string");
      r.label = e["label"].get<std::string>();
    }
    if (op == "add") {
      r.op = EventRecord::Op::add;
      expect(e.contains("class") && e["class"].is_number_unsigned(), where + " needs an unsigned \"class\"");
      r.decision_class = e["class"].get<std::size_t>();
      expect(e.contains("blocks") && e["blocks"].is_array(), where + " needs a \"blocks\" array");
      for (const auto& per_cov : e["blocks"]) {
        expect(per_cov.is_array(), where + " \"blocks\" entries must be arrays of block indices");
        std::vector<std::size_t> idx;
        for (const auto& b : per_cov) {
          expect(b.is_number_unsigned(), where + " block indices must be unsigned integers");
          idx.push_back(b.get<std::size_t>());
        }
        r.absorbing.push_back(std::move(idx));
      }
    } else if (op == "delete") {
      r.op = EventRecord::Op::remove;
      expect(!r.label.empty(), where + " needs the \"label\" of the object to delete");
    } else {
      expect(false, where + " has unknown op '" + op + "'");
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string serialize_events(const std::vector<EventRecord>& events) {
  detail::json arr = detail::json::array();
  for (const auto& e : events) {
    detail::json j;
    if (e.op == EventRecord::Op::add) {
      j["op"] = "add";
      if (!e.label.empty()) j["label"] = e.label;
      j["class"] = e.decision_class;
      j["blocks"] = e.absorbing;
    } else {
      j["op"] = "delete";
      j["label"] = e.label;
    }
    arr.push_back(std::move(j));
  }
  detail::json doc;
  doc["format"] = events_format_tag;
  doc["version"] = document_version;
  doc["events"] = std::move(arr);
  return doc.dump(2) + "\n";
}

/// Turns a label-form event into an update against the current system.
inline UpdateSpec resolve_event(const CoveringSystem& system, const EventRecord& event) {
  if (event.op == EventRecord::Op::add) return AddSpec{event.absorbing, event.decision_class, event.label};
  const auto id = system.find_label(event.label);
  if (!id) throw Error(ErrorKind::validation, "cannot delete unknown object '" + event.label + "'");
  return DeleteSpec{*id};
}

}  // namespace covred
