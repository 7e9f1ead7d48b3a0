#include "credfusion/evidence_document.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace credfusion {

using Json = nlohmann::ordered_json;

std::vector<MassFunction> EvidenceDocument::masses() const {
  std::vector<MassFunction> out;
  out.reserve(evidence.size());
  for (const auto& e : evidence) out.push_back(e.mass);
  return out;
}

std::vector<std::string> EvidenceDocument::names() const {
  std::vector<std::string> out;
  out.reserve(evidence.size());
  for (const auto& e : evidence) out.push_back(e.name);
  return out;
}

EvidenceDocument make_document(std::span<const MassFunction> evidence, std::vector<std::string> names) {
  if (evidence.empty()) throw InvalidArgument("a document needs at least one piece of evidence");
  if (names.empty()) {
    for (std::size_t i = 0; i < evidence.size(); ++i) names.push_back("m" + std::to_string(i + 1));
  }
  if (names.size() != evidence.size()) throw LengthMismatch(names.size(), evidence.size());
  EvidenceDocument doc{evidence.front().frame(), {}, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < evidence.size(); ++i) {
    if (!evidence[i].same_frame(evidence.front())) throw FrameMismatch();
    doc.evidence.push_back({std::move(names[i]), evidence[i]});
  }
  return doc;
}

namespace {

std::optional<double> positive_number(const Json& root, const char* key) {
  if (!root.contains(key)) return std::nullopt;
  const auto& v = root.at(key);
  if (!v.is_number()) throw DocumentError(std::string("'") + key + "' must be a number");
  const double x = v.get<double>();
  if (!(x > 0.0)) throw DocumentError(std::string("'") + key + "' must be positive");
  return x;
}

}  // namespace

EvidenceDocument parse_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw DocumentError("document must be a JSON object");
  if (!root.contains("frame") || !root["frame"].is_array()) throw DocumentError("missing 'frame' array");
  if (!root.contains("evidence") || !root["evidence"].is_array()) throw DocumentError("missing 'evidence' array");

  std::vector<std::string> labels;
  for (const auto& l : root["frame"]) {
    if (!l.is_string()) throw DocumentError("frame labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::optional<FrameOfDiscernment> frame;
  try {
    frame.emplace(std::move(labels));
  } catch (const InvalidFrame& e) {
    throw DocumentError(e.what());
  }

  EvidenceDocument doc{*frame, {}, positive_number(root, "tau"), positive_number(root, "delta")};
  std::set<std::string> seen_names;
  for (const auto& item : root["evidence"]) {
    if (!item.is_object()) throw DocumentError("evidence entries must be objects");
    if (item.contains("name") && !item["name"].is_string()) throw DocumentError("evidence names must be strings");
    const std::string name =
        item.contains("name") ? item["name"].get<std::string>() : "m" + std::to_string(doc.evidence.size() + 1);
    if (!seen_names.insert(name).second) throw DocumentError("duplicate evidence name '" + name + "'");
    if (!item.contains("masses") || !item["masses"].is_object()) {
      throw DocumentError("evidence '" + name + "' has no 'masses' object");
    }
    std::vector<MassEntry> entries;
    std::set<std::uint32_t> seen_subsets;
    for (const auto& [key, value] : item["masses"].items()) {
      if (!value.is_number()) throw DocumentError("mass of '" + key + "' in '" + name + "' is not a number");
      Subset s;
      try {
        s = doc.frame.parse_subset(key);
      } catch (const InvalidFrame& e) {
        throw DocumentError("evidence '" + name + "': " + e.what());
      }
      if (!seen_subsets.insert(s.bits).second) {
        throw DocumentError("evidence '" + name + "' lists subset '" + key + "' twice");
      }
      entries.emplace_back(s, value.get<double>());
    }
    try {
      doc.evidence.push_back({name, MassFunction(doc.frame, entries)});
    } catch (const InvalidMass& e) {
      throw DocumentError("evidence '" + name + "': " + e.what());
    }
  }
  if (doc.evidence.empty()) throw DocumentError("document contains no evidence");
  return doc;
}

EvidenceDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string to_json(const EvidenceDocument& doc, int indent) {
  Json root;
  root["frame"] = doc.frame.labels();
  root["evidence"] = Json::array();
  for (const auto& e : doc.evidence) {
    Json masses = Json::object();
    for (const auto& [s, v] : e.mass.focal_elements()) masses[doc.frame.format_subset(s)] = v;
    root["evidence"].push_back({{"name", e.name}, {"masses", std::move(masses)}});
  }
  if (doc.tau) root["tau"] = *doc.tau;
  if (doc.delta) root["delta"] = *doc.delta;
  return root.dump(indent) + "\n";
}

}  // namespace credfusion
