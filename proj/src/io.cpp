#include "coopcolor/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "coopcolor/errors.hpp"
#include "coopcolor/multigraph.hpp"

namespace coopcolor {

namespace {

using json = nlohmann::ordered_json;

const char* kDotPalette[] = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
};
constexpr int kDotPaletteSize = 12;

}  // namespace

std::vector<std::string> default_labels(std::size_t n) {
  int width = 1;
  for (std::size_t p = 10; n > p; p *= 10) ++width;
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    out.push_back("v" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') +
                  digits);
  }
  return out;
}

Instance::Instance(GraphFamily family, std::vector<std::string> labels,
                   std::vector<std::string> member_names)
    : family_(std::move(family)), labels_(std::move(labels)), names_(std::move(member_names)) {
  const auto& uni = family_.universal_vertices();
  for (std::size_t i = 0; i < uni.size(); ++i) {
    if (uni[i] != static_cast<Vertex>(i)) {
      throw ContractError("instance requires dense vertex ids 0..n-1");
    }
  }
  if (labels_.empty()) labels_ = default_labels(uni.size());
  if (labels_.size() != uni.size()) {
    throw ContractError("label count " + std::to_string(labels_.size()) +
                        " does not match vertex count " + std::to_string(uni.size()));
  }
  for (std::size_t i = 0; i + 1 < labels_.size(); ++i) {
    if (!(labels_[i] < labels_[i + 1])) {
      throw ContractError("labels must be strictly ascending ('" + labels_[i] + "' vs '" +
                          labels_[i + 1] + "')");
    }
  }
  if (names_.empty()) {
    for (int i = 1; i <= family_.size(); ++i) names_.push_back("G_" + std::to_string(i));
  }
  if (static_cast<int>(names_.size()) != family_.size()) {
    throw ContractError("member name count does not match family size");
  }
}

const std::string& Instance::label_of(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= labels_.size()) {
    throw ContractError("vertex " + std::to_string(v) + " has no label");
  }
  return labels_[static_cast<std::size_t>(v)];
}

Vertex Instance::vertex_of(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw ContractError("unknown vertex label '" + label + "'");
  }
  return static_cast<Vertex>(it - labels_.begin());
}

std::string serialize_instance(const Instance& inst) {
  json j;
  j["version"] = 1;
  j["mode"] = inst.family().is_common_mode() ? "common" : "list";
  j["vertex_labels"] = inst.labels();
  json members = json::array();
  for (int i = 1; i <= inst.family().size(); ++i) {
    const Graph& g = inst.family().member(i);
    json m;
    m["name"] = inst.member_names()[static_cast<std::size_t>(i - 1)];
    json verts = json::array();
    for (Vertex v : g.vertices()) verts.push_back(inst.label_of(v));
    m["vertices"] = std::move(verts);
    json edges = json::array();
    for (const Edge& e : g.edges()) {
      edges.push_back(json::array({inst.label_of(e.u), inst.label_of(e.v)}));
    }
    m["edges"] = std::move(edges);
    members.push_back(std::move(m));
  }
  j["members"] = std::move(members);
  return j.dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ContractError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ContractError("instance must be a JSON object");
  if (!j.contains("version") || j["version"] != 1) {
    throw ContractError("unsupported or missing instance version (expected 1)");
  }
  if (!j.contains("mode") || !j["mode"].is_string()) {
    throw ContractError("missing mode field");
  }
  std::string mode = j["mode"].get<std::string>();
  if (mode != "common" && mode != "list") {
    throw ContractError("mode must be \"common\" or \"list\", got \"" + mode + "\"");
  }
  if (!j.contains("vertex_labels") || !j["vertex_labels"].is_array()) {
    throw ContractError("missing vertex_labels array");
  }
  std::vector<std::string> labels;
  for (const auto& l : j["vertex_labels"]) {
    if (!l.is_string()) throw ContractError("vertex labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw ContractError("duplicate vertex label");
  }
  auto id_of = [&](const std::string& label) -> Vertex {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) {
      throw ContractError("edge or member references unknown label '" + label + "'");
    }
    return static_cast<Vertex>(it - labels.begin());
  };
  if (!j.contains("members") || !j["members"].is_array() || j["members"].empty()) {
    throw ContractError("members must be a nonempty array");
  }
  std::vector<Graph> members;
  std::vector<std::string> names;
  for (const auto& m : j["members"]) {
    if (!m.is_object() || !m.contains("vertices") || !m.contains("edges")) {
      throw ContractError("each member needs vertices and edges");
    }
    names.push_back(m.contains("name") ? m["name"].get<std::string>()
                                       : "G_" + std::to_string(names.size() + 1));
    std::vector<Vertex> verts;
    for (const auto& l : m["vertices"]) verts.push_back(id_of(l.get<std::string>()));
    std::vector<Edge> edges;
    for (const auto& pair : m["edges"]) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ContractError("edges must be two-element label arrays");
      }
      edges.push_back(make_edge(id_of(pair[0].get<std::string>()),
                                id_of(pair[1].get<std::string>())));
    }
    members.emplace_back(std::move(verts), std::move(edges));
  }
  GraphFamily family(std::move(members));
  if (family.universal_vertices().size() != labels.size()) {
    throw ContractError("some vertex labels are used by no member");
  }
  if (mode == "common" && !family.is_common_mode()) {
    throw ContractError("mode is \"common\" but some member does not span the vertex set");
  }
  if (mode == "list" && family.is_common_mode()) {
    throw ContractError("mode is \"list\" but every member spans the vertex set; use \"common\"");
  }
  return Instance(std::move(family), std::move(labels), std::move(names));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ContractError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw ContractError("write to '" + path + "' failed");
}

Instance load_instance(const std::string& path) { return parse_instance(read_text_file(path)); }

void save_instance(const Instance& inst, const std::string& path) {
  write_text_file(path, serialize_instance(inst));
}

std::string serialize_coloring(const Instance& inst, const CooperativeColoring& c) {
  json j;
  for (const auto& label : inst.labels()) {
    Vertex v = inst.vertex_of(label);
    if (!c.assigned(v)) throw ContractError("coloring misses vertex '" + label + "'");
    j[label] = c.color_of(v);
  }
  return j.dump(2) + "\n";
}

CooperativeColoring parse_coloring(const Instance& inst, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ContractError(std::string("coloring is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ContractError("coloring must be a JSON object");
  CooperativeColoring c;
  for (const auto& [label, value] : j.items()) {
    if (!value.is_number_integer()) {
      throw ContractError("coloring value for '" + label + "' must be an integer");
    }
    c.set(inst.vertex_of(label), value.get<int>());
  }
  return c;
}

std::string to_dot(const Instance& inst, const CooperativeColoring* assignment) {
  EdgeColoredMultigraph m = family_to_adapted(inst.family());
  std::ostringstream out;
  out << "graph cooperative {\n";
  out << "  node [shape=circle fontsize=10];\n";
  for (Vertex v : m.vertices()) {
    out << "  \"" << inst.label_of(v) << "\"";
    if (assignment != nullptr && assignment->color_of(v) >= 1) {
      int c = assignment->color_of(v);
      out << " [style=filled fillcolor=\"" << kDotPalette[(c - 1) % kDotPaletteSize]
          << "\" xlabel=\"" << c << "\"]";
    }
    out << ";\n";
  }
  for (const ColoredEdge& ce : m.colored_edges()) {
    out << "  \"" << inst.label_of(ce.e.u) << "\" -- \"" << inst.label_of(ce.e.v)
        << "\" [color=\"" << kDotPalette[(ce.color - 1) % kDotPaletteSize] << "\" label=\""
        << ce.color << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace coopcolor
