#pragma once

#include <string>
#include <vector>

#include "coopcolor/coloring.hpp"
#include "coopcolor/family.hpp"

namespace coopcolor {

// A family together with its external naming. Vertex id i carries label
// labels[i]; labels are required to be strictly ascending so that dense ids,
// label order, and the canonical file order all coincide.
class Instance {
 public:
  // Empty labels/names are filled with defaults (zero-padded "v000.." labels,
  // "G_1".."G_k" member names). The family's universal set must be 0..n-1.
  explicit Instance(GraphFamily family, std::vector<std::string> labels = {},
                    std::vector<std::string> member_names = {});

  const GraphFamily& family() const { return family_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::string>& member_names() const { return names_; }

  const std::string& label_of(Vertex v) const;
  Vertex vertex_of(const std::string& label) const;  // throws on unknown label

 private:
  GraphFamily family_;
  std::vector<std::string> labels_;
  std::vector<std::string> names_;
};

// Canonical text form: a JSON document with fields version, mode,
// vertex_labels, members; members in index order, vertices and edges
// lexicographically sorted. Byte-identical for equal instances.
std::string serialize_instance(const Instance& inst);
Instance parse_instance(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// Colorings as label -> index objects, keys in label order.
std::string serialize_coloring(const Instance& inst, const CooperativeColoring& c);
CooperativeColoring parse_coloring(const Instance& inst, const std::string& text);

// DOT rendering of the family's colored union; edges carry the member index
// as label and a per-index pen color. With `assignment`, vertices are filled
// with their assigned index's color.
std::string to_dot(const Instance& inst, const CooperativeColoring* assignment = nullptr);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// "v0000".."v####", width chosen from n so lexicographic = numeric order.
std::vector<std::string> default_labels(std::size_t n);

}  // namespace coopcolor
