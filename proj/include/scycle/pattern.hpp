#pragma once

#include "scycle/graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scycle {

enum class PatternKind {
    loop1,
    loop2,
    theta3,
    K3plus,
    K3pp,
    K3ppp,
    K4,
    K4plus,
    K4pp,
    K4ppp,
    W4,
    W4plus,
    W4star,
    W5,
    K33,
    K33plus,
    K5,
};

struct PatternEdge {
    int u;
    int v;
    std::string label;
};

struct PatternGraph {
    PatternKind kind;
    std::string name;
    std::vector<std::string> vertex_labels;
    std::vector<PatternEdge> edges;

    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int vertex_index(std::string_view label) const;
    int edge_index(std::string_view label) const;
    // vertex and edge ids coincide with pattern indices
    RootedGraph to_graph(bool all_roots) const;
};

const PatternGraph& pattern(PatternKind kind);
std::span<const PatternKind> all_patterns();
std::optional<PatternKind> pattern_from_name(std::string_view name);
const std::string& pattern_name(PatternKind kind);

// vertex map from a onto b preserving edge multiplicities, if one exists
std::optional<std::vector<int>> isomorphism(const RootedGraph& a, const RootedGraph& b);

}  // namespace scycle
