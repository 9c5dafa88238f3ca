#pragma once

#include "scycle/cycle_oracle.hpp"
#include "scycle/pattern.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace scycle {

// The structure the caller assumed (no two disjoint S-cycles) is not there.
// Carries the disjoint pair when one was found on the way.
struct StructureViolation : std::runtime_error {
    StructureViolation(const std::string& what, std::optional<PackingCertificate> pair = std::nullopt)
        : std::runtime_error(what), packing(std::move(pair))
    {
    }
    std::optional<PackingCertificate> packing;
};

struct SubdivisionModel {
    PatternKind kind = PatternKind::loop1;
    std::vector<VertexId> branch;  // per pattern vertex
    std::vector<Path> paths;       // per pattern edge, from branch[e.u] to branch[e.v]

    const PatternGraph& pattern() const { return scycle::pattern(kind); }
    VertexId vertex(std::string_view label) const { return branch[pattern().vertex_index(label)]; }
    const Path& path(std::string_view label) const { return paths[pattern().edge_index(label)]; }
    Subgraph union_subgraph(const RootedGraph& g) const;
};

Verdict validate_model(const RootedGraph& g, const SubdivisionModel& m);

bool is_s_cycle_subgraph(const RootedGraph& g, const Subgraph& w);
// a cycle of w avoiding all roots
std::optional<Cycle> rootless_cycle(const RootedGraph& g, const Subgraph& w);

struct MidDecomposition {
    Path mid;  // no vertices when the interior carries no root
    std::optional<std::pair<VertexId, VertexId>> gates;
    Path tail_front;  // component of P - V(mid) holding P.front()
    Path tail_back;   // runs from P.back() towards the middle
    bool empty() const { return mid.vertices.empty(); }
};

MidDecomposition mid_decompose(const Path& p, const RootedGraph& g);
MidDecomposition mid_decompose(const Path& p, std::span<const VertexId> roots);

// shortest W-path from F1 to F2 avoiding blocked vertices; ties by vertex sequence
std::optional<Path> find_w_path(const RootedGraph& g, const Subgraph& w, std::span<const VertexId> f1,
                                std::span<const VertexId> f2, const VertexMask* blocked = nullptr);

// shortest W-path from F1 to F2 that keeps W an S-cycle subgraph
std::optional<Path> find_w_extension(const RootedGraph& g, const Subgraph& w, std::span<const VertexId> f1,
                                     std::span<const VertexId> f2, const VertexMask* blocked = nullptr);

std::vector<VertexId> small_hitting_set(const RootedGraph& g, const SubdivisionModel& m);

struct OneVertexContact {
    VertexId vertex;
};
struct Extension {
    Path path;
};
using ExtensionResult = std::variant<OneVertexContact, Extension>;

ExtensionResult find_extension(const RootedGraph& g, const Subgraph& w, std::span<const VertexId> t, const Cycle& c);
ExtensionResult find_extension(const RootedGraph& g, const SubdivisionModel& m, std::span<const VertexId> t,
                               const Cycle& c);

std::optional<PackingCertificate> two_disjoint_from_chord(const RootedGraph& g, const Subgraph& w, const Cycle& c,
                                                          const Path& p);

bool is_nice(const PatternGraph& h);

// Rebuilds W plus X as a model of the first target pattern it subdivides, dropping
// at most three certifying paths. Throws StructureViolation (with the pair when
// W plus X has two disjoint S-cycles) if no target fits.
SubdivisionModel find_pattern_upgrade(const RootedGraph& g, const SubdivisionModel& m, const Path& x,
                                      std::span<const PatternKind> targets);

// where a vertex of the union sits: a branch vertex, or inside a certifying path
struct ModelLocation {
    int branch = -1;
    int path = -1;
    std::size_t position = 0;
};
std::optional<ModelLocation> locate(const SubdivisionModel& m, VertexId v);

}  // namespace scycle
