#pragma once

#include "scycle/graph.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace scycle {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

struct PackingCertificate {
    std::vector<Cycle> cycles;
};

struct HittingCertificate {
    std::vector<VertexId> vertices;
};

using Certificate = std::variant<PackingCertificate, HittingCertificate>;

struct Verdict {
    bool ok = true;
    std::string diagnostic;
    explicit operator bool() const { return ok; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

bool has_s_cycle(const GraphView& view);
bool has_s_cycle(const RootedGraph& g);

// shortest S-cycle; ties go to the smallest root, then the smallest first edge
std::optional<Cycle> find_s_cycle(const GraphView& view);
std::optional<Cycle> find_s_cycle(const RootedGraph& g);

struct CycleEnumeration {
    std::vector<Cycle> cycles;
    bool complete = true;
};

// each S-cycle once, starting at its smallest vertex
CycleEnumeration enumerate_s_cycles(const GraphView& view, std::size_t limit);
CycleEnumeration enumerate_s_cycles(const RootedGraph& g, std::size_t limit);

// two vertex-disjoint S-cycles inside the view, by exhaustive search
std::optional<PackingCertificate> find_disjoint_pair(const GraphView& view, std::size_t budget = kDefaultBudget);

struct MuResult {
    int value = 0;
    PackingCertificate packing;
};

MuResult mu_exact(const RootedGraph& g, int cap, std::size_t budget = kDefaultBudget);

struct TauResult {
    std::optional<int> value;  // empty when every set of size <= bound fails
    HittingCertificate hitting;
};

TauResult tau_exact(const RootedGraph& g, int bound);

// vertices lying on some S-cycle
std::vector<VertexId> s_cycle_vertices(const GraphView& view);

Verdict verify_certificate(const RootedGraph& g, const Certificate& c);

}  // namespace scycle
