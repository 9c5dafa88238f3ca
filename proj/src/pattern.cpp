#include "scycle/pattern.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace scycle {

namespace {

PatternGraph make(PatternKind kind, std::string name, std::vector<std::string> vs,
                  std::vector<std::array<std::string, 3>> es)
{
    PatternGraph p{kind, std::move(name), std::move(vs), {}};
    for (auto& [label, a, b] : es)
        p.edges.push_back({p.vertex_index(a), p.vertex_index(b), label});
    return p;
}

std::vector<PatternGraph> build_catalog()
{
    using K = PatternKind;
    std::vector<PatternGraph> c;
    c.push_back(make(K::loop1, "loop1", {"v"}, {{"C", "v", "v"}}));
    c.push_back(make(K::loop2, "loop2", {"v"}, {{"C1", "v", "v"}, {"C2", "v", "v"}}));
    c.push_back(make(K::theta3, "theta3", {"w1", "w2"},
                     {{"P1", "w1", "w2"}, {"P2", "w1", "w2"}, {"P3", "w1", "w2"}}));
    c.push_back(make(K::K3plus, "K3plus", {"w", "v1", "v2"},
                     {{"A1", "w", "v1"}, {"A2", "w", "v1"}, {"B1", "w", "v2"}, {"B2", "w", "v2"}, {"C", "v1", "v2"}}));
    c.push_back(make(K::K3pp, "K3pp", {"v1", "v2", "v3"},
                     {{"P1", "v1", "v2"}, {"P2", "v1", "v2"}, {"Q1", "v2", "v3"}, {"Q2", "v2", "v3"},
                      {"R1", "v3", "v1"}, {"R2", "v3", "v1"}}));
    c.push_back(make(K::K3ppp, "K3ppp", {"v1", "v2", "v3"},
                     {{"P1", "v1", "v2"}, {"P2", "v1", "v2"}, {"P3", "v1", "v2"}, {"Q1", "v2", "v3"},
                      {"Q2", "v2", "v3"}, {"R1", "v3", "v1"}, {"R2", "v3", "v1"}}));
    c.push_back(make(K::K4, "K4", {"v1", "v2", "v3", "v4"},
                     {{"E12", "v1", "v2"}, {"E13", "v1", "v3"}, {"E14", "v1", "v4"}, {"E23", "v2", "v3"},
                      {"E24", "v2", "v4"}, {"E34", "v3", "v4"}}));
    c.push_back(make(K::K4plus, "K4plus", {"v1", "v2", "v3", "v4"},
                     {{"E12a", "v1", "v2"}, {"E12b", "v1", "v2"}, {"E13", "v1", "v3"}, {"E14", "v1", "v4"},
                      {"E23", "v2", "v3"}, {"E24", "v2", "v4"}, {"E34", "v3", "v4"}}));
    c.push_back(make(K::K4pp, "K4pp", {"v1", "v2", "v3", "v4"},
                     {{"Q1", "v1", "v2"}, {"Q2", "v2", "v3"}, {"Q3", "v3", "v1"}, {"R1_1", "v4", "v1"},
                      {"R1_2", "v4", "v1"}, {"R2_1", "v4", "v2"}, {"R2_2", "v4", "v2"}, {"R3", "v4", "v3"}}));
    c.push_back(make(K::K4ppp, "K4ppp", {"v1", "v2", "v3", "v4"},
                     {{"P1", "v1", "v2"}, {"P2", "v1", "v2"}, {"P3", "v1", "v2"}, {"Q1", "v4", "v1"},
                      {"Q2", "v4", "v2"}, {"Q3", "v4", "v3"}, {"R1", "v3", "v1"}, {"R2", "v3", "v2"}}));
    c.push_back(make(K::W4, "W4", {"w", "v1", "v2", "v3", "v4"},
                     {{"Q1", "v1", "v2"}, {"Q2", "v2", "v3"}, {"Q3", "v3", "v4"}, {"Q4", "v4", "v1"},
                      {"R1", "w", "v1"}, {"R2", "w", "v2"}, {"R3", "w", "v3"}, {"R4", "w", "v4"}}));
    c.push_back(make(K::W4plus, "W4plus", {"w", "v1", "v2", "v3", "v4"},
                     {{"P1", "v1", "w"}, {"P2", "v1", "w"}, {"Q1", "v1", "v2"}, {"Q2", "v2", "v3"},
                      {"Q3", "v3", "v4"}, {"Q4", "v4", "v1"}, {"R2", "w", "v2"}, {"R3", "w", "v3"},
                      {"R4", "w", "v4"}}));
    c.push_back(make(K::W4star, "W4star", {"v1", "v2", "v3", "w1", "w2"},
                     {{"P1", "w1", "v1"}, {"P2", "w1", "v2"}, {"P3", "w1", "v3"}, {"Q1", "w2", "v1"},
                      {"Q2", "w2", "v2"}, {"Q3", "w2", "v3"}, {"R1", "v1", "v2"}, {"R2", "v2", "v3"},
                      {"R3", "v3", "v1"}}));
    c.push_back(make(K::W5, "W5", {"w", "v1", "v2", "v3", "v4", "v5"},
                     {{"Q1", "v1", "v2"}, {"Q2", "v2", "v3"}, {"Q3", "v3", "v4"}, {"Q4", "v4", "v5"},
                      {"Q5", "v5", "v1"}, {"R1", "w", "v1"}, {"R2", "w", "v2"}, {"R3", "w", "v3"},
                      {"R4", "w", "v4"}, {"R5", "w", "v5"}}));
    std::vector<std::array<std::string, 3>> k33;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            k33.push_back({"P" + std::to_string(i) + "_" + std::to_string(j), "v" + std::to_string(i),
                           "w" + std::to_string(j)});
    std::vector<std::string> k33v{"v1", "v2", "v3", "w1", "w2", "w3"};
    c.push_back(make(K::K33, "K33", k33v, k33));
    k33.push_back({"Q", "v1", "v2"});
    c.push_back(make(K::K33plus, "K33plus", k33v, k33));
    std::vector<std::array<std::string, 3>> k5;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            k5.push_back({"E" + std::to_string(i) + std::to_string(j), "v" + std::to_string(i), "v" + std::to_string(j)});
    c.push_back(make(K::K5, "K5", {"v1", "v2", "v3", "v4", "v5"}, k5));
    return c;
}

const std::vector<PatternGraph>& catalog()
{
    static const std::vector<PatternGraph> c = build_catalog();
    return c;
}

const std::vector<PatternKind>& kinds()
{
    static const std::vector<PatternKind> k = [] {
        std::vector<PatternKind> out;
        for (const auto& p : catalog())
            out.push_back(p.kind);
        return out;
    }();
    return k;
}

}  // namespace

int PatternGraph::vertex_index(std::string_view label) const
{
    for (std::size_t i = 0; i < vertex_labels.size(); ++i)
        if (vertex_labels[i] == label)
            return static_cast<int>(i);
    throw std::invalid_argument("pattern " + name + " has no vertex " + std::string(label));
}

int PatternGraph::edge_index(std::string_view label) const
{
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].label == label)
            return static_cast<int>(i);
    throw std::invalid_argument("pattern " + name + " has no edge " + std::string(label));
}

RootedGraph PatternGraph::to_graph(bool all_roots) const
{
    RootedGraph g;
    for (const auto& l : vertex_labels) {
        VertexId v = g.add_vertex(l);
        if (all_roots)
            g.set_root(v);
    }
    for (const auto& e : edges)
        g.add_edge(e.u, e.v);
    return g;
}

const PatternGraph& pattern(PatternKind kind)
{
    return catalog()[static_cast<std::size_t>(kind)];
}

std::span<const PatternKind> all_patterns()
{
    return kinds();
}

std::optional<PatternKind> pattern_from_name(std::string_view name)
{
    for (const auto& p : catalog())
        if (p.name == name)
            return p.kind;
    return std::nullopt;
}

const std::string& pattern_name(PatternKind kind)
{
    return pattern(kind).name;
}

std::optional<std::vector<int>> isomorphism(const RootedGraph& a, const RootedGraph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    std::vector<VertexId> av = a.vertices(), bv = b.vertices();
    std::size_t n = av.size();
    auto mult = [](const RootedGraph& g, const std::vector<VertexId>& vs) {
        std::vector<std::vector<int>> m(vs.size(), std::vector<int>(vs.size(), 0));
        std::map<VertexId, std::size_t> pos;
        for (std::size_t i = 0; i < vs.size(); ++i)
            pos[vs[i]] = i;
        for (EdgeId e : g.edges()) {
            std::size_t i = pos[g.edge(e).u], j = pos[g.edge(e).v];
            ++m[i][j];
            if (i != j)
                ++m[j][i];
        }
        return m;
    };
    auto ma = mult(a, av), mb = mult(b, bv);
    auto signature = [n](const std::vector<std::vector<int>>& m, std::size_t i) {
        std::vector<int> row = m[i];
        std::sort(row.begin(), row.end());
        row.push_back(m[i][i]);
        return row;
    };
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = static_cast<int>(i);
    // perm[i] = index in b of a's i-th vertex
    std::vector<std::vector<int>> sa(n), sb(n);
    for (std::size_t i = 0; i < n; ++i) {
        sa[i] = signature(ma, i);
        sb[i] = signature(mb, i);
    }
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (sa[i] != sb[perm[i]]) {
                ok = false;
                break;
            }
            for (std::size_t j = 0; j <= i && ok; ++j)
                ok = ma[i][j] == mb[perm[i]][perm[j]];
        }
        if (ok) {
            std::vector<int> out(a.vertex_bound(), -1);
            for (std::size_t i = 0; i < n; ++i)
                out[av[i]] = bv[perm[i]];
            return out;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace scycle
