#include "scycle/instances.hpp"

#include "scycle/errors.hpp"

#include <random>

namespace scycle {

RootedGraph figure2()
{
    RootedGraph g;
    for (const char* v : {"v1", "v2", "v3", "a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "c1", "c2", "c3", "c4",
                          "x1", "x2", "y1", "y2", "z1", "z2"})
        g.add_vertex(v);
    const std::vector<std::vector<const char*>> paths = {
        {"v1", "a3", "z2", "c2", "v3"}, {"v1", "a4", "z1", "c1", "v3"}, {"a4", "a2"}, {"a3", "a1"},
        {"v2", "b2", "y2", "c3", "v3"}, {"v2", "b1", "y1", "c4", "v3"}, {"b1", "b3"}, {"b2", "b4"},
        {"v2", "b3", "x2", "a2", "v1"}, {"v2", "b4", "x1", "a1", "v1"}, {"c1", "c3"}, {"c2", "c4"},
    };
    for (const auto& p : paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            g.add_edge(g.at(p[i]), g.at(p[i + 1]));
    for (const char* r : {"x1", "x2", "y1", "y2", "z1", "z2"})
        g.set_root(g.at(r));
    return g;
}

RootedGraph k5()
{
    RootedGraph g = pattern(PatternKind::K5).to_graph(true);
    return g;
}

PatternInstance pattern_instance(PatternKind kind, const std::vector<int>& lengths,
                                 const std::vector<std::string>& roots)
{
    const PatternGraph& h = pattern(kind);
    if (!lengths.empty() && static_cast<int>(lengths.size()) != h.edge_count())
        throw ContractError("pattern " + h.name + " needs " + std::to_string(h.edge_count()) + " lengths");
    PatternInstance out;
    RootedGraph& g = out.graph;
    out.model.kind = kind;
    for (const auto& l : h.vertex_labels)
        out.model.branch.push_back(g.add_vertex(l));
    for (int i = 0; i < h.edge_count(); ++i) {
        const PatternEdge& pe = h.edges[i];
        int len = lengths.empty() ? 1 : lengths[i];
        if (len < 1)
            throw ContractError("certifying path lengths must be at least 1");
        Path p{{out.model.branch[pe.u]}, {}};
        for (int k = 1; k < len; ++k) {
            VertexId x = g.add_vertex(pe.label + "." + std::to_string(k));
            p.edges.push_back(g.add_edge(p.back(), x));
            p.vertices.push_back(x);
        }
        p.edges.push_back(g.add_edge(p.back(), out.model.branch[pe.v]));
        p.vertices.push_back(out.model.branch[pe.v]);
        out.model.paths.push_back(p);
    }
    for (const auto& r : roots) {
        auto v = g.find(r);
        if (!v)
            throw ContractError("unknown root vertex " + r);
        g.set_root(*v);
    }
    if (auto c = rootless_cycle(g, Subgraph::whole(g))) {
        std::string names;
        for (VertexId v : c->vertices)
            names += (names.empty() ? "" : " ") + g.name(v);
        throw ContractError("root placement leaves a cycle without roots: " + names);
    }
    return out;
}

RootedGraph random_instance(const RandomSpec& spec)
{
    std::mt19937_64 rng(spec.seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto coin = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };
    RootedGraph g;
    for (int i = 0; i < spec.n; ++i)
        g.add_vertex("v" + std::to_string(i));
    if (spec.n == 0)
        return g;
    std::vector<Edge> made;
    for (int i = 0; i < spec.m; ++i) {
        if (coin(spec.p_loop)) {
            VertexId v = uniform(0, spec.n - 1);
            g.add_edge(v, v);
            made.push_back({v, v});
        } else if (!made.empty() && coin(spec.p_par)) {
            Edge e = made[uniform(0, static_cast<int>(made.size()) - 1)];
            g.add_edge(e.u, e.v);
            made.push_back(e);
        } else if (spec.n >= 2) {
            VertexId u = uniform(0, spec.n - 1), v = uniform(0, spec.n - 2);
            if (v >= u)
                ++v;
            g.add_edge(u, v);
            made.push_back({u, v});
        }
    }
    for (int i = 0; i < spec.n; ++i)
        if (coin(spec.root_density))
            g.set_root(i);
    return g;
}

RandomSpec stress_spec(std::uint64_t seed, int max_n)
{
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 17);
    RandomSpec s;
    s.seed = seed;
    s.n = std::uniform_int_distribution<int>(std::min(2, max_n), max_n)(rng);
    int hi = std::min(20, 2 * s.n + 2);
    s.m = std::uniform_int_distribution<int>(std::min(s.n, hi), hi)(rng);
    s.root_density = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    return s;
}

RootedGraph structured_instance(std::uint64_t seed, int extra_max)
{
    std::mt19937_64 rng(seed * 0xbf58476d1ce4e5b9ULL + 3);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto coin = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };
    auto kinds = all_patterns();
    PatternKind kind = kinds[uniform(0, static_cast<int>(kinds.size()) - 1)];
    std::vector<int> lengths;
    for (int i = 0; i < pattern(kind).edge_count(); ++i)
        lengths.push_back(uniform(1, 3));
    std::vector<std::string> all;
    for (const auto& l : pattern(kind).vertex_labels)
        all.push_back(l);
    RootedGraph g = pattern_instance(kind, lengths, all).graph;
    for (VertexId v : g.vertices())
        g.set_root(v, false);
    double density = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
    for (VertexId v : g.vertices())
        if (coin(density))
            g.set_root(v);
    while (auto c = rootless_cycle(g, Subgraph::whole(g)))
        g.set_root(c->vertices[uniform(0, static_cast<int>(c->vertices.size()) - 1)]);
    int extra = uniform(0, extra_max);
    for (int i = 0; i < extra; ++i) {
        std::vector<VertexId> vs = g.vertices();
        VertexId a = vs[uniform(0, static_cast<int>(vs.size()) - 1)];
        VertexId b = vs[uniform(0, static_cast<int>(vs.size()) - 1)];
        if (coin(0.5)) {
            VertexId x = g.add_vertex("x" + std::to_string(i));
            if (coin(0.5))
                g.set_root(x);
            g.add_edge(a, x);
            g.add_edge(x, b);
        } else {
            g.add_edge(a, b);
        }
    }
    return g;
}

}  // namespace scycle
