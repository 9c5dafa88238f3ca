// Slow reference answers computed straight from the definitions: a cycle is an
// edge set in which every touched vertex has degree two and which is connected.
#pragma once

#include "scycle/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace brute {

using scycle::EdgeId;
using scycle::RootedGraph;
using scycle::VertexId;

struct Cyc {
    std::vector<EdgeId> edges;
    std::set<VertexId> vertices;
};

inline std::vector<Cyc> all_cycles(const RootedGraph& g)
{
    std::vector<EdgeId> es = g.edges();
    std::size_t m = es.size();
    std::vector<Cyc> out;
    for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
        std::vector<int> deg(g.vertex_bound(), 0);
        std::vector<int> parent(g.vertex_bound());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x];
            return x;
        };
        Cyc c;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) {
                auto ed = g.edge(es[i]);
                deg[ed.u] += 1;
                deg[ed.v] += 1;
                parent[find(ed.u)] = find(ed.v);
                c.edges.push_back(es[i]);
                c.vertices.insert(ed.u);
                c.vertices.insert(ed.v);
            }
        bool ok = true;
        int comps = 0;
        for (VertexId v : c.vertices) {
            ok = ok && deg[v] == 2;
            comps += find(v) == v;
        }
        if (ok && comps == 1)
            out.push_back(c);
    }
    return out;
}

inline bool rooted(const RootedGraph& g, const Cyc& c)
{
    return std::any_of(c.vertices.begin(), c.vertices.end(), [&](VertexId v) { return g.is_root(v); });
}

inline std::vector<Cyc> s_cycles(const RootedGraph& g)
{
    std::vector<Cyc> out;
    for (auto& c : all_cycles(g))
        if (rooted(g, c))
            out.push_back(c);
    return out;
}

inline bool disjoint(const Cyc& a, const Cyc& b)
{
    for (VertexId v : a.vertices)
        if (b.vertices.count(v))
            return false;
    return true;
}

// min(mu, 2)
inline int mu2(const RootedGraph& g)
{
    auto cs = s_cycles(g);
    if (cs.empty())
        return 0;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (disjoint(cs[i], cs[j]))
                return 2;
    return 1;
}

inline bool hits(const std::vector<Cyc>& cs, const std::vector<VertexId>& t)
{
    for (const auto& c : cs)
        if (std::none_of(t.begin(), t.end(), [&](VertexId v) { return c.vertices.count(v); }))
            return false;
    return true;
}

// smallest hitting set size over all vertices, or -1 above bound
inline int tau(const RootedGraph& g, int bound)
{
    auto cs = s_cycles(g);
    std::vector<VertexId> vs = g.vertices();
    int n = static_cast<int>(vs.size());
    for (int k = 0; k <= std::min(bound, n); ++k) {
        std::vector<char> pick(n, 0);
        std::fill(pick.end() - k, pick.end(), 1);
        do {
            std::vector<VertexId> t;
            for (int i = 0; i < n; ++i)
                if (pick[i])
                    t.push_back(vs[i]);
            if (hits(cs, t))
                return k;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return -1;
}

// small random multigraph with loops and parallel edges, at most max_m edges
inline RootedGraph random_graph(std::mt19937_64& rng, int max_n, int max_m)
{
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    RootedGraph g;
    int n = uni(1, max_n);
    for (int i = 0; i < n; ++i)
        g.add_vertex("n" + std::to_string(i));
    int m = uni(0, max_m);
    for (int i = 0; i < m; ++i) {
        int r = uni(0, 19);
        VertexId u = uni(0, n - 1), v = uni(0, n - 1);
        if (r == 0)
            v = u;
        else if (u == v)
            continue;
        g.add_edge(u, v);
    }
    for (int i = 0; i < n; ++i)
        if (uni(0, 2) == 0)
            g.set_root(i);
    return g;
}

}  // namespace brute
