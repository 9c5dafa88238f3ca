#include "scycle/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace scycle {

VertexId RootedGraph::add_vertex(std::string name)
{
    if (by_name_.count(name))
        throw std::invalid_argument("duplicate vertex name " + name);
    VertexId v;
    if (!free_.empty()) {
        auto it = std::min_element(free_.begin(), free_.end());
        v = *it;
        free_.erase(it);
        names_[v] = name;
        alive_[v] = 1;
        root_[v] = 0;
        adj_[v].clear();
    } else {
        v = static_cast<VertexId>(names_.size());
        names_.push_back(name);
        alive_.push_back(1);
        root_.push_back(0);
        adj_.emplace_back();
    }
    by_name_.emplace(std::move(name), v);
    ++vertex_count_;
    return v;
}

void RootedGraph::check_vertex(VertexId v) const
{
    if (!has_vertex(v))
        throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

EdgeId RootedGraph::add_edge(VertexId u, VertexId v)
{
    check_vertex(u);
    check_vertex(v);
    auto e = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    edge_alive_.push_back(1);
    adj_[u].push_back(e);
    if (u != v)
        adj_[v].push_back(e);
    ++edge_count_;
    return e;
}

void RootedGraph::set_root(VertexId v, bool root)
{
    check_vertex(v);
    root_[v] = root ? 1 : 0;
}

bool RootedGraph::has_vertex(VertexId v) const
{
    return v >= 0 && static_cast<std::size_t>(v) < alive_.size() && alive_[v];
}

bool RootedGraph::has_edge(EdgeId e) const
{
    return e >= 0 && static_cast<std::size_t>(e) < edge_alive_.size() && edge_alive_[e];
}

std::vector<VertexId> RootedGraph::vertices() const
{
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < alive_.size(); ++i)
        if (alive_[i])
            out.push_back(static_cast<VertexId>(i));
    return out;
}

std::vector<EdgeId> RootedGraph::edges() const
{
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < edge_alive_.size(); ++i)
        if (edge_alive_[i])
            out.push_back(static_cast<EdgeId>(i));
    return out;
}

std::vector<VertexId> RootedGraph::roots() const
{
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < alive_.size(); ++i)
        if (alive_[i] && root_[i])
            out.push_back(static_cast<VertexId>(i));
    return out;
}

std::optional<VertexId> RootedGraph::find(std::string_view name) const
{
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

VertexId RootedGraph::at(std::string_view name) const
{
    auto v = find(name);
    if (!v)
        throw std::invalid_argument("unknown vertex " + std::string(name));
    return *v;
}

std::vector<EdgeId> RootedGraph::edges_between(VertexId u, VertexId v) const
{
    std::vector<EdgeId> out;
    if (!has_vertex(u) || !has_vertex(v))
        return out;
    for (EdgeId e : adj_[u]) {
        const Edge& ed = edges_[e];
        if (ed.other(u) == v && (u != v || ed.is_loop()))
            out.push_back(e);
    }
    return out;
}

void RootedGraph::remove_vertex(VertexId v)
{
    check_vertex(v);
    for (EdgeId e : adj_[v]) {
        if (!edge_alive_[e])
            continue;
        edge_alive_[e] = 0;
        --edge_count_;
        VertexId w = edges_[e].other(v);
        if (w != v) {
            auto& wa = adj_[w];
            wa.erase(std::remove(wa.begin(), wa.end(), e), wa.end());
        }
    }
    adj_[v].clear();
    alive_[v] = 0;
    root_[v] = 0;
    by_name_.erase(names_[v]);
    free_.push_back(v);
    --vertex_count_;
}

Path Path::reversed() const
{
    Path p{{vertices.rbegin(), vertices.rend()}, {edges.rbegin(), edges.rend()}};
    return p;
}

Path Path::slice(std::size_t from, std::size_t to) const
{
    Path p;
    if (from <= to) {
        p.vertices.assign(vertices.begin() + from, vertices.begin() + to + 1);
        p.edges.assign(edges.begin() + from, edges.begin() + to);
    } else {
        p = slice(to, from).reversed();
    }
    return p;
}

Path Path::joined(const Path& tail) const
{
    Path p = *this;
    p.vertices.insert(p.vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
    p.edges.insert(p.edges.end(), tail.edges.begin(), tail.edges.end());
    return p;
}

std::optional<std::size_t> Path::position(VertexId v) const
{
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

bool Cycle::contains(VertexId v) const
{
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Cycle close_path(const Path& p, EdgeId closing)
{
    Cycle c{p.vertices, p.edges};
    c.edges.push_back(closing);
    return c;
}

Cycle closed_path_to_cycle(const Path& p)
{
    Cycle c{p.vertices, p.edges};
    c.vertices.pop_back();
    return c;
}

Subgraph Subgraph::empty_of(const RootedGraph& g)
{
    return {std::vector<char>(g.vertex_bound(), 0), std::vector<char>(g.edge_bound(), 0)};
}

Subgraph Subgraph::whole(const RootedGraph& g)
{
    Subgraph s = empty_of(g);
    for (VertexId v : g.vertices())
        s.vertex[v] = 1;
    for (EdgeId e : g.edges())
        s.edge[e] = 1;
    return s;
}

void Subgraph::add_path(const Path& p)
{
    for (VertexId v : p.vertices)
        vertex[v] = 1;
    for (EdgeId e : p.edges)
        edge[e] = 1;
}

void Subgraph::add_cycle(const Cycle& c)
{
    for (VertexId v : c.vertices)
        vertex[v] = 1;
    for (EdgeId e : c.edges)
        edge[e] = 1;
}

std::vector<VertexId> Subgraph::vertices() const
{
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < vertex.size(); ++i)
        if (vertex[i])
            out.push_back(static_cast<VertexId>(i));
    return out;
}

std::vector<EdgeId> Subgraph::edges() const
{
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < edge.size(); ++i)
        if (edge[i])
            out.push_back(static_cast<EdgeId>(i));
    return out;
}

VertexMask mask_of(const RootedGraph& g, std::span<const VertexId> vs)
{
    VertexMask m(g.vertex_bound(), 0);
    for (VertexId v : vs) {
        if (!g.has_vertex(v))
            throw std::invalid_argument("unknown vertex id " + std::to_string(v));
        m[v] = 1;
    }
    return m;
}

RootedGraph delete_vertices(const RootedGraph& g, std::span<const VertexId> xs)
{
    for (VertexId x : xs)
        if (!g.has_vertex(x))
            throw std::invalid_argument("unknown vertex id " + std::to_string(x));
    RootedGraph h = g;
    for (VertexId x : xs)
        if (h.has_vertex(x))
            h.remove_vertex(x);
    return h;
}

namespace {

struct BlockFinder {
    const GraphView& view;
    std::vector<int> disc, low;
    std::vector<EdgeId> stack;
    std::vector<Block> out;
    int clock = 0;

    void emit_until(EdgeId e)
    {
        Block b;
        while (true) {
            EdgeId f = stack.back();
            stack.pop_back();
            b.edges.push_back(f);
            b.vertices.push_back(view.g.edge(f).u);
            b.vertices.push_back(view.g.edge(f).v);
            if (f == e)
                break;
        }
        out.push_back(std::move(b));
    }

    void dfs(VertexId u, EdgeId parent)
    {
        disc[u] = low[u] = clock++;
        for (EdgeId e : view.g.incident(u)) {
            if (e == parent || !view.edge_ok(e))
                continue;
            const Edge& ed = view.g.edge(e);
            if (ed.is_loop())
                continue;
            VertexId w = ed.other(u);
            if (disc[w] < 0) {
                stack.push_back(e);
                dfs(w, e);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u])
                    emit_until(e);
            } else if (disc[w] < disc[u]) {
                stack.push_back(e);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    }
};

}  // namespace

std::vector<Block> blocks(const GraphView& view)
{
    const RootedGraph& g = view.g;
    BlockFinder bf{view, std::vector<int>(g.vertex_bound(), -1), std::vector<int>(g.vertex_bound(), -1), {}, {}};
    for (VertexId v : g.vertices()) {
        if (!view.vertex_ok(v))
            continue;
        bool lonely = true;
        for (EdgeId e : g.incident(v)) {
            if (!view.edge_ok(e))
                continue;
            lonely = false;
            if (g.edge(e).is_loop())
                bf.out.push_back({{v}, {e}});
        }
        if (lonely)
            bf.out.push_back({{v}, {}});
        else if (bf.disc[v] < 0)
            bf.dfs(v, -1);
    }
    for (Block& b : bf.out) {
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        std::sort(b.edges.begin(), b.edges.end());
    }
    std::sort(bf.out.begin(), bf.out.end(), [](const Block& a, const Block& b) {
        if (a.edges.empty() != b.edges.empty())
            return b.edges.empty();
        if (a.edges.empty())
            return a.vertices < b.vertices;
        return a.edges.front() < b.edges.front();
    });
    // a vertex whose only edges are loops also gets no singleton block above; nothing else to do
    return bf.out;
}

std::vector<Block> blocks(const RootedGraph& g)
{
    return blocks(GraphView{g});
}

std::optional<Path> shortest_path(const GraphView& view, VertexId u, VertexId v, EdgeId skip_edge)
{
    const RootedGraph& g = view.g;
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw std::invalid_argument("unknown vertex id");
    if (!view.vertex_ok(u) || !view.vertex_ok(v))
        return std::nullopt;
    std::vector<int> dist(g.vertex_bound(), -1);
    std::deque<VertexId> queue{v};
    dist[v] = 0;
    while (!queue.empty() && dist[u] < 0) {
        VertexId x = queue.front();
        queue.pop_front();
        for (EdgeId e : g.incident(x)) {
            if (e == skip_edge || !view.edge_ok(e))
                continue;
            VertexId y = g.edge(e).other(x);
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    if (dist[u] < 0)
        return std::nullopt;
    Path p{{u}, {}};
    VertexId cur = u;
    while (cur != v) {
        VertexId best = -1;
        EdgeId best_edge = -1;
        for (EdgeId e : g.incident(cur)) {
            if (e == skip_edge || !view.edge_ok(e))
                continue;
            VertexId y = g.edge(e).other(cur);
            if (dist[y] != dist[cur] - 1)
                continue;
            if (best < 0 || y < best || (y == best && e < best_edge)) {
                best = y;
                best_edge = e;
            }
        }
        p.vertices.push_back(best);
        p.edges.push_back(best_edge);
        cur = best;
    }
    return p;
}

std::optional<Path> shortest_path(const RootedGraph& g, VertexId u, VertexId v, std::span<const VertexId> forbidden)
{
    VertexMask m = mask_of(g, forbidden);
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw std::invalid_argument("unknown vertex id");
    if (m[u] || m[v])
        throw std::invalid_argument("path endpoint is forbidden");
    return shortest_path(GraphView{g, &m}, u, v);
}

std::vector<int> components(const GraphView& view)
{
    const RootedGraph& g = view.g;
    std::vector<int> comp(g.vertex_bound(), -1);
    int next = 0;
    for (VertexId s : g.vertices()) {
        if (!view.vertex_ok(s) || comp[s] >= 0)
            continue;
        comp[s] = next;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(x)) {
                if (!view.edge_ok(e))
                    continue;
                VertexId y = g.edge(e).other(x);
                if (comp[y] < 0) {
                    comp[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return comp;
}

std::optional<Cycle> find_cycle(const GraphView& view)
{
    const RootedGraph& g = view.g;
    std::vector<int> parent(g.vertex_bound());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> forest(g.edge_bound(), 0);
    for (EdgeId e : g.edges()) {
        if (!view.edge_ok(e))
            continue;
        const Edge& ed = g.edge(e);
        if (ed.is_loop())
            return Cycle{{ed.u}, {e}};
        int a = root(ed.u), b = root(ed.v);
        if (a != b) {
            parent[a] = b;
            forest[e] = 1;
            continue;
        }
        GraphView fv{g, view.blocked, &forest};
        auto p = shortest_path(fv, ed.v, ed.u);
        return close_path(*p, e);
    }
    return std::nullopt;
}

bool is_valid_path(const RootedGraph& g, const Path& p)
{
    if (p.vertices.empty() || p.edges.size() + 1 != p.vertices.size())
        return false;
    std::vector<VertexId> vs = p.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        return false;
    std::vector<EdgeId> es = p.edges;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
        return false;
    for (VertexId v : p.vertices)
        if (!g.has_vertex(v))
            return false;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        EdgeId e = p.edges[i];
        if (!g.has_edge(e))
            return false;
        const Edge& ed = g.edge(e);
        if (ed.is_loop() || ed.other(p.vertices[i]) != p.vertices[i + 1] || ed.other(p.vertices[i + 1]) != p.vertices[i])
            return false;
    }
    return true;
}

bool is_valid_cycle(const RootedGraph& g, const Cycle& c)
{
    std::size_t k = c.vertices.size();
    if (k == 0 || c.edges.size() != k)
        return false;
    std::vector<VertexId> vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        return false;
    std::vector<EdgeId> es = c.edges;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
        return false;
    for (VertexId v : c.vertices)
        if (!g.has_vertex(v))
            return false;
    for (std::size_t i = 0; i < k; ++i) {
        EdgeId e = c.edges[i];
        if (!g.has_edge(e))
            return false;
        const Edge& ed = g.edge(e);
        VertexId a = c.vertices[i], b = c.vertices[(i + 1) % k];
        if (k == 1) {
            if (!ed.is_loop() || ed.u != a)
                return false;
        } else if (ed.is_loop() || ed.other(a) != b || ed.other(b) != a) {
            return false;
        }
    }
    return true;
}

}  // namespace scycle
