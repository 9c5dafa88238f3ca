#include "scycle/subdivision.hpp"

#include "scycle/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace scycle {

Subgraph SubdivisionModel::union_subgraph(const RootedGraph& g) const
{
    Subgraph s = Subgraph::empty_of(g);
    for (VertexId b : branch)
        s.vertex[b] = 1;
    for (const Path& p : paths)
        s.add_path(p);
    return s;
}

std::optional<Cycle> rootless_cycle(const RootedGraph& g, const Subgraph& w)
{
    VertexMask blocked(g.vertex_bound(), 0);
    for (VertexId v : g.vertices())
        if (!w.has_vertex(v) || g.is_root(v))
            blocked[v] = 1;
    return find_cycle(GraphView{g, &blocked, &w.edge});
}

bool is_s_cycle_subgraph(const RootedGraph& g, const Subgraph& w)
{
    return !rootless_cycle(g, w);
}

Verdict validate_model(const RootedGraph& g, const SubdivisionModel& m)
{
    const PatternGraph& h = m.pattern();
    if (static_cast<int>(m.branch.size()) != h.vertex_count() || static_cast<int>(m.paths.size()) != h.edge_count())
        return Verdict::fail("model size does not match pattern " + h.name);
    std::vector<int> owner(g.vertex_bound(), -2);  // -1 branch, >= 0 interior of path i
    for (VertexId b : m.branch) {
        if (!g.has_vertex(b))
            return Verdict::fail("unknown branch vertex");
        if (owner[b] != -2)
            return Verdict::fail("branch vertex " + g.name(b) + " used twice");
        owner[b] = -1;
    }
    std::vector<char> used(g.edge_bound(), 0);
    for (std::size_t i = 0; i < m.paths.size(); ++i) {
        const Path& p = m.paths[i];
        const PatternEdge& pe = h.edges[i];
        std::string tag = "certifying path " + pe.label;
        if (p.vertices.size() < 2 || p.front() != m.branch[pe.u] || p.back() != m.branch[pe.v])
            return Verdict::fail(tag + " has wrong endpoints");
        bool ok = pe.u == pe.v ? is_valid_cycle(g, closed_path_to_cycle(p)) : is_valid_path(g, p);
        if (!ok)
            return Verdict::fail(tag + " is not a path of the graph");
        for (std::size_t k = 1; k + 1 < p.vertices.size(); ++k) {
            VertexId v = p.vertices[k];
            if (owner[v] != -2)
                return Verdict::fail(tag + " meets another path at " + g.name(v));
            owner[v] = static_cast<int>(i);
        }
        for (EdgeId e : p.edges) {
            if (used[e])
                return Verdict::fail(tag + " reuses an edge");
            used[e] = 1;
        }
    }
    if (auto c = rootless_cycle(g, m.union_subgraph(g)))
        return Verdict::fail("union has a cycle without roots");
    return {};
}

MidDecomposition mid_decompose(const Path& p, std::span<const VertexId> roots)
{
    if (p.vertices.size() < 2)
        throw ContractError("mid_decompose needs a path with at least two vertices");
    std::set<VertexId> rs(roots.begin(), roots.end());
    std::size_t n = p.vertices.size();
    std::optional<std::size_t> first, last;
    for (std::size_t k = 1; k + 1 < n; ++k)
        if (rs.count(p.vertices[k])) {
            if (!first)
                first = k;
            last = k;
        }
    MidDecomposition d;
    if (!first) {
        d.tail_front = p;
        d.tail_back = p.reversed();
        return d;
    }
    d.mid = p.slice(*first, *last);
    d.gates = std::make_pair(p.vertices[*first], p.vertices[*last]);
    d.tail_front = p.slice(0, *first - 1);
    d.tail_back = p.slice(n - 1, *last + 1);
    return d;
}

MidDecomposition mid_decompose(const Path& p, const RootedGraph& g)
{
    return mid_decompose(p, g.roots());
}

namespace {

bool usable(const RootedGraph& g, const VertexMask* blocked, VertexId v)
{
    return g.has_vertex(v) && !(blocked && (*blocked)[v]);
}

}  // namespace

std::optional<Path> find_w_path(const RootedGraph& g, const Subgraph& w, std::span<const VertexId> f1,
                                std::span<const VertexId> f2, const VertexMask* blocked)
{
    std::vector<VertexId> starts(f1.begin(), f1.end());
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    std::vector<char> target(g.vertex_bound(), 0);
    for (VertexId y : f2)
        if (w.has_vertex(y) && usable(g, blocked, y))
            target[y] = 1;
    auto interior = [&](VertexId u) { return !w.has_vertex(u) && usable(g, blocked, u); };

    std::optional<Path> best;
    for (VertexId x : starts) {
        if (!w.has_vertex(x) || !usable(g, blocked, x))
            continue;
        // dist[u]: edges from interior u to a target other than x
        std::vector<int> dist(g.vertex_bound(), -1);
        std::deque<VertexId> queue;
        for (VertexId y = 0; y < static_cast<VertexId>(g.vertex_bound()); ++y) {
            if (!target[y] || y == x)
                continue;
            for (EdgeId e : g.incident(y)) {
                VertexId u = g.edge(e).other(y);
                if (interior(u) && dist[u] < 0) {
                    dist[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (EdgeId e : g.incident(u)) {
                VertexId z = g.edge(e).other(u);
                if (interior(z) && dist[z] < 0) {
                    dist[z] = dist[u] + 1;
                    queue.push_back(z);
                }
            }
        }
        int len = -1;
        for (EdgeId e : g.incident(x)) {
            if (w.has_edge(e) || g.edge(e).is_loop())
                continue;
            VertexId u = g.edge(e).other(x);
            int l = -1;
            if (target[u] && u != x)
                l = 1;
            else if (interior(u) && dist[u] > 0)
                l = dist[u] + 1;
            if (l > 0 && (len < 0 || l < len))
                len = l;
        }
        if (len < 0 || (best && static_cast<int>(best->length()) < len))
            continue;
        Path p{{x}, {}};
        VertexId cur = x;
        int remaining = len;
        while (remaining > 0) {
            VertexId nb = -1;
            EdgeId ne = -1;
            for (EdgeId e : g.incident(cur)) {
                if (g.edge(e).is_loop() || (cur == x && w.has_edge(e)))
                    continue;
                VertexId u = g.edge(e).other(cur);
                bool fits = remaining == 1 ? (target[u] && u != x) : (interior(u) && dist[u] == remaining - 1);
                if (fits && (nb < 0 || u < nb || (u == nb && e < ne))) {
                    nb = u;
                    ne = e;
                }
            }
            p.vertices.push_back(nb);
            p.edges.push_back(ne);
            cur = nb;
            --remaining;
        }
        if (!best || p.length() < best->length() || (p.length() == best->length() && p.vertices < best->vertices))
            best = p;
    }
    return best;
}

std::optional<Path> find_w_extension(const RootedGraph& g, const Subgraph& w, std::span<const VertexId> f1,
                                     std::span<const VertexId> f2, const VertexMask* blocked)
{
    VertexMask off(g.vertex_bound(), 0);
    for (VertexId v : g.vertices())
        if (!w.has_vertex(v) || g.is_root(v))
            off[v] = 1;
    std::vector<int> comp = components(GraphView{g, &off, &w.edge});
    std::vector<char> target(g.vertex_bound(), 0);
    for (VertexId y : f2)
        if (w.has_vertex(y) && usable(g, blocked, y))
            target[y] = 1;
    auto interior = [&](VertexId u) { return !w.has_vertex(u) && usable(g, blocked, u); };
    std::vector<VertexId> starts(f1.begin(), f1.end());
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

    std::optional<Path> best;
    for (VertexId x : starts) {
        if (!w.has_vertex(x) || !usable(g, blocked, x))
            continue;
        auto good_end = [&](VertexId y, bool flag) {
            return target[y] && y != x && (flag || g.is_root(y) || comp[x] != comp[y]);
        };
        // states: vertex * 2 + carries-root
        std::size_t n = g.vertex_bound();
        std::vector<int> seen(2 * n, 0);
        std::vector<std::pair<int, EdgeId>> parent(2 * n, {-1, -1});
        std::deque<int> queue;
        int s0 = x * 2 + (g.is_root(x) ? 1 : 0);
        seen[s0] = 1;
        queue.push_back(s0);
        std::optional<Path> found;
        while (!queue.empty() && !found) {
            int s = queue.front();
            queue.pop_front();
            VertexId cur = s / 2;
            bool flag = s % 2;
            for (EdgeId e : g.incident(cur)) {
                if (g.edge(e).is_loop() || (cur == x && w.has_edge(e)))
                    continue;
                VertexId u = g.edge(e).other(cur);
                if (good_end(u, flag)) {
                    Path p{{u}, {e}};
                    for (int t = s; t != s0; t = parent[t].first) {
                        p.vertices.push_back(t / 2);
                        p.edges.push_back(parent[t].second);
                    }
                    p.vertices.push_back(x);
                    found = p.reversed();
                    break;
                }
                if (!interior(u))
                    continue;
                int t = u * 2 + ((flag || g.is_root(u)) ? 1 : 0);
                if (!seen[t]) {
                    seen[t] = 1;
                    parent[t] = {s, e};
                    queue.push_back(t);
                }
            }
        }
        if (found && (!best || found->length() < best->length()))
            best = found;
    }
    return best;
}

std::vector<VertexId> small_hitting_set(const RootedGraph& g, const SubdivisionModel& m)
{
    Subgraph u = m.union_subgraph(g);
    if (!is_s_cycle_subgraph(g, u))
        throw ContractError("model union is not an S-cycle subgraph");
    const PatternGraph& h = m.pattern();
    RootedGraph hg = h.to_graph(false);
    std::vector<char> carries(h.edges.size(), 0);
    for (std::size_t i = 0; i < m.paths.size(); ++i)
        for (VertexId v : m.paths[i].vertices)
            if (g.is_root(v))
                carries[i] = 1;
    std::vector<char> kept(h.edges.size(), 1);
    std::vector<int> chosen;
    while (auto c = find_cycle(GraphView{hg, nullptr, &kept})) {
        int pick = -1;
        for (EdgeId e : c->edges)
            if (carries[e] && (pick < 0 || e < pick))
                pick = e;
        if (pick < 0)
            throw ContractError("pattern cycle without a root-carrying certifying path");
        kept[pick] = 0;
        chosen.push_back(pick);
    }
    std::set<VertexId> out;
    for (int i : chosen) {
        const Path& p = m.paths[i];
        if (std::any_of(p.vertices.begin(), p.vertices.end(), [&](VertexId v) { return out.count(v); }))
            continue;
        VertexId r = -1;
        for (VertexId v : p.vertices)
            if (g.is_root(v) && (r < 0 || v < r))
                r = v;
        out.insert(r);
    }
    return {out.begin(), out.end()};
}

namespace {

Subgraph with_path(Subgraph w, const Path& p)
{
    w.add_path(p);
    return w;
}

PackingCertificate pair_with_w_cycle(const RootedGraph& g, const Subgraph& w, const Cycle& c,
                                     std::optional<VertexId> avoid = std::nullopt)
{
    VertexMask blocked(g.vertex_bound(), 0);
    for (VertexId v : c.vertices)
        blocked[v] = 1;
    if (avoid)
        blocked[*avoid] = 1;
    auto d = find_cycle(GraphView{g, &blocked, &w.edge});
    if (!d)
        return {};
    return PackingCertificate{{c, *d}};
}

}  // namespace

ExtensionResult find_extension(const RootedGraph& g, const Subgraph& w, std::span<const VertexId> t, const Cycle& c)
{
    for (VertexId v : t)
        if (c.contains(v))
            throw ContractError("cycle meets the hitting set");
    std::size_t k = c.vertices.size();
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < k; ++i)
        if (w.has_vertex(c.vertices[i]))
            at.push_back(i);
    if (at.empty()) {
        PackingCertificate p = pair_with_w_cycle(g, w, c);
        throw StructureViolation("S-cycle disjoint from the model",
                                 p.cycles.empty() ? std::nullopt : std::optional(p));
    }
    if (at.size() == 1)
        return OneVertexContact{c.vertices[at[0]]};

    struct Segment {
        Path path;
        bool w_path;
    };
    std::vector<Segment> segs;
    for (std::size_t a = 0; a < at.size(); ++a) {
        std::size_t i = at[a], j = at[(a + 1) % at.size()];
        Path p{{c.vertices[i]}, {}};
        for (std::size_t s = i; s != j || p.edges.empty(); s = (s + 1) % k) {
            p.edges.push_back(c.edges[s]);
            p.vertices.push_back(c.vertices[(s + 1) % k]);
            if ((s + 1) % k == j)
                break;
        }
        bool wp = p.length() >= 2 || !w.has_edge(p.edges[0]);
        segs.push_back({p, wp});
    }
    auto check = [&](const Path& x) {
        if (!is_s_cycle_subgraph(g, with_path(w, x)))
            throw std::logic_error("extension check failed");
        return Extension{x};
    };
    for (const Segment& s : segs)
        if (s.w_path && std::any_of(s.path.vertices.begin(), s.path.vertices.end(), [&](VertexId v) { return g.is_root(v); }))
            return check(s.path);

    VertexId v = -1;
    for (std::size_t i : at)
        if (g.is_root(c.vertices[i])) {
            v = c.vertices[i];
            break;
        }
    if (v < 0)
        throw StructureViolation("S-cycle carries no usable root");
    VertexMask off(g.vertex_bound(), 0);
    for (VertexId u : g.vertices())
        if (!w.has_vertex(u))
            off[u] = 1;
    for (VertexId u : t)
        off[u] = 1;
    off[v] = 1;
    std::vector<int> comp = components(GraphView{g, &off, &w.edge});
    for (const Segment& s : segs)
        if (s.w_path && comp[s.path.front()] != comp[s.path.back()])
            return check(s.path);
    throw StructureViolation("no extension inside the S-cycle");
}

ExtensionResult find_extension(const RootedGraph& g, const SubdivisionModel& m, std::span<const VertexId> t,
                               const Cycle& c)
{
    return find_extension(g, m.union_subgraph(g), t, c);
}

std::optional<PackingCertificate> two_disjoint_from_chord(const RootedGraph& g, const Subgraph& w, const Cycle& c,
                                                          const Path& p)
{
    auto a = std::find(c.vertices.begin(), c.vertices.end(), p.front());
    auto b = std::find(c.vertices.begin(), c.vertices.end(), p.back());
    if (a == c.vertices.end() || b == c.vertices.end() || a == b)
        throw ContractError("chord endpoints must be distinct vertices of the cycle");
    std::size_t k = c.vertices.size();
    auto arc = [&](std::size_t from, std::size_t to) {
        Path q{{c.vertices[from]}, {}};
        for (std::size_t s = from; s != to; s = (s + 1) % k) {
            q.edges.push_back(c.edges[s]);
            q.vertices.push_back(c.vertices[(s + 1) % k]);
        }
        return q;
    };
    std::size_t ia = a - c.vertices.begin(), ib = b - c.vertices.begin();
    Path back = p.reversed();  // b .. a
    std::vector<Cycle> sides;
    for (Path q : {arc(ia, ib), arc(ib, ia)}) {
        const Path& chord = q.back() == p.back() ? back : p;
        Path loop = q.joined(chord);
        sides.push_back(closed_path_to_cycle(loop));
    }
    for (const Cycle& ci : sides) {
        bool rooted = std::any_of(ci.vertices.begin(), ci.vertices.end(), [&](VertexId v) { return g.is_root(v); });
        if (!rooted)
            continue;
        PackingCertificate pc = pair_with_w_cycle(g, w, ci);
        if (!pc.cycles.empty())
            return pc;
    }
    return std::nullopt;
}

bool is_nice(const PatternGraph& h)
{
    RootedGraph base = h.to_graph(true);
    if (find_disjoint_pair(GraphView{base}))
        return false;
    int m = h.edge_count();
    for (int e1 = 0; e1 < m; ++e1)
        for (int e2 = e1 + 1; e2 < m; ++e2) {
            RootedGraph q = h.to_graph(true);
            RootedGraph r;
            for (VertexId v : q.vertices())
                r.set_root(r.add_vertex(q.name(v)));
            VertexId x = r.add_vertex("x"), y = r.add_vertex("y");
            r.set_root(x);
            r.set_root(y);
            for (int e = 0; e < m; ++e) {
                const PatternEdge& pe = h.edges[e];
                if (e == e1 || e == e2) {
                    VertexId mid = e == e1 ? x : y;
                    r.add_edge(pe.u, mid);
                    r.add_edge(mid, pe.v);
                } else {
                    r.add_edge(pe.u, pe.v);
                }
            }
            r.add_edge(x, y);
            if (!find_disjoint_pair(GraphView{r}))
                return false;
        }
    return true;
}

std::optional<ModelLocation> locate(const SubdivisionModel& m, VertexId v)
{
    for (std::size_t i = 0; i < m.branch.size(); ++i)
        if (m.branch[i] == v)
            return ModelLocation{static_cast<int>(i), -1, 0};
    for (std::size_t i = 0; i < m.paths.size(); ++i) {
        const Path& p = m.paths[i];
        for (std::size_t k = 1; k + 1 < p.vertices.size(); ++k)
            if (p.vertices[k] == v)
                return ModelLocation{-1, static_cast<int>(i), k};
    }
    return std::nullopt;
}

namespace {

// certifying paths of an abstract multigraph whose vertices are host vertices
using Segments = std::vector<Path>;

Segments normalize(Segments segs)
{
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<VertexId, std::vector<std::size_t>> ends;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            ends[segs[i].front()].push_back(i);
            ends[segs[i].back()].push_back(i);
        }
        for (auto& [v, inc] : ends) {
            if (inc.size() == 1) {
                segs.erase(segs.begin() + inc[0]);
                changed = true;
                break;
            }
            if (inc.size() == 2 && inc[0] != inc[1]) {
                Path a = segs[inc[0]], b = segs[inc[1]];
                if (a.back() != v)
                    a = a.reversed();
                if (b.front() != v)
                    b = b.reversed();
                Path merged = a.joined(b);
                segs.erase(segs.begin() + inc[1]);
                segs.erase(segs.begin() + inc[0]);
                segs.push_back(merged);
                changed = true;
                break;
            }
        }
    }
    return segs;
}

std::optional<SubdivisionModel> match(const RootedGraph& g, const Segments& segs, PatternKind kind)
{
    const PatternGraph& h = pattern(kind);
    if (static_cast<int>(segs.size()) != h.edge_count())
        return std::nullopt;
    RootedGraph abs;
    std::map<VertexId, VertexId> id;
    std::vector<VertexId> host;
    for (const Path& p : segs)
        for (VertexId v : {p.front(), p.back()})
            if (!id.count(v)) {
                id[v] = abs.add_vertex(std::to_string(v));
                host.push_back(v);
            }
    if (static_cast<int>(host.size()) != h.vertex_count())
        return std::nullopt;
    for (const Path& p : segs)
        abs.add_edge(id[p.front()], id[p.back()]);
    auto phi = isomorphism(h.to_graph(false), abs);
    if (!phi)
        return std::nullopt;
    SubdivisionModel m;
    m.kind = kind;
    for (int i = 0; i < h.vertex_count(); ++i)
        m.branch.push_back(host[(*phi)[i]]);
    std::vector<char> used(segs.size(), 0);
    for (const PatternEdge& pe : h.edges) {
        VertexId a = m.branch[pe.u], b = m.branch[pe.v];
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (used[i])
                continue;
            const Path& p = segs[i];
            if (p.front() == a && p.back() == b) {
                m.paths.push_back(p);
            } else if (p.front() == b && p.back() == a) {
                m.paths.push_back(p.reversed());
            } else {
                continue;
            }
            used[i] = 1;
            break;
        }
    }
    if (!validate_model(g, m))
        throw std::logic_error("rebuilt model failed validation");
    return m;
}

}  // namespace

SubdivisionModel find_pattern_upgrade(const RootedGraph& g, const SubdivisionModel& m, const Path& x,
                                      std::span<const PatternKind> targets)
{
    Subgraph w = m.union_subgraph(g);
    Subgraph wx = with_path(w, x);
    if (!is_s_cycle_subgraph(g, wx))
        throw ContractError("W plus X is not an S-cycle subgraph");
    std::map<int, std::vector<std::size_t>> cuts;
    for (VertexId end : {x.front(), x.back()}) {
        auto loc = locate(m, end);
        if (!loc)
            throw ContractError("extension endpoint outside the model");
        if (loc->path >= 0)
            cuts[loc->path].push_back(loc->position);
    }
    Segments segs;
    for (std::size_t i = 0; i < m.paths.size(); ++i) {
        std::vector<std::size_t> cs = cuts[static_cast<int>(i)];
        std::sort(cs.begin(), cs.end());
        std::size_t from = 0;
        for (std::size_t c : cs) {
            segs.push_back(m.paths[i].slice(from, c));
            from = c;
        }
        segs.push_back(m.paths[i].slice(from, m.paths[i].vertices.size() - 1));
    }
    segs.push_back(x);
    Segments full = normalize(segs);
    std::size_t n = full.size();
    for (std::size_t r = 0; r <= 3 && r <= n; ++r) {
        std::vector<char> drop(n, 0);
        std::fill(drop.end() - r, drop.end(), 1);
        do {
            Segments kept;
            for (std::size_t i = 0; i < n; ++i)
                if (!drop[i])
                    kept.push_back(full[i]);
            Segments norm = r ? normalize(kept) : kept;
            for (PatternKind k : targets)
                if (auto out = match(g, norm, k))
                    return *out;
        } while (std::next_permutation(drop.begin(), drop.end()));
    }
    auto pair = find_disjoint_pair(GraphView{g, nullptr, &wx.edge});
    throw StructureViolation("extension of " + m.pattern().name + " matches no target pattern", pair);
}

}  // namespace scycle
