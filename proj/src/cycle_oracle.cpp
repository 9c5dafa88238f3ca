#include "scycle/cycle_oracle.hpp"

#include "scycle/errors.hpp"

#include <algorithm>

namespace scycle {

bool has_s_cycle(const GraphView& view)
{
    for (const Block& b : blocks(view)) {
        if (!b.has_cycle())
            continue;
        for (VertexId v : b.vertices)
            if (view.g.is_root(v))
                return true;
    }
    return false;
}

bool has_s_cycle(const RootedGraph& g)
{
    return has_s_cycle(GraphView{g});
}

std::optional<Cycle> find_s_cycle(const GraphView& view)
{
    const RootedGraph& g = view.g;
    std::optional<Cycle> best;
    for (VertexId s : g.roots()) {
        if (!view.vertex_ok(s))
            continue;
        for (EdgeId e : g.incident(s)) {
            if (!view.edge_ok(e))
                continue;
            const Edge& ed = g.edge(e);
            if (ed.is_loop())
                return Cycle{{s}, {e}};
            if (best && best->length() <= 2)
                continue;
            auto p = shortest_path(view, ed.other(s), s, e);
            if (!p)
                continue;
            if (!best || p->length() + 1 < best->length()) {
                Path q = p->reversed();  // s ... x
                best = close_path(q, e);
            }
        }
    }
    return best;
}

std::optional<Cycle> find_s_cycle(const RootedGraph& g)
{
    return find_s_cycle(GraphView{g});
}

namespace {

struct BudgetHit {};

struct Enumerator {
    Enumerator(const GraphView& v, std::size_t l) : view(v), limit(l) {}

    const GraphView& view;
    std::size_t limit;
    CycleEnumeration out;
    VertexId start = 0;
    std::vector<VertexId> verts;
    std::vector<EdgeId> edges;
    std::vector<char> on_path;
    int roots_on_path = 0;

    void emit(Cycle c)
    {
        if (out.cycles.size() >= limit) {
            out.complete = false;
            throw BudgetHit{};
        }
        out.cycles.push_back(std::move(c));
    }

    void dfs(VertexId cur)
    {
        const RootedGraph& g = view.g;
        for (EdgeId e : g.incident(cur)) {
            if (!view.edge_ok(e))
                continue;
            const Edge& ed = g.edge(e);
            if (ed.is_loop())
                continue;
            VertexId w = ed.other(cur);
            if (w == start) {
                if (!edges.empty() && e > edges.front() && roots_on_path > 0) {
                    Cycle c{verts, edges};
                    c.edges.push_back(e);
                    emit(std::move(c));
                }
            } else if (w > start && !on_path[w]) {
                verts.push_back(w);
                edges.push_back(e);
                on_path[w] = 1;
                roots_on_path += g.is_root(w);
                dfs(w);
                roots_on_path -= g.is_root(w);
                on_path[w] = 0;
                edges.pop_back();
                verts.pop_back();
            }
        }
    }

    void run()
    {
        const RootedGraph& g = view.g;
        on_path.assign(g.vertex_bound(), 0);
        VertexId last_root = -1;
        for (VertexId r : g.roots())
            if (view.vertex_ok(r))
                last_root = r;
        try {
            for (VertexId s : g.vertices()) {
                if (s > last_root)
                    break;
                if (!view.vertex_ok(s))
                    continue;
                if (g.is_root(s))
                    for (EdgeId e : g.incident(s))
                        if (view.edge_ok(e) && g.edge(e).is_loop())
                            emit(Cycle{{s}, {e}});
                start = s;
                verts = {s};
                edges.clear();
                on_path[s] = 1;
                roots_on_path = g.is_root(s);
                dfs(s);
                on_path[s] = 0;
            }
        } catch (const BudgetHit&) {
        }
    }
};

VertexMask with_blocked(const GraphView& view, const Cycle& c)
{
    VertexMask m = view.blocked ? *view.blocked : VertexMask(view.g.vertex_bound(), 0);
    for (VertexId v : c.vertices)
        m[v] = 1;
    return m;
}

std::vector<Cycle> all_s_cycles_sorted(const GraphView& view, std::size_t budget)
{
    CycleEnumeration en = enumerate_s_cycles(view, budget);
    if (!en.complete)
        throw ResourceError("S-cycle enumeration exceeded budget of " + std::to_string(budget));
    std::stable_sort(en.cycles.begin(), en.cycles.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return std::move(en.cycles);
}

std::vector<Cycle> pack(const GraphView& view, int cap, std::size_t budget)
{
    if (cap <= 0)
        return {};
    if (cap == 1) {
        auto c = find_s_cycle(view);
        if (!c)
            return {};
        return {*c};
    }
    std::vector<Cycle> best;
    for (const Cycle& c : all_s_cycles_sorted(view, budget)) {
        VertexMask m = with_blocked(view, c);
        std::vector<Cycle> rest = pack(GraphView{view.g, &m, view.allowed_edges}, cap - 1, budget);
        if (rest.size() + 1 > best.size()) {
            best = {c};
            best.insert(best.end(), rest.begin(), rest.end());
            if (static_cast<int>(best.size()) == cap)
                break;
        }
    }
    return best;
}

}  // namespace

CycleEnumeration enumerate_s_cycles(const GraphView& view, std::size_t limit)
{
    if (limit < 1)
        throw ContractError("enumeration limit must be at least 1");
    Enumerator en(view, limit);
    en.run();
    return std::move(en.out);
}

CycleEnumeration enumerate_s_cycles(const RootedGraph& g, std::size_t limit)
{
    return enumerate_s_cycles(GraphView{g}, limit);
}

std::optional<PackingCertificate> find_disjoint_pair(const GraphView& view, std::size_t budget)
{
    std::vector<Cycle> cs = pack(view, 2, budget);
    if (cs.size() < 2)
        return std::nullopt;
    return PackingCertificate{std::move(cs)};
}

MuResult mu_exact(const RootedGraph& g, int cap, std::size_t budget)
{
    if (cap < 1 || cap > 3)
        throw ContractError("mu cap must be 1, 2 or 3");
    std::vector<Cycle> cs = pack(GraphView{g}, cap, budget);
    return {static_cast<int>(cs.size()), PackingCertificate{std::move(cs)}};
}

std::vector<VertexId> s_cycle_vertices(const GraphView& view)
{
    std::vector<char> mark(view.g.vertex_bound(), 0);
    for (const Block& b : blocks(view)) {
        if (!b.has_cycle())
            continue;
        bool rooted = std::any_of(b.vertices.begin(), b.vertices.end(), [&](VertexId v) { return view.g.is_root(v); });
        if (rooted)
            for (VertexId v : b.vertices)
                mark[v] = 1;
    }
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < mark.size(); ++i)
        if (mark[i])
            out.push_back(static_cast<VertexId>(i));
    return out;
}

TauResult tau_exact(const RootedGraph& g, int bound)
{
    if (bound < 0 || bound > 6)
        throw ContractError("tau bound must lie in 0..6");
    if (!has_s_cycle(g))
        return {0, {}};
    std::vector<VertexId> cand = s_cycle_vertices(GraphView{g});
    int n = static_cast<int>(cand.size());
    VertexMask m(g.vertex_bound(), 0);
    GraphView view{g, &m};
    for (int k = 1; k <= std::min(bound, n); ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        while (true) {
            for (int i : idx)
                m[cand[i]] = 1;
            bool hit = !has_s_cycle(view);
            for (int i : idx)
                m[cand[i]] = 0;
            if (hit) {
                HittingCertificate h;
                for (int i : idx)
                    h.vertices.push_back(cand[i]);
                return {k, h};
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return {std::nullopt, {}};
}

Verdict verify_certificate(const RootedGraph& g, const Certificate& c)
{
    if (const auto* h = std::get_if<HittingCertificate>(&c)) {
        for (VertexId v : h->vertices)
            if (!g.has_vertex(v))
                return Verdict::fail("unknown vertex id " + std::to_string(v));
        VertexMask m = mask_of(g, h->vertices);
        if (has_s_cycle(GraphView{g, &m}))
            return Verdict::fail("S-cycle survives");
        return {};
    }
    const auto& p = std::get<PackingCertificate>(c);
    std::vector<int> owner(g.vertex_bound(), -1);
    for (std::size_t i = 0; i < p.cycles.size(); ++i) {
        const Cycle& cy = p.cycles[i];
        std::string tag = "cycle " + std::to_string(i + 1);
        if (!is_valid_cycle(g, cy))
            return Verdict::fail(tag + " is not a cycle of the graph");
        if (std::none_of(cy.vertices.begin(), cy.vertices.end(), [&](VertexId v) { return g.is_root(v); }))
            return Verdict::fail(tag + " contains no root");
        for (VertexId v : cy.vertices) {
            if (owner[v] >= 0)
                return Verdict::fail(tag + " shares vertex " + g.name(v) + " with cycle " + std::to_string(owner[v] + 1));
            owner[v] = static_cast<int>(i);
        }
    }
    return {};
}

}  // namespace scycle
