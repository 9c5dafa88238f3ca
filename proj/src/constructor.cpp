#include "scycle/constructor.hpp"

#include "scycle/errors.hpp"

#include <algorithm>
#include <set>

namespace scycle {

using K = PatternKind;

std::string format_step(const RootedGraph& g, const TraceStep& s)
{
    std::string ids;
    for (std::size_t i = 0; i < s.t.size(); ++i)
        ids += (i ? "," : "") + g.name(s.t[i]);
    return "step=" + s.step + " pattern=" + s.pattern + " T=[" + ids + "] result=" + s.result;
}

std::vector<std::string> format_trace(const RootedGraph& g, const Trace& trace)
{
    std::vector<std::string> out;
    for (const auto& s : trace)
        out.push_back(format_step(g, s));
    return out;
}

namespace {

std::vector<VertexId> sorted_set(std::vector<VertexId> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void note(Trace* trace, std::string step, const SubdivisionModel* m, std::vector<VertexId> t, std::string result)
{
    if (trace)
        trace->push_back({std::move(step), m ? m->pattern().name : "none", std::move(t), std::move(result)});
}

Path cycle_from(const Cycle& c, VertexId start)
{
    auto it = std::find(c.vertices.begin(), c.vertices.end(), start);
    std::size_t s = it - c.vertices.begin(), k = c.vertices.size();
    Path p{{start}, {}};
    for (std::size_t i = 0; i < k; ++i) {
        p.edges.push_back(c.edges[(s + i) % k]);
        p.vertices.push_back(c.vertices[(s + i + 1) % k]);
    }
    return p;
}

// Runs one "delete T, take an S-cycle, extend the model" round.
StageResult extend_round(const RootedGraph& g, const SubdivisionModel& w, const std::vector<VertexId>& t_roots,
                         const std::vector<VertexId>& extra, std::span<const PatternKind> targets,
                         const std::string& step, Trace* trace)
{
    std::vector<VertexId> t = t_roots;
    t.insert(t.end(), extra.begin(), extra.end());
    t = sorted_set(t);
    VertexMask mask = mask_of(g, t);
    auto c = find_s_cycle(GraphView{g, &mask});
    if (!c) {
        note(trace, step, &w, t, "hit");
        return Certificate{HittingCertificate{t}};
    }
    try {
        ExtensionResult ext = find_extension(g, w, t_roots, *c);
        if (auto* contact = std::get_if<OneVertexContact>(&ext)) {
            if (w.kind == K::loop1) {
                SubdivisionModel m{K::loop2, {contact->vertex},
                                   {cycle_from(closed_path_to_cycle(w.paths[0]), contact->vertex),
                                    cycle_from(*c, contact->vertex)}};
                note(trace, step, &w, t, "upgrade");
                return m;
            }
            Subgraph u = w.union_subgraph(g);
            VertexMask off(g.vertex_bound(), 0);
            for (VertexId v : c->vertices)
                off[v] = 1;
            auto d = find_cycle(GraphView{g, &off, &u.edge});
            if (!d)
                throw StructureViolation("S-cycle touches " + w.pattern().name + " at one vertex");
            note(trace, step, &w, t, "pack");
            return Certificate{PackingCertificate{{*c, *d}}};
        }
        SubdivisionModel up = find_pattern_upgrade(g, w, std::get<Extension>(ext).path, targets);
        note(trace, step, &w, t, "upgrade");
        return up;
    } catch (const StructureViolation& sv) {
        if (sv.packing) {
            note(trace, step, &w, t, "pack");
            return Certificate{*sv.packing};
        }
        note(trace, step, &w, t, "violation");
        throw;
    }
}

// Returns the hitting certificate for T, or a pair found next to the model.
Certificate finish(const RootedGraph& g, const SubdivisionModel& w, std::vector<VertexId> t, const std::string& step,
                   Trace* trace)
{
    t = sorted_set(std::move(t));
    VertexMask mask = mask_of(g, t);
    auto c = find_s_cycle(GraphView{g, &mask});
    if (!c) {
        note(trace, step, &w, t, "hit");
        return HittingCertificate{t};
    }
    Subgraph u = w.union_subgraph(g);
    u.add_cycle(*c);
    if (auto pair = find_disjoint_pair(GraphView{g, nullptr, &u.edge})) {
        note(trace, step, &w, t, "pack");
        return *pair;
    }
    note(trace, step, &w, t, "violation");
    throw StructureViolation(step + ": recipe set leaves an S-cycle");
}

void expect(const SubdivisionModel& w, PatternKind k)
{
    if (w.kind != k)
        throw ContractError("expected a " + pattern_name(k) + " model, got " + w.pattern().name);
}

std::vector<VertexId> interior(const Path& p)
{
    if (p.vertices.size() < 3)
        return {};
    return {p.vertices.begin() + 1, p.vertices.end() - 1};
}

StageResult try_upgrade(const RootedGraph& g, const SubdivisionModel& w, const std::vector<VertexId>& f1,
                        const std::vector<VertexId>& f2, const std::vector<VertexId>& blocked,
                        const std::string& step, Trace* trace, bool& upgraded)
{
    upgraded = false;
    VertexMask mask = mask_of(g, blocked);
    auto x = find_w_extension(g, w.union_subgraph(g), f1, f2, &mask);
    if (!x)
        return SubdivisionModel{};
    upgraded = true;
    const PatternKind target[] = {K::K33plus};
    try {
        SubdivisionModel up = find_pattern_upgrade(g, w, *x, target);
        note(trace, step, &w, sorted_set(blocked), "upgrade");
        return up;
    } catch (const StructureViolation& sv) {
        if (sv.packing) {
            note(trace, step, &w, sorted_set(blocked), "pack");
            return Certificate{*sv.packing};
        }
        note(trace, step, &w, sorted_set(blocked), "violation");
        throw;
    }
}

}  // namespace

StageResult build_base(const RootedGraph& g, Trace* trace)
{
    auto c1 = find_s_cycle(g);
    if (!c1) {
        note(trace, "base_cycle", nullptr, {}, "hit");
        return Certificate{HittingCertificate{}};
    }
    VertexId v = -1;
    for (VertexId u : c1->vertices)
        if (g.is_root(u) && (v < 0 || u < v))
            v = u;
    SubdivisionModel w{K::loop1, {v}, {cycle_from(*c1, v)}};
    while (w.kind != K::K3ppp && w.kind != K::K4) {
        std::vector<VertexId> t, extra;
        std::vector<PatternKind> targets;
        std::string step;
        switch (w.kind) {
        case K::loop1:
            t = {v};
            targets = {K::theta3};
            step = "base_cycle";
            break;
        case K::loop2:
            t = small_hitting_set(g, w);
            extra = {w.vertex("v")};
            targets = {K::K3plus};
            step = "base_loop2";
            break;
        case K::theta3:
            t = small_hitting_set(g, w);
            extra = {w.vertex("w1"), w.vertex("w2")};
            targets = {K::K4};
            step = "base_theta3";
            break;
        case K::K3plus:
            t = small_hitting_set(g, w);
            extra = {w.vertex("w")};
            targets = {K::K3pp, K::K4};
            step = "base_k3plus";
            break;
        case K::K3pp:
            t = small_hitting_set(g, w);
            targets = {K::K3ppp, K::K4};
            step = "base_k3pp";
            break;
        default:
            throw std::logic_error("unexpected model in base construction");
        }
        StageResult r = extend_round(g, w, t, extra, targets, step, trace);
        if (std::holds_alternative<Certificate>(r))
            return r;
        w = std::get<SubdivisionModel>(r);
    }
    return w;
}

StageResult upgrade_k4(const RootedGraph& g, const SubdivisionModel& w0, Trace* trace)
{
    expect(w0, K::K4);
    SubdivisionModel w = w0;
    while (true) {
        std::vector<PatternKind> targets;
        switch (w.kind) {
        case K::K4:
            targets = {K::K4plus, K::W4, K::K33};
            break;
        case K::K4plus:
            targets = {K::K4pp, K::K4ppp, K::W4, K::K33};
            break;
        case K::K33:
            targets = {K::K33plus};
            break;
        default:
            return w;
        }
        StageResult r = extend_round(g, w, small_hitting_set(g, w), {}, targets, "k4_round", trace);
        if (std::holds_alternative<Certificate>(r))
            return r;
        w = std::get<SubdivisionModel>(r);
    }
}

StageResult upgrade_w4(const RootedGraph& g, const SubdivisionModel& w, Trace* trace)
{
    expect(w, K::W4);
    const PatternKind targets[] = {K::W4plus, K::W4star, K::W5, K::K33plus};
    return extend_round(g, w, small_hitting_set(g, w), {}, targets, "w4_round", trace);
}

Certificate terminal_k3ppp(const RootedGraph& g, const SubdivisionModel& w, Trace* trace)
{
    expect(w, K::K3ppp);
    return finish(g, w, {w.vertex("v1"), w.vertex("v2"), w.vertex("v3")}, "terminal_k3ppp", trace);
}

std::vector<VertexId> recipe_k4pp(const RootedGraph& g, const SubdivisionModel& w)
{
    expect(w, K::K4pp);
    VertexId v1 = w.vertex("v1"), v2 = w.vertex("v2"), v4 = w.vertex("v4");
    std::vector<VertexId> t{v1, v2, v4};
    MidDecomposition q1 = mid_decompose(w.path("Q1"), g);
    if (!q1.empty()) {
        t.push_back(q1.gates->first);
        return t;
    }
    // Q2 runs v2 -> v3, Q3 runs v3 -> v1
    const Path& q2 = w.path("Q2");
    const Path& q3 = w.path("Q3");
    VertexId best = -1;
    std::size_t best_d = 0;
    int best_side = 0;
    auto consider = [&](VertexId u, std::size_t d, int side) {
        if (!g.is_root(u) || u == v1 || u == v2)
            return;
        if (best < 0 || d < best_d || (d == best_d && (side < best_side || (side == best_side && u < best)))) {
            best = u;
            best_d = d;
            best_side = side;
        }
    };
    for (std::size_t k = 0; k < q2.vertices.size(); ++k)
        consider(q2.vertices[k], q2.length() - k, 0);
    for (std::size_t k = 0; k < q3.vertices.size(); ++k)
        consider(q3.vertices[k], k, 1);
    if (best >= 0)
        t.push_back(best);
    return t;
}

Certificate terminal_k4pp(const RootedGraph& g, const SubdivisionModel& w, Trace* trace)
{
    return finish(g, w, recipe_k4pp(g, w), "terminal_k4pp", trace);
}

StageResult terminal_k4ppp(const RootedGraph& g, const SubdivisionModel& w, Trace* trace)
{
    expect(w, K::K4ppp);
    std::vector<VertexId> t{w.vertex("v1"), w.vertex("v2"), w.vertex("v3"), w.vertex("v4")};
    std::vector<VertexId> f1;
    for (const char* p : {"P1", "P2", "P3"})
        for (VertexId u : interior(w.path(p)))
            f1.push_back(u);
    bool upgraded = false;
    StageResult r = try_upgrade(g, w, f1, interior(w.path("Q3")), t, "terminal_k4ppp", trace, upgraded);
    if (upgraded)
        return r;
    return finish(g, w, t, "terminal_k4ppp", trace);
}

std::vector<VertexId> recipe_w4p(const RootedGraph& g, const SubdivisionModel& w)
{
    expect(w, K::W4plus);
    VertexId v1 = w.vertex("v1"), hub = w.vertex("w");
    std::vector<VertexId> t{v1, hub};
    // v1 -> v2 -> v3: the last root is closest to v3
    Path a = w.path("Q1").joined(w.path("Q2"));
    for (std::size_t k = a.vertices.size(); k-- > 1;)
        if (g.is_root(a.vertices[k])) {
            t.push_back(a.vertices[k]);
            break;
        }
    // v3 -> v4 -> v1: the first root is closest to v3
    Path b = w.path("Q3").joined(w.path("Q4"));
    for (std::size_t k = 0; k + 1 < b.vertices.size(); ++k)
        if (g.is_root(b.vertices[k])) {
            t.push_back(b.vertices[k]);
            break;
        }
    return sorted_set(t);
}

StageResult terminal_w4p(const RootedGraph& g, const SubdivisionModel& w, Trace* trace)
{
    expect(w, K::W4plus);
    std::vector<VertexId> f1 = interior(w.path("P1"));
    for (VertexId u : interior(w.path("P2")))
        f1.push_back(u);
    bool upgraded = false;
    StageResult r = try_upgrade(g, w, f1, {w.vertex("v3")}, {w.vertex("v1"), w.vertex("w")}, "terminal_w4plus",
                                trace, upgraded);
    if (upgraded)
        return r;
    return finish(g, w, recipe_w4p(g, w), "terminal_w4plus", trace);
}

Certificate terminal_w4star(const RootedGraph& g, const SubdivisionModel& w, Trace* trace)
{
    expect(w, K::W4star);
    return finish(g, w, {w.vertex("v1"), w.vertex("v2"), w.vertex("v3")}, "terminal_w4star", trace);
}

std::vector<VertexId> recipe_w5(const RootedGraph& g, const SubdivisionModel& w)
{
    expect(w, K::W5);
    for (const char* q : {"Q1", "Q2", "Q3", "Q4", "Q5"})
        for (VertexId u : w.path(q).vertices)
            if (g.is_root(u))
                return sorted_set({w.vertex("w"), u});
    throw StructureViolation("rim of the W5 model carries no root");
}

Certificate terminal_w5(const RootedGraph& g, const SubdivisionModel& w, Trace* trace)
{
    return finish(g, w, recipe_w5(g, w), "terminal_w5", trace);
}

std::vector<VertexId> recipe_k33p(const RootedGraph& g, const SubdivisionModel& w)
{
    expect(w, K::K33plus);
    std::vector<VertexId> t{w.vertex("v1"), w.vertex("v2"), w.vertex("v3")};
    MidDecomposition q = mid_decompose(w.path("Q"), g);
    if (!q.empty())
        t.push_back(q.gates->first);
    return t;
}

Certificate terminal_k33p(const RootedGraph& g, const SubdivisionModel& w, Trace* trace)
{
    return finish(g, w, recipe_k33p(g, w), "terminal_k33plus", trace);
}

namespace {

Certificate run_pipeline(const RootedGraph& g, Trace* trace, PatternKind& last)
{
    struct LastModel {
        Trace* trace;
        PatternKind& last;
        ~LastModel()
        {
            if (!trace->empty())
                last = pattern_from_name(trace->back().pattern).value_or(last);
        }
    } remember{trace, last};
    StageResult r = build_base(g, trace);
    while (auto* m = std::get_if<SubdivisionModel>(&r)) {
        SubdivisionModel w = *m;
        last = w.kind;
        switch (w.kind) {
        case K::K3ppp:
            return terminal_k3ppp(g, w, trace);
        case K::K4:
            r = upgrade_k4(g, w, trace);
            break;
        case K::W4:
            r = upgrade_w4(g, w, trace);
            break;
        case K::K4pp:
            return terminal_k4pp(g, w, trace);
        case K::K4ppp:
            r = terminal_k4ppp(g, w, trace);
            break;
        case K::W4plus:
            r = terminal_w4p(g, w, trace);
            break;
        case K::W4star:
            return terminal_w4star(g, w, trace);
        case K::W5:
            return terminal_w5(g, w, trace);
        case K::K33plus:
            return terminal_k33p(g, w, trace);
        default:
            throw std::logic_error("pipeline reached an unexpected model " + w.pattern().name);
        }
    }
    return std::get<Certificate>(r);
}

Certificate ask_oracle(const RootedGraph& g, Trace& trace)
{
    MuResult mu = mu_exact(g, 2);
    if (mu.value >= 2) {
        trace.push_back({"oracle", "none", {}, "pack"});
        return mu.packing;
    }
    TauResult tau = tau_exact(g, 4);
    if (!tau.value) {
        trace.push_back({"oracle", "none", {}, "violation"});
        throw StructureViolation("no disjoint pair and no hitting set of size at most 4");
    }
    trace.push_back({"oracle", "none", tau.hitting.vertices, "hit"});
    return tau.hitting;
}

}  // namespace

Hit4Result hit4(const RootedGraph& g, Mode mode)
{
    Hit4Result res{HittingCertificate{}, {}};
    bool have = false;
    try {
        res.certificate = run_pipeline(g, &res.trace, res.terminal);
        have = true;
    } catch (const StructureViolation& sv) {
        if (sv.packing) {
            res.certificate = *sv.packing;
            have = true;
        } else if (mode == Mode::strict) {
            throw;
        }
    }
    if (have && !verify_certificate(g, res.certificate)) {
        if (mode == Mode::strict)
            throw StructureViolation("pipeline produced a certificate that does not verify");
        have = false;
    }
    if (!have) {
        res.certificate = ask_oracle(g, res.trace);
        res.used_oracle = true;
        return res;
    }
    if (mode == Mode::fallback) {
        auto* h = std::get_if<HittingCertificate>(&res.certificate);
        if (h && !h->vertices.empty()) {
            try {
                MuResult mu = mu_exact(g, 2);
                if (mu.value >= 2) {
                    res.trace.push_back({"packing_audit", "none", {}, "pack"});
                    res.certificate = mu.packing;
                    res.used_oracle = true;
                }
            } catch (const ResourceError&) {
            }
        }
    }
    return res;
}

}  // namespace scycle
