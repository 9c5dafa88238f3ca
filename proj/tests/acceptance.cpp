// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "brute.hpp"
#include "scycle/constructor.hpp"
#include "scycle/instances.hpp"
#include "scycle/rg_format.hpp"
#include "scycle/stress.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace scycle;

namespace {

constexpr double kFigure2Seconds = 30.0;
constexpr double kK5Seconds = 1.0;
constexpr int kStressCount = 1000;
constexpr int kStressMaxN = 10;
constexpr std::uint64_t kStressSeed = 7;
constexpr int kModelsPerPattern = 200;
constexpr std::uint64_t kTerminalScanSeeds = 100000;

struct Outcome {
    bool ok = true;
    std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what)
{
    if (!cond && o.ok) {
        o.ok = false;
        o.detail = what;
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::size_t hitting_size(const Certificate& c)
{
    auto* h = std::get_if<HittingCertificate>(&c);
    return h ? h->vertices.size() : 99;
}

Outcome figure2_reproduction()
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    RootedGraph g = parse_rg(write_rg(figure2()));
    require(o, mu_exact(g, 2).value == 1, "mu != 1");
    TauResult t = tau_exact(g, 4);
    require(o, t.value == 4, "tau != 4");
    require(o, t.hitting.vertices.size() == 4, "certificate size != 4");
    require(o, static_cast<bool>(verify_certificate(g, t.hitting)), "hitting certificate rejected");
    require(o, !tau_exact(g, 3).value, "some set of size <= 3 hits every S-cycle");
    double s = seconds_since(t0);
    require(o, s < kFigure2Seconds, "too slow");
    std::ostringstream d;
    d << "mu=1 tau=4 no 3-set; " << s << " s";
    if (o.ok)
        o.detail = d.str();
    return o;
}

Outcome k5_sanity()
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    RootedGraph g = k5();
    MuResult m = mu_exact(g, 2);
    require(o, m.value == 1, "mu != 1");
    require(o, static_cast<bool>(verify_certificate(g, m.packing)), "packing certificate rejected");
    TauResult t = tau_exact(g, 4);
    require(o, t.value == 3, "tau != 3");
    require(o, static_cast<bool>(verify_certificate(g, t.hitting)), "hitting certificate rejected");
    require(o, seconds_since(t0) < kK5Seconds, "too slow");
    if (o.ok)
        o.detail = "mu=1 tau=3";
    return o;
}

Outcome stress_property(const StressSummary& s)
{
    Outcome o;
    require(o, s.instances >= kStressCount, "too few instances");
    require(o, s.mismatches == 0, std::to_string(s.mismatches) + " mismatches" +
                                      (s.failures.empty() ? "" : ", first: " + s.failures[0]));
    require(o, s.mu2 == s.packing_verified, "some mu>=2 instance without a verified pair");
    require(o, s.mu0 + s.mu1 == s.hitting_verified, "some mu<=1 instance without a verified hitting set");
    std::ostringstream d;
    d << s.instances << " instances, " << s.hitting_verified << " hitting sets, " << s.packing_verified
      << " pairs, 0 mismatches";
    if (o.ok)
        o.detail = d.str();
    return o;
}

Outcome strict_audit(const StressSummary& s)
{
    Outcome o;
    require(o, s.strict_runs == s.mu0 + s.mu1, "strict mode skipped instances");
    require(o, s.strict_violations == 0, std::to_string(s.strict_violations) + " violations");
    if (o.ok)
        o.detail = std::to_string(s.strict_runs) + " strict runs, 0 violations";
    return o;
}

Outcome small_hitting_bound()
{
    Outcome o;
    std::mt19937_64 rng(20240501);
    int models = 0;
    for (PatternKind k : all_patterns()) {
        const PatternGraph& h = pattern(k);
        for (int it = 0; it < kModelsPerPattern; ++it) {
            std::vector<int> lengths;
            for (int i = 0; i < h.edge_count(); ++i)
                lengths.push_back(1 + static_cast<int>(rng() % 4));
            auto inst = pattern_instance(k, lengths, h.vertex_labels);
            RootedGraph& g = inst.graph;
            for (VertexId v : g.vertices())
                g.set_root(v, rng() % 3 == 0);
            Subgraph w = inst.model.union_subgraph(g);
            while (auto c = rootless_cycle(g, w))
                g.set_root(c->vertices[rng() % c->vertices.size()]);
            auto u = small_hitting_set(g, inst.model);
            require(o, static_cast<int>(u.size()) <= h.edge_count() - h.vertex_count() + 1, h.name + ": too large");
            for (VertexId v : u)
                require(o, g.is_root(v), h.name + ": non-root chosen");
            VertexMask m = mask_of(g, u);
            require(o, !find_cycle(GraphView{g, &m}), h.name + ": a cycle remains");
            ++models;
        }
    }
    if (o.ok)
        o.detail = std::to_string(models) + " models over " + std::to_string(all_patterns().size()) + " patterns";
    return o;
}

// subdivide two edges, join the new vertices, and look for two disjoint cycles by brute force
bool brute_nice(const PatternGraph& h)
{
    if (brute::mu2(h.to_graph(true)) == 2)
        return false;
    for (int e1 = 0; e1 < h.edge_count(); ++e1)
        for (int e2 = e1 + 1; e2 < h.edge_count(); ++e2) {
            RootedGraph r;
            for (const auto& l : h.vertex_labels)
                r.set_root(r.add_vertex(l));
            VertexId x = r.add_vertex("x"), y = r.add_vertex("y");
            for (int e = 0; e < h.edge_count(); ++e) {
                if (e == e1 || e == e2) {
                    VertexId mid = e == e1 ? x : y;
                    r.add_edge(h.edges[e].u, mid);
                    r.add_edge(mid, h.edges[e].v);
                } else {
                    r.add_edge(h.edges[e].u, h.edges[e].v);
                }
            }
            r.add_edge(x, y);
            r.set_root(x);
            r.set_root(y);
            if (brute::mu2(r) < 2)
                return false;
        }
    return true;
}

Outcome nice_table()
{
    Outcome o;
    for (PatternKind k : {PatternKind::K3pp, PatternKind::K3ppp, PatternKind::K4pp})
        require(o, is_nice(pattern(k)), pattern_name(k) + " not nice");
    bool k4 = is_nice(pattern(PatternKind::K4));
    require(o, k4 == brute_nice(pattern(PatternKind::K4)), "K4 disagrees with brute force");
    if (o.ok)
        o.detail = std::string("K3pp K3ppp K4pp nice; K4 nice=") + (k4 ? "true" : "false") + " (brute force agrees)";
    return o;
}

Outcome catalog_counts()
{
    Outcome o;
    const std::map<std::string, std::pair<int, int>> table{
        {"K3plus", {3, 5}}, {"K3pp", {3, 6}},  {"K3ppp", {3, 7}},    {"K4plus", {4, 7}}, {"K4pp", {4, 8}},
        {"K4ppp", {4, 8}},  {"W4plus", {5, 9}}, {"W4star", {5, 9}},  {"K33plus", {6, 10}}, {"theta3", {2, 3}},
        {"W4", {5, 8}},     {"W5", {6, 10}},    {"K33", {6, 9}},     {"K4", {4, 6}},
    };
    for (const auto& [name, vm] : table) {
        auto k = pattern_from_name(name);
        require(o, k.has_value(), name + " missing");
        if (!k)
            continue;
        const PatternGraph& h = pattern(*k);
        require(o, h.vertex_count() == vm.first && h.edge_count() == vm.second, name + " counts differ");
    }
    if (o.ok)
        o.detail = std::to_string(table.size()) + " patterns";
    return o;
}

Outcome terminal_recipes()
{
    Outcome o;
    struct Case {
        std::string name;
        PatternKind kind;
        std::vector<int> lengths;
        std::vector<std::string> roots;
        std::size_t bound;
        std::function<StageResult(const RootedGraph&, const SubdivisionModel&, Trace*)> terminal;
    };
    auto cert = [](Certificate (*f)(const RootedGraph&, const SubdivisionModel&, Trace*)) {
        return [f](const RootedGraph& g, const SubdivisionModel& m, Trace* t) { return StageResult{f(g, m, t)}; };
    };
    std::vector<int> k33p(9, 1);
    k33p.push_back(4);
    std::vector<Case> cases{
        {"K3ppp", PatternKind::K3ppp, {2, 2, 2, 2, 2, 2, 2}, {"v1", "v2", "v3"}, 3, cert(terminal_k3ppp)},
        {"K4pp", PatternKind::K4pp, {3, 1, 1, 1, 1, 1, 1, 1}, {"v1", "v2", "v4", "Q1.2"}, 4, cert(terminal_k4pp)},
        {"K4ppp", PatternKind::K4ppp, {2, 2, 2, 2, 2, 2, 2, 2}, {"v1", "v2", "v3", "v4"}, 4, terminal_k4ppp},
        {"W4plus", PatternKind::W4plus, {1, 1, 3, 1, 1, 3, 1, 1, 1}, {"v1", "w", "Q1.1", "Q4.2"}, 4, terminal_w4p},
        {"W4star", PatternKind::W4star, {2, 2, 2, 2, 2, 2, 2, 2, 2}, {"v1", "v2", "v3"}, 3, cert(terminal_w4star)},
        {"W5", PatternKind::W5, {1, 2, 1, 1, 1, 1, 1, 1, 1, 1}, {"w", "Q2.1"}, 2, cert(terminal_w5)},
        {"K33plus", PatternKind::K33plus, k33p, {"v1", "v2", "v3", "Q.2"}, 4, cert(terminal_k33p)},
    };
    std::string sizes;
    for (const auto& c : cases) {
        auto inst = pattern_instance(c.kind, c.lengths, c.roots);
        Trace trace;
        StageResult r = c.terminal(inst.graph, inst.model, &trace);
        auto* got = std::get_if<Certificate>(&r);
        require(o, got != nullptr, c.name + ": no certificate");
        if (!got)
            continue;
        std::size_t n = hitting_size(*got);
        require(o, n <= c.bound, c.name + ": |T| above bound");
        require(o, static_cast<bool>(verify_certificate(inst.graph, *got)), c.name + ": T rejected");
        require(o, !trace.empty() && trace.back().result == "hit", c.name + ": terminal did not hit");
        sizes += (sizes.empty() ? "" : " ") + c.name + "=" + std::to_string(n);
    }

    // the full pipeline also ends at every terminal on some seeded structured instance
    const std::map<std::string, std::size_t> bound{
        {"terminal_k3ppp", 3}, {"terminal_k4pp", 4},   {"terminal_k4ppp", 4},   {"terminal_w4plus", 4},
        {"terminal_w4star", 3}, {"terminal_w5", 2},    {"terminal_k33plus", 4},
    };
    std::map<std::string, std::uint64_t> reached;
    for (std::uint64_t seed = 1; seed <= kTerminalScanSeeds && reached.size() < bound.size(); ++seed) {
        RootedGraph g = structured_instance(seed);
        if (mu_exact(g, 2).value >= 2)
            continue;
        Hit4Result r = hit4(g, Mode::strict);
        const TraceStep& last = r.trace.back();
        auto b = bound.find(last.step);
        if (b == bound.end() || last.result != "hit" || reached.count(last.step))
            continue;
        reached[last.step] = seed;
        require(o, hitting_size(r.certificate) <= b->second, last.step + ": |T| above bound");
        require(o, static_cast<bool>(verify_certificate(g, r.certificate)), last.step + ": T rejected");
    }
    require(o, reached.size() == bound.size(), "some terminal never reached by the pipeline");
    if (o.ok)
        o.detail = sizes + "; pipeline reached all " + std::to_string(reached.size()) + " terminals";
    return o;
}

}  // namespace

int main()
{
    StressSummary stress = run_stress(kStressSeed, kStressCount, kStressMaxN);
    std::vector<std::pair<std::string, Outcome>> results{
        {"figure2 reproduction", figure2_reproduction()},
        {"K5 sanity", k5_sanity()},
        {"hit4 against the oracles", stress_property(stress)},
        {"strict-mode audit", strict_audit(stress)},
        {"small hitting set bound", small_hitting_bound()},
        {"nice-graph table", nice_table()},
        {"pattern catalog counts", catalog_counts()},
        {"terminal recipes", terminal_recipes()},
    };
    bool all = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& [name, o] = results[i];
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << name << " (" << o.detail << ")\n";
        all = all && o.ok;
    }
    return all ? 0 : 1;
}
