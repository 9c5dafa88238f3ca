#include "brute.hpp"
#include "scycle/certificate_json.hpp"
#include "scycle/constructor.hpp"
#include "scycle/instances.hpp"
#include "scycle/rg_format.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace scycle;

namespace {

std::vector<VertexId> ids(const RootedGraph& g, const std::vector<std::string>& names)
{
    std::vector<VertexId> out;
    for (const auto& n : names)
        out.push_back(g.at(n));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> hitting(const Certificate& c)
{
    REQUIRE(std::holds_alternative<HittingCertificate>(c));
    auto t = std::get<HittingCertificate>(c).vertices;
    std::sort(t.begin(), t.end());
    return t;
}

void add_rooted_triangle(RootedGraph& g)
{
    VertexId a = g.add_vertex("ta"), b = g.add_vertex("tb"), c = g.add_vertex("tc");
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(c, a);
    g.set_root(a);
}

// a new root x joined to the two named vertices
void add_root_detour(RootedGraph& g, const std::string& a, const std::string& b)
{
    VertexId x = g.add_vertex("x");
    g.set_root(x);
    g.add_edge(g.at(a), x);
    g.add_edge(x, g.at(b));
}

void check_packing(const RootedGraph& g, const Certificate& c)
{
    REQUIRE(std::holds_alternative<PackingCertificate>(c));
    CHECK(std::get<PackingCertificate>(c).cycles.size() == 2);
    CHECK(verify_certificate(g, c));
}

SubdivisionModel model_of(const StageResult& r)
{
    REQUIRE(std::holds_alternative<SubdivisionModel>(r));
    return std::get<SubdivisionModel>(r);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("hit4 examples")
{
    for (Mode mode : {Mode::strict, Mode::fallback}) {
        RootedGraph f = figure2();
        auto r = hit4(f, mode);
        CHECK(hitting(r.certificate).size() == 4);
        CHECK(verify_certificate(f, r.certificate));
        CHECK_FALSE(r.used_oracle);

        RootedGraph two = parse_rg("vertex a1\nvertex a2\nvertex a3\nvertex b1\nvertex b2\nvertex b3\n"
                                   "edge a1 a2\nedge a2 a3\nedge a3 a1\nedge b1 b2\nedge b2 b3\nedge b3 b1\n"
                                   "root a1\nroot b1\n");
        check_packing(two, hit4(two, mode).certificate);

        RootedGraph forest = parse_rg("vertex a\nvertex b\nvertex c\nedge a b\nedge b c\nroot a\nroot b\n");
        CHECK(hitting(hit4(forest, mode).certificate).empty());

        RootedGraph k = k5();
        r = hit4(k, mode);
        CHECK(verify_certificate(k, r.certificate));
        CHECK(hitting(r.certificate).size() <= 4);
        CHECK(r.terminal == PatternKind::W4star);
    }
}

TEST_CASE("build_base examples")
{
    RootedGraph tri = parse_rg("vertex a\nvertex b\nvertex c\nedge a b\nedge b c\nedge c a\nroot b\n");
    auto r = build_base(tri);
    REQUIRE(std::holds_alternative<Certificate>(r));
    CHECK(hitting(std::get<Certificate>(r)) == ids(tri, {"b"}));

    // theta3 on three rooted paths plus a fourth path between the branch vertices:
    // the branch vertices already hit everything, so the run stops at theta3
    auto inst = pattern_instance(PatternKind::theta3, {2, 2, 2}, {"P1.1", "P2.1", "P3.1"});
    RootedGraph& g = inst.graph;
    add_root_detour(g, "w1", "w2");
    Trace trace;
    r = build_base(g, &trace);
    REQUIRE(std::holds_alternative<Certificate>(r));
    CHECK(verify_certificate(g, std::get<Certificate>(r)));
    CHECK(hitting(std::get<Certificate>(r)).size() <= 4);
    REQUIRE(trace.size() == 2);
    CHECK(trace[0].pattern == "loop1");
    CHECK(trace[1].pattern == "theta3");
    CHECK(trace[1].result == "hit");

    // the doubled-triangle stages are reached through two loops at one root
    trace.clear();
    RootedGraph f = figure2();
    r = build_base(f, &trace);
    std::vector<std::string> seen;
    for (const auto& st : trace)
        seen.push_back(st.pattern);
    CHECK(seen == std::vector<std::string>{"loop1", "loop2", "K3plus", "K3pp"});

    RootedGraph k = k5();
    r = build_base(k);
    REQUIRE(std::holds_alternative<SubdivisionModel>(r));
    CHECK(std::get<SubdivisionModel>(r).kind == PatternKind::K4);
}

TEST_CASE("terminal K3ppp")
{
    auto inst = pattern_instance(PatternKind::K3ppp, {2, 2, 2, 2, 2, 2, 2}, {"v1", "v2", "v3"});
    Certificate c = terminal_k3ppp(inst.graph, inst.model);
    CHECK(hitting(c) == ids(inst.graph, {"v1", "v2", "v3"}));
    CHECK(verify_certificate(inst.graph, c));

    add_rooted_triangle(inst.graph);
    check_packing(inst.graph, terminal_k3ppp(inst.graph, inst.model));
    check_packing(inst.graph, hit4(inst.graph).certificate);
}

TEST_CASE("terminal K4pp")
{
    // Q1, Q2, Q3, R1_1, R1_2, R2_1, R2_2, R3
    SUBCASE("gate of Q1")
    {
        auto inst = pattern_instance(PatternKind::K4pp, {3, 1, 1, 1, 1, 1, 1, 1}, {"v1", "v2", "v4", "Q1.2"});
        auto t = recipe_k4pp(inst.graph, inst.model);
        std::sort(t.begin(), t.end());
        CHECK(t == ids(inst.graph, {"v1", "v2", "v4", "Q1.2"}));
        CHECK(verify_certificate(inst.graph, terminal_k4pp(inst.graph, inst.model)));
    }
    SUBCASE("root closest to v3")
    {
        auto inst = pattern_instance(PatternKind::K4pp, {1, 3, 3, 1, 1, 1, 1, 1}, {"v1", "v2", "v4", "Q2.2", "Q3.2"});
        auto c = terminal_k4pp(inst.graph, inst.model);
        CHECK(hitting(c) == ids(inst.graph, {"v1", "v2", "v4", "Q2.2"}));
        CHECK(verify_certificate(inst.graph, c));
    }
    SUBCASE("equal distances prefer Q2")
    {
        auto inst = pattern_instance(PatternKind::K4pp, {1, 3, 3, 1, 1, 1, 1, 1}, {"v1", "v2", "v4", "Q2.2", "Q3.1"});
        CHECK(hitting(terminal_k4pp(inst.graph, inst.model)) == ids(inst.graph, {"v1", "v2", "v4", "Q2.2"}));
    }
    SUBCASE("no extra root")
    {
        auto inst = pattern_instance(PatternKind::K4pp, {1, 2, 2, 2, 2, 2, 2, 2}, {"v1", "v2", "v4"});
        auto c = terminal_k4pp(inst.graph, inst.model);
        CHECK(hitting(c) == ids(inst.graph, {"v1", "v2", "v4"}));
        CHECK(tau_exact(inst.graph, 4).value <= 3);
    }
}

TEST_CASE("terminal K4ppp")
{
    // P1, P2, P3, Q1, Q2, Q3, R1, R2
    auto inst = pattern_instance(PatternKind::K4ppp, {2, 2, 2, 2, 2, 2, 2, 2}, {"v1", "v2", "v3", "v4"});
    auto r = terminal_k4ppp(inst.graph, inst.model);
    REQUIRE(std::holds_alternative<Certificate>(r));
    CHECK(hitting(std::get<Certificate>(r)) == ids(inst.graph, {"v1", "v2", "v3", "v4"}));

    SUBCASE("attachment from P1 to Q3")
    {
        RootedGraph g = inst.graph;
        add_root_detour(g, "P1.1", "Q3.1");
        Trace trace;
        auto m = model_of(terminal_k4ppp(g, inst.model, &trace));
        CHECK(m.kind == PatternKind::K33plus);
        CHECK(validate_model(g, m));
        REQUIRE(trace.size() == 1);
        CHECK(trace[0].result == "upgrade");
    }
    SUBCASE("extra triangle")
    {
        RootedGraph g = inst.graph;
        add_rooted_triangle(g);
        auto pr = terminal_k4ppp(g, inst.model);
        REQUIRE(std::holds_alternative<Certificate>(pr));
        check_packing(g, std::get<Certificate>(pr));
        CHECK(mu_exact(g, 2).value == 2);
    }
}

TEST_CASE("upgrade_k4")
{
    // E12, E13, E14, E23, E24, E34
    auto inst = pattern_instance(PatternKind::K4, {2, 2, 2, 2, 2, 2}, {"E12.1", "E13.1", "E34.1"});
    auto r = upgrade_k4(inst.graph, inst.model);
    REQUIRE(std::holds_alternative<Certificate>(r));
    auto t = hitting(std::get<Certificate>(r));
    CHECK(t.size() <= 3);
    CHECK(verify_certificate(inst.graph, std::get<Certificate>(r)));

    add_root_detour(inst.graph, "v1", "v2");
    Trace trace;
    r = upgrade_k4(inst.graph, inst.model, &trace);
    REQUIRE(trace.size() >= 2);
    CHECK(trace[0].pattern == "K4");
    CHECK(trace[0].result == "upgrade");
    CHECK(trace[1].pattern == "K4plus");
    if (auto* c = std::get_if<Certificate>(&r))
        CHECK(verify_certificate(inst.graph, *c));
    for (const auto& s : trace)
        CHECK(s.t.size() <= 4);
}

TEST_CASE("upgrade_w4")
{
    // Q1..Q4 rim, R1..R4 spokes
    SUBCASE("rim vertex to the opposite spoke")
    {
        auto inst = pattern_instance(PatternKind::W4, {1, 1, 1, 1, 1, 1, 1, 2}, {"w", "v1"});
        add_root_detour(inst.graph, "v2", "R4.1");
        auto m = model_of(upgrade_w4(inst.graph, inst.model));
        CHECK(m.kind == PatternKind::K33plus);
        CHECK(validate_model(inst.graph, m));
    }
    SUBCASE("hub to a rim interior")
    {
        auto inst = pattern_instance(PatternKind::W4, {1, 2, 1, 1, 1, 1, 1, 1}, {"v1", "v3"});
        add_root_detour(inst.graph, "w", "Q2.1");
        auto m = model_of(upgrade_w4(inst.graph, inst.model));
        CHECK(m.kind == PatternKind::W5);
        CHECK(validate_model(inst.graph, m));
    }
    SUBCASE("two spoke interiors")
    {
        auto inst = pattern_instance(PatternKind::W4, {1, 1, 1, 1, 1, 2, 1, 2}, {"v1", "v3"});
        add_root_detour(inst.graph, "R2.1", "R4.1");
        auto r = upgrade_w4(inst.graph, inst.model);
        REQUIRE(std::holds_alternative<Certificate>(r));
        check_packing(inst.graph, std::get<Certificate>(r));
    }
    SUBCASE("nothing left after the small hitting set")
    {
        auto inst = pattern_instance(PatternKind::W4, {}, {"v1", "v3"});
        auto r = upgrade_w4(inst.graph, inst.model);
        REQUIRE(std::holds_alternative<Certificate>(r));
        CHECK(hitting(std::get<Certificate>(r)).size() <= 4);
    }
}

TEST_CASE("terminal W4plus")
{
    // P1, P2, Q1, Q2, Q3, Q4, R2, R3, R4
    auto inst = pattern_instance(PatternKind::W4plus, {2, 2, 2, 2, 2, 2, 1, 1, 1}, {"v1", "w"});
    auto r = terminal_w4p(inst.graph, inst.model);
    REQUIRE(std::holds_alternative<Certificate>(r));
    CHECK(hitting(std::get<Certificate>(r)) == ids(inst.graph, {"v1", "w"}));

    auto four = pattern_instance(PatternKind::W4plus, {1, 1, 3, 1, 1, 3, 1, 1, 1}, {"v1", "w", "Q1.1", "Q1.2", "Q4.1", "Q4.2"});
    r = terminal_w4p(four.graph, four.model);
    REQUIRE(std::holds_alternative<Certificate>(r));
    CHECK(hitting(std::get<Certificate>(r)) == ids(four.graph, {"v1", "w", "Q1.2", "Q4.1"}));
    CHECK(verify_certificate(four.graph, std::get<Certificate>(r)));

    RootedGraph g = inst.graph;
    add_root_detour(g, "P1.1", "v3");
    auto m = model_of(terminal_w4p(g, inst.model));
    CHECK(m.kind == PatternKind::K33plus);
    CHECK(validate_model(g, m));
}

TEST_CASE("terminal W4star")
{
    // P1..P3 from w1, Q1..Q3 from w2, R1..R3 the triangle
    auto inst = pattern_instance(PatternKind::W4star, {}, {"v1", "v2", "v3"});
    Certificate c = terminal_w4star(inst.graph, inst.model);
    CHECK(hitting(c) == ids(inst.graph, {"v1", "v2", "v3"}));

    auto longer = pattern_instance(PatternKind::W4star, {3, 3, 3, 3, 3, 3, 3, 3, 3},
                                   {"v1", "v2", "v3", "P1.1", "Q2.2", "R3.1"});
    c = terminal_w4star(longer.graph, longer.model);
    CHECK(hitting(c) == ids(longer.graph, {"v1", "v2", "v3"}));
    CHECK(verify_certificate(longer.graph, c));

    add_rooted_triangle(inst.graph);
    check_packing(inst.graph, terminal_w4star(inst.graph, inst.model));
}

TEST_CASE("terminal W5")
{
    // Q1..Q5 rim, R1..R5 spokes
    auto inst = pattern_instance(PatternKind::W5, {1, 2, 1, 1, 1, 1, 1, 1, 1, 1}, {"w", "Q2.1"});
    Certificate c = terminal_w5(inst.graph, inst.model);
    CHECK(hitting(c) == ids(inst.graph, {"w", "Q2.1"}));

    auto branch = pattern_instance(PatternKind::W5, {}, {"w", "v3"});
    c = terminal_w5(branch.graph, branch.model);
    CHECK(hitting(c) == ids(branch.graph, {"w", "v3"}));
    CHECK(verify_certificate(branch.graph, c));

    RootedGraph g = branch.graph;
    add_root_detour(g, "v1", "v4");
    check_packing(g, terminal_w5(g, branch.model));
    CHECK(brute::mu2(g) == 2);
}

TEST_CASE("terminal K33plus")
{
    // Pi_j for i, j in 1..3, then Q
    std::vector<int> lengths(9, 1);
    lengths.push_back(4);
    auto bare = pattern_instance(PatternKind::K33plus, lengths, {"v1", "v2", "v3"});
    Certificate c = terminal_k33p(bare.graph, bare.model);
    CHECK(hitting(c) == ids(bare.graph, {"v1", "v2", "v3"}));

    auto gated = pattern_instance(PatternKind::K33plus, lengths, {"v1", "v2", "v3", "Q.2", "Q.3"});
    c = terminal_k33p(gated.graph, gated.model);
    CHECK(hitting(c) == ids(gated.graph, {"v1", "v2", "v3", "Q.2"}));
    CHECK(verify_certificate(gated.graph, c));

    add_rooted_triangle(bare.graph);
    check_packing(bare.graph, terminal_k33p(bare.graph, bare.model));
}

TEST_CASE("hit4 on random instances")
{
    std::mt19937_64 rng(99);
    for (int it = 0; it < 300; ++it) {
        RootedGraph g = brute::random_graph(rng, 9, 14);
        auto a = hit4(g, Mode::fallback);
        auto b = hit4(g, Mode::fallback);
        CHECK(format_trace(g, a.trace) == format_trace(g, b.trace));
        CHECK(certificate_to_json(g, a.certificate).dump() == certificate_to_json(g, b.certificate).dump());
        CHECK(verify_certificate(g, a.certificate));
        int mu = brute::mu2(g);
        CHECK(std::holds_alternative<PackingCertificate>(a.certificate) == (mu == 2));
        if (auto* h = std::get_if<HittingCertificate>(&a.certificate)) {
            CHECK(h->vertices.size() <= 4);
            CHECK(brute::tau(g, 4) <= static_cast<int>(h->vertices.size()));
        }
        for (const auto& s : a.trace)
            CHECK(s.t.size() <= 4);
        if (mu <= 1) {
            auto s = hit4(g, Mode::strict);
            CHECK(verify_certificate(g, s.certificate));
        }
    }
}

TEST_CASE("figure2 golden trace")
{
    RootedGraph g = figure2();
    auto r = hit4(g, Mode::strict);
    std::string text;
    for (const auto& line : format_trace(g, r.trace))
        text += line + "\n";
    CHECK(text == read_file(SCYCLE_GOLDEN_DIR "/figure2_trace.txt"));
    CHECK(format_step(g, r.trace.back()).find("result=hit") != std::string::npos);
}
