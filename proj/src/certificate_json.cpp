#include "scycle/certificate_json.hpp"

#include "scycle/rg_format.hpp"

namespace scycle {

using nlohmann::json;

json certificate_to_json(const RootedGraph& g, const Certificate& c, const std::vector<std::string>* trace)
{
    json j;
    json cycles = json::array();
    json vertices = json::array();
    if (const auto* h = std::get_if<HittingCertificate>(&c)) {
        j["type"] = "hitting";
        for (VertexId v : h->vertices)
            vertices.push_back(g.name(v));
    } else {
        j["type"] = "packing";
        for (const Cycle& cy : std::get<PackingCertificate>(c).cycles) {
            json names = json::array();
            for (VertexId v : cy.vertices)
                names.push_back(g.name(v));
            cycles.push_back(names);
        }
    }
    j["cycles"] = cycles;
    j["vertices"] = vertices;
    j["graph_hash"] = graph_hash(g);
    if (trace)
        j["trace"] = *trace;
    return j;
}

std::optional<Cycle> resolve_cycle(const RootedGraph& g, const std::vector<VertexId>& seq)
{
    std::size_t k = seq.size();
    if (k == 0)
        return std::nullopt;
    Cycle c{seq, {}};
    if (k == 1) {
        auto loops = g.edges_between(seq[0], seq[0]);
        if (loops.empty())
            return std::nullopt;
        c.edges.push_back(loops.front());
    } else if (k == 2) {
        auto es = g.edges_between(seq[0], seq[1]);
        if (es.size() < 2)
            return std::nullopt;
        c.edges = {es[0], es[1]};
    } else {
        for (std::size_t i = 0; i < k; ++i) {
            auto es = g.edges_between(seq[i], seq[(i + 1) % k]);
            if (es.empty() || seq[i] == seq[(i + 1) % k])
                return std::nullopt;
            c.edges.push_back(es.front());
        }
    }
    if (!is_valid_cycle(g, c))
        return std::nullopt;
    return c;
}

Verdict verify_certificate_json(const RootedGraph& g, const json& j)
{
    try {
        if (!j.is_object())
            return Verdict::fail("certificate is not a JSON object");
        if (!j.contains("graph_hash") || j.at("graph_hash").get<std::string>() != graph_hash(g))
            return Verdict::fail("graph hash mismatch");
        std::string type = j.at("type").get<std::string>();
        auto id_of = [&](const json& name) -> std::optional<VertexId> { return g.find(name.get<std::string>()); };
        if (type == "hitting") {
            HittingCertificate h;
            for (const json& n : j.at("vertices")) {
                auto v = id_of(n);
                if (!v)
                    return Verdict::fail("unknown vertex " + n.get<std::string>());
                h.vertices.push_back(*v);
            }
            return verify_certificate(g, h);
        }
        if (type == "packing") {
            PackingCertificate p;
            std::size_t idx = 0;
            for (const json& cy : j.at("cycles")) {
                ++idx;
                std::vector<VertexId> seq;
                for (const json& n : cy) {
                    auto v = id_of(n);
                    if (!v)
                        return Verdict::fail("unknown vertex " + n.get<std::string>());
                    seq.push_back(*v);
                }
                auto c = resolve_cycle(g, seq);
                if (!c)
                    return Verdict::fail("cycle " + std::to_string(idx) + " is not a cycle of the graph");
                p.cycles.push_back(*c);
            }
            return verify_certificate(g, p);
        }
        return Verdict::fail("unknown certificate type '" + type + "'");
    } catch (const json::exception& e) {
        return Verdict::fail(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace scycle
