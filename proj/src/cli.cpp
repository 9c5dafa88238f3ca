#include "scycle/cli.hpp"

#include "scycle/certificate_json.hpp"
#include "scycle/constructor.hpp"
#include "scycle/errors.hpp"
#include "scycle/instances.hpp"
#include "scycle/rg_format.hpp"
#include "scycle/stress.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace scycle::cli {

namespace {

const char* kFormats = R"(Graph files (.rg), one directive per line, '#' starts a comment:
  vertex <id>      declare a vertex
  edge <u> <v>     add an edge (repeat for parallel edges; 'edge x x' is a loop)
  root <id>        put a vertex into S
Certificates are JSON objects:
  {"type": "packing"|"hitting", "cycles": [[ids...]...], "vertices": [ids...],
   "graph_hash": "<sha256 of the canonical .rg text>", "trace": [...] (hit4 --trace)}
Exit codes: 0 ok, 1 verification failure, 2 parse or contract error, 3 budget exceeded.)";

struct Failure {
    int code;
    std::string message;
};

RootedGraph load(const std::string& path, std::istream& in)
{
    if (path == "-") {
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_rg(ss.str());
    }
    return read_rg_file(path);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw Failure{2, "cannot write " + path};
    f << text;
}

RootedGraph generate(const std::string& what)
{
    if (what == "figure2")
        return figure2();
    if (what == "k5")
        return k5();
    if (what.rfind("pattern:", 0) == 0) {
        auto kind = pattern_from_name(what.substr(8));
        if (!kind)
            throw Failure{2, "unknown pattern " + what.substr(8)};
        const PatternGraph& h = pattern(*kind);
        std::vector<int> lengths(h.edges.size(), 2);
        std::vector<std::string> roots;
        for (const auto& e : h.edges)
            roots.push_back(e.label + ".1");
        return pattern_instance(*kind, lengths, roots).graph;
    }
    throw Failure{2, "unknown generator " + what};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rooted-graph S-cycle packing and hitting certificates", "scycle"};
    app.footer(kFormats);
    app.require_subcommand(1);

    std::string input = "-", output, cert_path, mode = "fallback", gen_what;
    int cap = 2, bound = 4, count = 1000, max_n = 12;
    std::uint64_t seed = 1;
    bool trace = false;

    auto* mu = app.add_subcommand("mu", "maximum number of disjoint S-cycles, capped");
    mu->add_option("-i,--input", input, "graph file, '-' for stdin");
    mu->add_option("--cap", cap, "cap (1, 2 or 3)");
    mu->add_option("-o,--output", output, "packing certificate JSON");

    auto* tau = app.add_subcommand("tau", "minimum S-cycle hitting set, up to a bound");
    tau->add_option("-i,--input", input, "graph file, '-' for stdin");
    tau->add_option("--bound", bound, "largest set size tried (at most 6)");
    tau->add_option("-o,--output", output, "hitting certificate JSON");

    auto* h4 = app.add_subcommand("hit4", "two disjoint S-cycles or a hitting set of size at most 4");
    h4->add_option("-i,--input", input, "graph file, '-' for stdin");
    h4->add_option("--mode", mode, "strict or fallback")->check(CLI::IsMember({"strict", "fallback"}));
    h4->add_option("-o,--output", output, "certificate JSON (default stdout)");
    h4->add_flag("--trace", trace, "print the pipeline steps and embed them in the JSON");

    auto* ver = app.add_subcommand("verify", "check a certificate against a graph");
    ver->add_option("-i,--input", input, "graph file, '-' for stdin");
    ver->add_option("-c,--certificate", cert_path, "certificate JSON")->required();

    auto* gen = app.add_subcommand("gen", "write a built-in graph");
    gen->add_option("what", gen_what, "figure2, k5 or pattern:NAME")->required();
    gen->add_option("-o,--output", output, "output file (default stdout)");

    auto* cat = app.add_subcommand("catalog", "write every pattern graph as .rg files");
    cat->add_option("-o,--output", output, "output directory")->required();

    auto* st = app.add_subcommand("stress", "cross-check hit4 against the exact oracles on random graphs");
    st->add_option("--seed", seed, "first seed");
    st->add_option("--count", count, "number of instances");
    st->add_option("--max-n", max_n, "largest vertex count");
    std::string family = "random";
    st->add_option("--family", family, "random graphs, or structured: subdivided patterns plus a few extra edges")
        ->check(CLI::IsMember({"random", "structured"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*mu) {
            RootedGraph g = load(input, in);
            MuResult r = mu_exact(g, cap);
            out << r.value << "\n";
            if (!output.empty())
                write_text(output, certificate_to_json(g, r.packing).dump(2) + "\n", out);
        } else if (*tau) {
            RootedGraph g = load(input, in);
            TauResult r = tau_exact(g, bound);
            if (!r.value) {
                out << "exceeds bound\n";
            } else {
                out << *r.value << "\n";
                if (!output.empty())
                    write_text(output, certificate_to_json(g, r.hitting).dump(2) + "\n", out);
            }
        } else if (*h4) {
            RootedGraph g = load(input, in);
            Hit4Result r = hit4(g, mode == "strict" ? Mode::strict : Mode::fallback);
            std::vector<std::string> lines = format_trace(g, r.trace);
            if (trace)
                for (const auto& l : lines)
                    err << l << "\n";
            write_text(output, certificate_to_json(g, r.certificate, trace ? &lines : nullptr).dump(2) + "\n", out);
        } else if (*ver) {
            RootedGraph g = load(input, in);
            std::ifstream f(cert_path);
            if (!f)
                throw Failure{2, "cannot open " + cert_path};
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(f);
            } catch (const nlohmann::json::exception& e) {
                throw Failure{1, std::string("malformed certificate: ") + e.what()};
            }
            Verdict v = verify_certificate_json(g, j);
            if (!v)
                throw Failure{1, v.diagnostic};
            out << "ok\n";
        } else if (*gen) {
            write_text(output, write_rg(generate(gen_what)), out);
        } else if (*cat) {
            std::filesystem::create_directories(output);
            for (PatternKind k : all_patterns()) {
                const PatternGraph& h = pattern(k);
                std::string text = write_rg(h.to_graph(false));
                text += "# expects |V|=" + std::to_string(h.vertex_count()) + " |E|=" +
                        std::to_string(h.edge_count()) + " nice=" + (is_nice(h) ? "true" : "false") + "\n";
                write_text((std::filesystem::path(output) / (h.name + ".rg")).string(), text, out);
            }
        } else if (*st) {
            StressSummary s = run_stress(seed, count, max_n,
                                         family == "random" ? StressFamily::random : StressFamily::structured);
            out << format_summary(s);
            return s.clean() ? 0 : 1;
        }
    } catch (const Failure& f) {
        err << f.message << "\n";
        return f.code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const StructureViolation& e) {
        err << "structure violation: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace scycle::cli
