#include "scycle/rg_format.hpp"

#include "scycle/errors.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>
#include <vector>

namespace scycle {

RootedGraph parse_rg(std::string_view text)
{
    RootedGraph g;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        auto lookup = [&](const std::string& id) {
            auto v = g.find(id);
            if (!v)
                throw ParseError(lineno, "undeclared vertex '" + id + "'");
            return *v;
        };
        const std::string& d = tok[0];
        if (d == "vertex") {
            if (tok.size() != 2)
                throw ParseError(lineno, "expected: vertex <id>");
            if (g.find(tok[1]))
                throw ParseError(lineno, "duplicate vertex '" + tok[1] + "'");
            g.add_vertex(tok[1]);
        } else if (d == "edge") {
            if (tok.size() != 3)
                throw ParseError(lineno, "expected: edge <u> <v>");
            g.add_edge(lookup(tok[1]), lookup(tok[2]));
        } else if (d == "root") {
            if (tok.size() != 2)
                throw ParseError(lineno, "expected: root <id>");
            g.set_root(lookup(tok[1]));
        } else {
            throw ParseError(lineno, "unknown directive '" + d + "'");
        }
    }
    return g;
}

RootedGraph read_rg_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_rg(ss.str());
}

std::string write_rg(const RootedGraph& g)
{
    std::string out;
    for (VertexId v : g.vertices())
        out += "vertex " + g.name(v) + "\n";
    for (EdgeId e : g.edges())
        out += "edge " + g.name(g.edge(e).u) + " " + g.name(g.edge(e).v) + "\n";
    for (VertexId v : g.roots())
        out += "root " + g.name(v) + "\n";
    return out;
}

std::string graph_hash(const RootedGraph& g)
{
    std::string text = write_rg(g);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

}  // namespace scycle
