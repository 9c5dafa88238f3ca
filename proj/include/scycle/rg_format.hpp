#pragma once

#include "scycle/graph.hpp"

#include <string>
#include <string_view>

namespace scycle {

RootedGraph parse_rg(std::string_view text);
RootedGraph read_rg_file(const std::string& path);

// canonical text: vertices, then edges, then roots, each in ascending id order
std::string write_rg(const RootedGraph& g);

// hex SHA-256 of write_rg(g)
std::string graph_hash(const RootedGraph& g);

}  // namespace scycle
