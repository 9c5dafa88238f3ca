#pragma once

#include "scycle/cycle_oracle.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace scycle {

nlohmann::json certificate_to_json(const RootedGraph& g, const Certificate& c,
                                   const std::vector<std::string>* trace = nullptr);

// the cycle through the named vertices in order, choosing the smallest usable edge ids
std::optional<Cycle> resolve_cycle(const RootedGraph& g, const std::vector<VertexId>& seq);

// checks the graph hash, resolves names and cycles, then runs verify_certificate
Verdict verify_certificate_json(const RootedGraph& g, const nlohmann::json& j);

}  // namespace scycle
