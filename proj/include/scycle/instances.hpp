#pragma once

#include "scycle/subdivision.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace scycle {

RootedGraph figure2();
RootedGraph k5();

struct PatternInstance {
    RootedGraph graph;
    SubdivisionModel model;
};

// Branch vertices take the pattern labels; the k-th inner vertex of path L is "L.k".
// lengths empty means all 1. Roots are given by vertex name.
PatternInstance pattern_instance(PatternKind kind, const std::vector<int>& lengths,
                                 const std::vector<std::string>& roots);

struct RandomSpec {
    std::uint64_t seed = 1;
    int n = 8;
    int m = 12;
    double root_density = 0.3;
    double p_loop = 0.05;
    double p_par = 0.05;
};

RootedGraph random_instance(const RandomSpec& spec);

// the parameters the stress harness draws for a seed
RandomSpec stress_spec(std::uint64_t seed, int max_n);

// A random subdivision of a random catalog pattern with random roots (made an
// S-cycle subgraph) plus up to extra_max random edges or two-edge paths.
RootedGraph structured_instance(std::uint64_t seed, int extra_max = 3);

}  // namespace scycle
