#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace scycle {

struct StressSummary {
    int instances = 0;
    int mu0 = 0, mu1 = 0, mu2 = 0;
    int hitting_verified = 0;
    int packing_verified = 0;
    int strict_runs = 0;
    int strict_violations = 0;
    int oracle_answers = 0;  // fallback runs that needed the exact oracles
    int mismatches = 0;
    std::map<std::string, int> last_model;  // strict runs by the last model reached
    std::vector<std::string> failures;      // first few, for the report

    bool clean() const { return mismatches == 0 && strict_violations == 0; }
};

// Cross-checks hit4 (both modes) against mu_exact and tau_exact on seeded random instances.
enum class StressFamily { random, structured };

StressSummary run_stress(std::uint64_t seed, int count, int max_n, StressFamily family = StressFamily::random);
std::string format_summary(const StressSummary& s);

}  // namespace scycle
