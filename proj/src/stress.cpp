#include "scycle/stress.hpp"

#include "scycle/constructor.hpp"
#include "scycle/instances.hpp"

#include <sstream>

namespace scycle {

namespace {

void fail(StressSummary& s, std::uint64_t seed, const std::string& why)
{
    ++s.mismatches;
    if (s.failures.size() < 10)
        s.failures.push_back("seed " + std::to_string(seed) + ": " + why);
}

}  // namespace

StressSummary run_stress(std::uint64_t seed, int count, int max_n, StressFamily family)
{
    StressSummary s;
    for (int i = 0; i < count; ++i) {
        std::uint64_t sd = seed + static_cast<std::uint64_t>(i);
        RootedGraph g = family == StressFamily::random ? random_instance(stress_spec(sd, max_n))
                                                        : structured_instance(sd);
        ++s.instances;
        int mu = mu_exact(g, 2).value;
        (mu == 0 ? s.mu0 : mu == 1 ? s.mu1 : s.mu2)++;

        Hit4Result fb = hit4(g, Mode::fallback);
        s.oracle_answers += fb.used_oracle;
        Verdict v = verify_certificate(g, fb.certificate);
        if (!v) {
            fail(s, sd, "fallback certificate rejected: " + v.diagnostic);
            continue;
        }
        for (const auto& step : fb.trace)
            if (step.t.size() > 4)
                fail(s, sd, "trace step " + step.step + " tested a set larger than 4");
        if (mu >= 2) {
            if (std::holds_alternative<PackingCertificate>(fb.certificate))
                ++s.packing_verified;
            else
                fail(s, sd, "mu = 2 but hit4 returned a hitting set");
            continue;
        }
        const auto* h = std::get_if<HittingCertificate>(&fb.certificate);
        if (!h) {
            fail(s, sd, "mu <= 1 but hit4 returned a packing");
            continue;
        }
        TauResult tau = tau_exact(g, 4);
        if (h->vertices.size() > 4 || !tau.value || *tau.value > static_cast<int>(h->vertices.size())) {
            fail(s, sd, "hitting set size disagrees with tau");
            continue;
        }
        ++s.hitting_verified;

        ++s.strict_runs;
        try {
            Hit4Result st = hit4(g, Mode::strict);
            s.last_model[pattern_name(st.terminal)]++;
            const auto* hs = std::get_if<HittingCertificate>(&st.certificate);
            if (!verify_certificate(g, st.certificate) || !hs || hs->vertices.size() > 4)
                fail(s, sd, "strict certificate is not a hitting set of size <= 4");
        } catch (const StructureViolation& e) {
            ++s.strict_violations;
            if (s.failures.size() < 10)
                s.failures.push_back("seed " + std::to_string(sd) + ": strict violation: " + e.what());
        }
    }
    return s;
}

std::string format_summary(const StressSummary& s)
{
    std::ostringstream o;
    o << "instances          " << s.instances << "\n"
      << "mu = 0             " << s.mu0 << "\n"
      << "mu = 1             " << s.mu1 << "\n"
      << "mu >= 2            " << s.mu2 << "\n"
      << "hitting verified   " << s.hitting_verified << "\n"
      << "packing verified   " << s.packing_verified << "\n"
      << "oracle answers     " << s.oracle_answers << "\n"
      << "strict runs        " << s.strict_runs << "\n"
      << "strict violations  " << s.strict_violations << "\n"
      << "mismatches         " << s.mismatches << "\n";
    for (const auto& [name, n] : s.last_model)
        o << "  reached " << name << ": " << n << "\n";
    for (const auto& f : s.failures)
        o << "  " << f << "\n";
    return o.str();
}

}  // namespace scycle
