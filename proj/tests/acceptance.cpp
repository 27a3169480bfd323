// Acceptance gate: runs the twelve checks at full grids and prints one
// PASS/FAIL line per criterion.  --only N restricts to a single criterion
// (used by the per-criterion ctest entries).

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "sphi/checks.hpp"

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
    }

    using Fn = sphi::CheckResult (*)(const sphi::CheckOptions&);
    const Fn checks[12] = {
        sphi::check_spot_values,      sphi::check_route_agreement,
        sphi::check_functional_equation, sphi::check_derivative,
        sphi::check_small_a,          sphi::check_phi_properties,
        sphi::check_approximants,     sphi::check_transform_series,
        sphi::check_zero_mapping,     sphi::check_circle_integral,
        sphi::check_decomposition,    sphi::check_no_zero_band};

    const sphi::CheckOptions opt;
    bool all = true;
    for (int i = 0; i < 12; ++i) {
        if (only != 0 && only != i + 1) continue;
        sphi::CheckResult r;
        try {
            r = checks[i](opt);
        } catch (const std::exception& e) {
            r.id = i + 1;
            r.name = "criterion";
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  criterion %2d  %s -- %s\n", r.passed ? "PASS" : "FAIL",
                    i + 1, r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        all = all && r.passed;
    }
    return all ? 0 : 1;
}
