#pragma once

#include "hyp3/report.hpp"
#include "hyp3/rng.hpp"

namespace hyp3 {

struct SuiteOptions {
    std::uint64_t seed{42};
    int trials{0}; // 0 = suite default
    bool parallel{true};
    std::map<std::string, double> params; // suite-specific overrides
};

std::vector<std::string> suite_names();

// Runs the named verification suite; throws UnknownSuite / BadParams.
Report run_suite(const std::string& name, const SuiteOptions& opt);

// helpers shared with tests
Isometry random_loxodromic(Rng& rng);
FramedCycle random_tame_cycle(Rng& rng, double L, double d, double Delta, int m);
GeodesicSequence random_semilinear(Rng& rng, int count, double R, double Bminus, double Bplus);

} // namespace hyp3
