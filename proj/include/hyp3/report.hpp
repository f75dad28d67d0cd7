#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyp3/distortion.hpp"
#include "hyp3/segment.hpp"

namespace hyp3 {

using json = nlohmann::ordered_json;

// Machine-readable verification report; byte-identical for identical
// (suite, params, seed).
struct CaseResult {
    std::string name;
    double margin{0.0};
    bool pass{false};
};

struct Report {
    std::string suite;
    std::uint64_t seed{0};
    int trials{0};
    std::map<std::string, double> params;
    std::vector<CaseResult> results;

    int pass_count() const;
    int fail_count() const;
    double max_violation() const; // most negative margin among failures, 0 if none

    json to_json() const; // carries "schema": 1
    std::string to_csv() const;
};

// wire formats
json isometry_to_json(const Isometry& g);
Isometry isometry_from_json(const json& j);
json complex_length_to_json(const ComplexLength& w);
ComplexLength complex_length_from_json(const json& j);
json cycle_to_json(const FramedCycle& c);
FramedCycle cycle_from_json(const json& j);
json decomposition_to_json(const std::array<ComplexLength, 3>& hl, const std::array<cplx, 3>& shears,
                           const std::array<int, 3>& n, double R);
json assembly_to_json(const Assembly& a);
std::string footset_to_csv(const FootSet& fs);

} // namespace hyp3
