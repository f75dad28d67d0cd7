#pragma once

#include <optional>
#include <vector>

#include "hyp3/pants.hpp"

namespace hyp3 {

// Perfect bipartite matching between positive and negative feet, with an edge
// whenever torsor_distance(foot-, tau(foot+)) < tol. On failure the Hall
// witness is a deficient set of positive-side indices (into FootSet.feet).
struct MatchResult {
    bool feasible{false};
    std::vector<std::pair<int, int>> pairs; // (positive index, negative index)
    std::vector<int> hall_witness;          // deficient set when infeasible
    double max_error{0.0};                  // max matched pair distance
};

MatchResult match_feet(const FootSet& fs, cplx s, double tol);

// exhaustive Hall-condition feasibility for small sets (testing oracle)
bool hall_feasible_bruteforce(const FootSet& fs, cplx s, double tol);

// Axis-aligned rectangle on the torus [0, Re hl) x (-pi, pi], may wrap.
struct TorusRect {
    double x{0.0}, y{0.0}, w{0.0}, h{0.0};
};

// |N_eta(A)| / |A| for a union of rectangles, with the sup-metric eta-growth
// (a grown rectangle is again a rectangle). Exact area by sweep. Throws
// NotApplicable unless |N_eta(A)| <= half the torus area.
struct GrowthResult {
    double area;
    double grown_area;
    double ratio;
    double bound; // 1 + eta / (2 Rbar)
};
GrowthResult neighborhood_growth(const std::vector<TorusRect>& rects, double eta, double Rbar,
                                 cplx hl);

double rect_union_area(const std::vector<TorusRect>& rects, cplx hl);

// Closed assembly: oriented pants copies glued in pairs along curves.
struct PantsNode {
    Pants geometry;
    int orientation{+1};
    std::array<TorsorPoint, 3> foot; // foot on each curve's torsor
};

struct Gluing {
    int node_a{0}, cuff_a{0};
    int node_b{0}, cuff_b{0};
    int curve{0};
    cplx shear{0.0};
    double error{0.0}; // |foot_b - tau(foot_a)|
};

struct Assembly {
    std::vector<PantsNode> nodes;
    std::vector<Gluing> gluings;
    std::array<cplx, 3> curve_hl{};
    std::array<cplx, 3> shear{};

    // every cuff glued exactly once, equal curve half-lengths, opposite
    // orientations across each gluing
    bool validate(double tol = 1e-9) const;
};

// Doubling-trick assembly: each base pants contributes a positive and a
// negative copy; per curve the copies are matched with match_feet against
// tau(v) = v + i pi + s_i. Throws Infeasible naming the curve that fails.
Assembly assemble(const std::vector<Pants>& pool, const std::array<cplx, 3>& shear, double tol,
                  double jitter, std::uint64_t seed);

} // namespace hyp3
