#pragma once

#include <string>
#include <vector>

#include "hyp3/matching.hpp"

namespace hyp3 {

// ---- matrix multiplication estimate ----------------------------------------

struct ProductEstimate {
    double lhs;        // operator-norm difference of the ordered products
    double sum_lhs;    // same for the sums, as the statement prints
    double bound;      // 12 e^{A+2B} B eps
    bool product_ok;   // lhs <= bound
    bool sum_ok;       // sum_lhs <= bound
};

// Compares prod_i Y(b_i) X(a_i) Y(-b_i) against the primed sequence under the
// hypotheses  sum |a_i| e^{|b_i|} <= B,  2 |a_i| e^{|Re b_i| + 1} <= A,
// |b_i - b'_i| < eps,  |a_i - a'_i| < eps |a_i|.  Throws HypothesisViolated
// naming the first failing condition.
ProductEstimate product_estimate(const std::vector<cplx>& a, const std::vector<cplx>& b,
                                 const std::vector<cplx>& ap, const std::vector<cplx>& bp,
                                 double A, double B, double eps);

// ---- geodesic sequences -----------------------------------------------------

struct GeodesicSequence {
    std::vector<Geodesic> geodesics;
};

// Derived data of a semi-linear sequence: u[i] is the transport parameter
// across the common orthogonal eta_i from gamma_i to gamma_{i+1}; v[i] the
// Y-offset along gamma_i between the feet of eta_{i-1} and eta_i (defined for
// 1 <= i <= n-2); foot_near[i]/foot_far[i] the foot frames of eta_i on
// gamma_i and gamma_{i+1}. Frames carry the geodesic on their v-axis and eta
// on their u-axis.
struct SequenceData {
    std::vector<cplx> u;
    std::vector<cplx> v;
    std::vector<Frame> foot_near, foot_far;
};

SequenceData derive_sequence_data(const GeodesicSequence& seq);

// homologous frames x_{i+1} = x_i Y(b_i) X(u_i) Y(-b_i), b_i the Y-offset
// from x_i to the foot of eta_i on gamma_i
std::vector<Frame> homologous_frames(const GeodesicSequence& seq, const Frame& x0);

struct SequenceParams {
    double R{10.0};
    double B{2.0};
    double eps{1e-3};
    double Bminus{0.5};
    double Bplus{4.0};
    double K{1.5};
};

struct ConditionReport {
    std::string name;
    bool pass;
    double margin;
};

struct SequenceChecks {
    std::vector<ConditionReport> well_matched; // conditions 1-4 between seq, seq'
    std::vector<ConditionReport> related;      // conditions 1-3 between seq, seq''
    bool lemma717_applicable{false};
    double lemma717_lhs{0.0};   // |sum v_i| on the linear sequence
    double lemma717_bound{0.0}; // D + 2 ln D - ln u_0 - ln u_{n-1} + 3
};

SequenceChecks sequence_checks(const GeodesicSequence& seq, const GeodesicSequence& seq_p,
                               const GeodesicSequence& seq_pp, const SequenceParams& par);

// d(x0 -> xn, x0' -> xn') via homologous transport on both sides
double endpoint_distortion(const GeodesicSequence& seq, const GeodesicSequence& seq_p,
                           const Frame& x0, const Frame& x0p);

// ---- perfect model ----------------------------------------------------------

struct ScanResult {
    Assembly model;
    double max_distortion;
    int frame_count;
    long pair_count;
};

// Replaces every pants by the (R_i)-perfect pants and every gluing shear by
// s_i, lifts both assemblies over the same spanning tree of the universal
// cover out to frame distance D from the base frame, and returns the largest
// d(u->v, e(u)->e(v)) over model frame pairs with d(u, v) < D. The overload
// without explicit targets reads them off the assembly's own curve data.
ScanResult perfect_model_scan(const Assembly& asmb, double D, const std::array<cplx, 3>& target_hl,
                              const std::array<cplx, 3>& target_shear, bool parallel = true);
ScanResult perfect_model_scan(const Assembly& asmb, double D, bool parallel = true);

// ---- quasisymmetry ----------------------------------------------------------

struct CrossRatioWindow {
    double modulus_min{0.1};
    double modulus_max{10.0};
    double exclusion{0.05}; // radius around the degenerate values 0 and 1

    bool contains(cplx cr) const;
};

cplx cross_ratio(cplx z1, cplx z2, cplx z3, cplx z4);

// max cross-ratio displacement over quadruples with source cross-ratio in the
// window; exhaustive when C(n,4) is small, deterministic stride otherwise
double quasisymmetry_defect(const std::vector<std::pair<cplx, cplx>>& pairs,
                            const CrossRatioWindow& window);

} // namespace hyp3
