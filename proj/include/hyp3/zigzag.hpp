#pragma once

#include <array>

#include "hyp3/segment.hpp"

namespace hyp3 {

// Closed-form holonomy of a 4-segment zigzag cycle. l1, l3 are the half
// lengths of the long segments; l2, l4 are the detour offsets hl(s_2i) - i pi/2.
// Entries before canonical sign:
//   a = e^{l1}( e^{l3} cosh l2 cosh l4 - e^{-l3} sinh l2 sinh l4)
//   b = e^{l1}( e^{l3} cosh l2 sinh l4 - e^{-l3} sinh l2 cosh l4)
//   c = e^{-l1}(e^{-l3} cosh l2 sinh l4 - e^{l3} sinh l2 cosh l4)
//   d = e^{-l1}(e^{-l3} cosh l2 cosh l4 - e^{l3} sinh l2 sinh l4)
std::array<cplx, 4> zigzag_entries(cplx l1, cplx l2, cplx l3, cplx l4);

Isometry zigzag_holonomy(cplx l1, cplx l2, cplx l3, cplx l4);

// the generator-word cycle for the same parameters
FramedCycle zigzag_cycle(cplx l1, cplx l2, cplx l3, cplx l4);

// distance from the base point (0,1) (the lift of the first joint) to the
// holonomy axis, through the fixed points z1 = b/(lambda-a), z2 = b lambda/(1-a lambda)
// and sinh(D) = |(1 + z1 conj(z2)) / (z1 - z2)|
double zigzag_axis_distance(cplx l1, cplx l2, cplx l3, cplx l4);

struct ZigzagBounds {
    double coarse;  // 48 eps + 8 e^{-2L}, the sinh(D) bound
    double refined; // B e^{-R/2} regime marker for (R/2, C e^{-R/2})-zigzags
};
ZigzagBounds zigzag_bounds(double L, double eps, double R, double B);

// Sampled symmetric Hausdorff estimate between the broken-path carrier of a
// zigzag cycle and its holonomy axis. The four joints and their projections
// are always probed; point-to-curve distances are evaluated in closed form,
// so refining n over nested sample sets never increases the estimate.
double hausdorff_oracle(const FramedCycle& c, int n_samples);

} // namespace hyp3
