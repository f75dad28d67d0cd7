#pragma once

#include "hyp3/segment.hpp"

namespace hyp3 {

// I(theta) = 2 ln sec(theta/2) for a bending angle theta in [0, pi)
double angle_inefficiency(double theta);

// I_l(d) + i I_phi(d): length inefficiency Re(2d) - 2 ln|sinh d| and phase
// inefficiency Im(2d) - 2 Arg(sinh d), for a detour of complex half-length d
cplx complex_inefficiency(cplx d);

struct ClosurePrediction {
    ComplexLength actual;    // closed_length of the cycle
    double predicted_length; // sum of lengths minus sum of I_l(d_i)
    double predicted_phase;  // sum of phases minus sum of I_phi(d_i), mod 2pi
    double residual_length;
    double residual_phase; // distance from 0 in R/2piZ, valued [0, pi]
};

// Sum-of-inefficiencies prediction for a continuous cycle with 2m segments;
// the even segments (1-based) are the detours with complex length 2 d_i.
ClosurePrediction predict_closure(const FramedCycle& c);

} // namespace hyp3
