#pragma once

#include <vector>

#include "hyp3/frame.hpp"

namespace hyp3 {

// Oriented framed segment stored intrinsically: a start frame plus the
// complex length w (length Re w >= 0, phase Im w). The terminal frame is
// start . A(w/2); the carrier is the start frame's u-axis arc.
struct FramedSegment {
    Frame start;
    ComplexLength w;

    Frame terminal() const { return right_act(start, gen_A(w.value() / 2.0)); }
};

enum class SegTransform { Reverse, Flip, ReverseFlip };

FramedSegment transform(const FramedSegment& s, SegTransform kind);

// recover w by factoring start^-1 . terminal as A(h); throws if not diagonal
ComplexLength measure_segment(const Frame& start, const Frame& terminal);

// Joint between consecutive segments, realized as A(i psi/2) . B(theta).
// A continuous cycle has theta = pi/2 and psi = 0 at every joint.
struct Joint {
    double theta{pi / 2};
    double psi{0.0};
};

// Cycle of framed segments with joint rotations; the holonomy word is
// prod_i A(w_i / 2) . A(i psi_i / 2) . B(theta_i).
struct FramedCycle {
    std::vector<ComplexLength> segments;
    std::vector<Joint> joints; // joints.size() == segments.size(); joint i follows segment i

    static FramedCycle continuous(std::vector<ComplexLength> ws);
};

Isometry cycle_holonomy(const FramedCycle& c);

// complex length of the reduced cyclic concatenation = 2 half_length(holonomy)
ComplexLength closed_length(const FramedCycle& c);

struct TamenessParams {
    double L{10.0};
    double theta{pi / 2}; // (L, theta)-tameness bound on bending angles
    double d{1.0};
    double Delta{2.0};
    double eps{1e-3}; // zigzag tolerance
};

struct TamenessReport {
    bool L_theta_tame{false};
    bool L_d_Delta_tame{false};
    bool zigzag{false}; // (L, eps)-zigzag; requires 4 segments
    double min_odd_length{0.0};
    double max_even_length{0.0};
    double max_log_sinh{0.0};   // max |ln|sinh(w_even/2)||
    double max_zigzag_dev{0.0}; // max |w_even - i pi| (mod 2 pi i)
};

TamenessReport tameness_check(const FramedCycle& c, const TamenessParams& p);

} // namespace hyp3
