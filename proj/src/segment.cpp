#include "hyp3/segment.hpp"

#include <cmath>

namespace hyp3 {

namespace {

// rotation by pi about the normal axis: u -> -u, v -> v
Isometry reversal_rotation() { return canonicalize(0.0, cplx{0.0, 1.0}, cplx{0.0, 1.0}, 0.0); }

// rotation by pi about the tangent axis: u -> u, v -> -v
Isometry flip_rotation() { return gen_A(cplx{0.0, pi / 2}); }

} // namespace

FramedSegment transform(const FramedSegment& s, SegTransform kind) {
    switch (kind) {
        case SegTransform::Reverse:
            return {right_act(s.terminal(), reversal_rotation()), s.w};
        case SegTransform::Flip:
            return {right_act(s.start, flip_rotation()), s.w};
        case SegTransform::ReverseFlip:
            return transform(transform(s, SegTransform::Reverse), SegTransform::Flip);
    }
    return s;
}

ComplexLength measure_segment(const Frame& start, const Frame& terminal) {
    Isometry g = frame_to(start, terminal);
    if (std::abs(g.b) > 1e-9 || std::abs(g.c) > 1e-9)
        throw GeomError(GeomError::Kind::NotClosable, "measure_segment: transport is not an A-flow");
    cplx h = std::log(g.a); // g = A(h) up to sign, h = w/2
    return ComplexLength{2.0 * h.real(), 2.0 * h.imag()};
}

FramedCycle FramedCycle::continuous(std::vector<ComplexLength> ws) {
    FramedCycle c;
    c.joints.assign(ws.size(), Joint{});
    c.segments = std::move(ws);
    return c;
}

Isometry cycle_holonomy(const FramedCycle& c) {
    if (c.segments.empty())
        throw GeomError(GeomError::Kind::BadParams, "cycle_holonomy: empty cycle");
    Isometry x = Isometry::identity();
    for (std::size_t i = 0; i < c.segments.size(); ++i) {
        x = x * gen_A(c.segments[i].value() / 2.0);
        if (i < c.joints.size()) {
            const Joint& j = c.joints[i];
            if (j.psi != 0.0) x = x * gen_A(cplx{0.0, j.psi / 2.0});
            if (j.theta != 0.0) x = x * gen_B(j.theta);
        }
    }
    return x;
}

ComplexLength closed_length(const FramedCycle& c) {
    Isometry x = cycle_holonomy(c);
    if (classify(x) != IsometryClass::Loxodromic)
        throw GeomError(GeomError::Kind::NotClosable, "closed_length: holonomy not loxodromic");
    ComplexLength hl = half_length(x);
    return ComplexLength{2.0 * hl.re, 2.0 * hl.im};
}

TamenessReport tameness_check(const FramedCycle& c, const TamenessParams& p) {
    TamenessReport r;
    const std::size_t m = c.segments.size();
    if (m == 0) return r;

    double min_len = c.segments[0].re;
    for (const auto& w : c.segments) min_len = std::min(min_len, w.re);
    bool bends_ok = true;
    for (const auto& j : c.joints) bends_ok = bends_ok && circle_distance(j.theta) < p.theta;
    r.L_theta_tame = bends_ok && min_len > 2.0 * p.L;

    bool continuous = true;
    for (const auto& j : c.joints)
        continuous = continuous && std::abs(j.theta - pi / 2) <= 1e-12 && std::abs(j.psi) <= 1e-12;

    // 1-based convention: odd segments are the long ones
    double min_odd = 1e300, max_even = -1e300, max_logsinh = 0.0, max_dev = 0.0;
    bool have_even = m % 2 == 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (i % 2 == 0) {
            min_odd = std::min(min_odd, c.segments[i].re);
        } else {
            max_even = std::max(max_even, c.segments[i].re);
            cplx half = c.segments[i].value() / 2.0;
            double s = std::abs(std::sinh(half));
            max_logsinh = std::max(max_logsinh, std::abs(std::log(s)));
            double dr = c.segments[i].re;
            double di = circle_distance(c.segments[i].im - pi);
            max_dev = std::max(max_dev, std::sqrt(dr * dr + di * di));
        }
    }
    r.min_odd_length = min_odd;
    r.max_even_length = have_even ? max_even : 0.0;
    r.max_log_sinh = have_even ? max_logsinh : 0.0;
    r.max_zigzag_dev = have_even ? max_dev : 0.0;
    r.L_d_Delta_tame = continuous && have_even && min_odd > 2.0 * p.L && max_even <= 2.0 * p.d &&
                       max_logsinh <= p.Delta;
    r.zigzag = continuous && m == 4 && min_odd > 2.0 * p.L && max_dev < 2.0 * p.eps;
    return r;
}

} // namespace hyp3
