#pragma once

#include <utility>

#include "hyp3/isometry.hpp"

namespace hyp3 {

// The frame bundle of H^3 identified with PSL(2,C) through the base frame
// Psi0 = <(0,1),(0,1),(1,0)>; the frame carried by g is Psi0 . g.
struct Frame {
    Isometry g;

    static Frame base() { return {Isometry::identity()}; }
};

enum class GenKind { A, B };

// A(w) = diag(e^w, e^-w). Right action by A(x) translates the base point by
// hyperbolic distance 2x along u; A(iy) rotates the normal v by 2y.
Isometry gen_A(cplx w);

// B(theta) rotates along u0 x v0; theta must be real.
Isometry gen_B(double theta);

Isometry generator(GenKind kind, cplx w);

// one-parameter flows used by the transport calculus: X(t) = A(t/2) slides a
// frame along its u-axis by t; Y(t) = B(pi/2) X(t) B(-pi/2) slides along the
// v-axis by t (both rotate the complementary plane by Im t).
inline Isometry gen_X(cplx t) { return gen_A(t / 2.0); }
Isometry gen_Y(cplx t);

// extract t with g = Y(t) up to sign; throws NotSemiLinear when g is not a
// v-axis translation within eps
cplx y_parameter(const Isometry& g, double eps = 1e-8);

inline Frame right_act(const Frame& f, const Isometry& h) { return {f.g * h}; }

// u -> v, the unique isometry with u . (u->v) = v
inline Isometry frame_to(const Frame& u, const Frame& v) { return u.g.inverse() * v.g; }

// quasi-metric d(g) = min(||G - I||_F, ||G + I||_F) over the two SL(2,C) lifts
double frame_metric(const Isometry& g);

inline std::pair<Isometry, double> displacement_metric(const Frame& u, const Frame& v) {
    Isometry t = frame_to(u, v);
    return {t, frame_metric(t)};
}

// d(u->v, e(u)->e(v)) for transports t1 = u->v, t2 = e(u)->e(v)
inline double transport_distance(const Isometry& t1, const Isometry& t2) {
    return frame_metric(t1.inverse() * t2);
}

// Explicit vectors of the frame Psi0 . g: base point plus the hyperbolic-unit
// tangent u and normal v in upper half-space coordinates (dz, dt).
struct FrameVectors {
    H3Point p;
    cplx u_z; double u_t;
    cplx v_z; double v_t;
};

FrameVectors frame_vectors(const Frame& f);

// the frame's u-axis (image of (0, inf)) and v-axis (image of (-1, 1))
Geodesic frame_u_geodesic(const Frame& f);
Geodesic frame_v_geodesic(const Frame& f);

} // namespace hyp3
