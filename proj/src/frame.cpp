#include "hyp3/frame.hpp"

#include <cmath>

namespace hyp3 {

namespace {

struct Quat {
    cplx al, be;
};

Quat qmul(const Quat& x, const Quat& y) {
    return {x.al * y.al - x.be * std::conj(y.be), x.al * y.be + x.be * std::conj(y.al)};
}

Quat qinv(const Quat& x) {
    double n = std::norm(x.al) + std::norm(x.be);
    return {std::conj(x.al) / n, -x.be / n};
}

Quat qscale(cplx s, const Quat& x) { return qmul(Quat{s, 0.0}, x); }

// derivative of w -> (aw+b)(cw+d)^-1 at w in direction eta
Quat differential(const Isometry& g, const Quat& w, const Quat& eta) {
    Quat q{g.c * w.al + g.d, g.c * w.be};
    Quat qi = qinv(q);
    Quat t1 = qmul(qscale(g.a, eta), qi);
    Quat num{g.a * w.al + g.b, g.a * w.be};
    Quat t2 = qmul(qmul(qmul(num, qi), qscale(g.c, eta)), qi);
    return {t1.al - t2.al, t1.be - t2.be};
}

} // namespace

Isometry gen_A(cplx w) {
    return unit_sl2(std::exp(w), 0.0, 0.0, std::exp(-w));
}

Isometry gen_B(double theta) {
    return unit_sl2(std::cos(theta / 2), std::sin(theta / 2),
                    -std::sin(theta / 2), std::cos(theta / 2));
}

Isometry generator(GenKind kind, cplx w) {
    if (kind == GenKind::A) return gen_A(w);
    if (std::abs(w.imag()) > 1e-12)
        throw GeomError(GeomError::Kind::NonRealAngle, "generator: B with nonzero imaginary part");
    return gen_B(w.real());
}

Isometry gen_Y(cplx t) {
    return unit_sl2(std::cosh(t / 2.0), std::sinh(t / 2.0), std::sinh(t / 2.0), std::cosh(t / 2.0));
}

cplx y_parameter(const Isometry& g, double eps) {
    Isometry gc = sign_normalize(g);
    cplx e_half = gc.a + gc.b; // e^{t/2} for Y(t)
    if (std::abs(e_half) < 1e-300)
        throw GeomError(GeomError::Kind::NotSemiLinear, "y_parameter: singular transport");
    cplx t = 2.0 * std::log(e_half);
    if (entry_distance(gen_Y(t), gc) > eps)
        throw GeomError(GeomError::Kind::NotSemiLinear, "y_parameter: transport is not a Y-flow");
    return t;
}

double frame_metric(const Isometry& g) {
    double plus = std::sqrt(std::norm(g.a - 1.0) + std::norm(g.b) + std::norm(g.c) + std::norm(g.d - 1.0));
    double minus = std::sqrt(std::norm(g.a + 1.0) + std::norm(g.b) + std::norm(g.c) + std::norm(g.d + 1.0));
    return std::min(plus, minus);
}

FrameVectors frame_vectors(const Frame& f) {
    Quat j{0.0, 1.0};
    Quat u0{0.0, 1.0}; // tangent up
    Quat v0{1.0, 0.0}; // normal in x-direction
    Quat qj{f.g.c * j.al + f.g.d, f.g.c * j.be};
    (void)qj;
    Quat num{f.g.a * j.al + f.g.b, f.g.a * j.be};
    Quat den{f.g.c * j.al + f.g.d, f.g.c * j.be};
    Quat p = qmul(num, qinv(den));
    Quat du = differential(f.g, j, u0);
    Quat dv = differential(f.g, j, v0);
    return {H3Point{p.al, p.be.real()}, du.al, du.be.real(), dv.al, dv.be.real()};
}

Geodesic frame_u_geodesic(const Frame& f) {
    return mobius_apply(f.g, Geodesic{SpherePoint::at(0.0), SpherePoint::inf()});
}

Geodesic frame_v_geodesic(const Frame& f) {
    return mobius_apply(f.g, Geodesic{SpherePoint::at(-1.0), SpherePoint::at(1.0)});
}

} // namespace hyp3
