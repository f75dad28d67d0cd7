#include "hyp3/isometry.hpp"

#include <algorithm>
#include <cmath>

namespace hyp3 {

namespace {

// quaternion z + t j represented as (alpha, beta), both complex
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

double chordal(const SpherePoint& p, const SpherePoint& q) {
    if (p.infinite && q.infinite) return 0.0;
    if (p.infinite) return 2.0 / std::sqrt(1.0 + std::norm(q.z));
    if (q.infinite) return 2.0 / std::sqrt(1.0 + std::norm(p.z));
    return 2.0 * std::abs(p.z - q.z) / std::sqrt((1.0 + std::norm(p.z)) * (1.0 + std::norm(q.z)));
}

// Mobius map sending (p, q, r) to (0, inf, 1)
Isometry to_zero_inf_one(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r) {
    cplx a, b, c, d;
    if (p.infinite) { // z -> (r - q)/(z - q)
        a = 0.0; b = r.z - q.z; c = 1.0; d = -q.z;
    } else if (q.infinite) { // z -> (z - p)/(r - p)
        a = 1.0; b = -p.z; c = 0.0; d = r.z - p.z;
    } else if (r.infinite) { // z -> (z - p)/(z - q)
        a = 1.0; b = -p.z; c = 1.0; d = -q.z;
    } else {
        a = r.z - q.z; b = -p.z * (r.z - q.z);
        c = r.z - p.z; d = -q.z * (r.z - p.z);
    }
    return canonicalize(a, b, c, d);
}

} // namespace

Isometry unit_sl2(cplx a, cplx b, cplx c, cplx d) {
    for (cplx e : {a, b, c, d}) {
        if (std::abs(e) > 1e-12) {
            double arg = std::arg(e);
            if (!(arg > -pi / 2 && arg <= pi / 2)) { a = -a; b = -b; c = -c; d = -d; }
            break;
        }
    }
    return Isometry{a, b, c, d};
}

Isometry sign_normalize(const Isometry& m) { return unit_sl2(m.a, m.b, m.c, m.d); }

Isometry canonicalize(cplx a, cplx b, cplx c, cplx d) {
    cplx det = a * d - b * c;
    if (std::abs(det) <= 1e-24)
        throw GeomError(GeomError::Kind::SingularMatrix, "canonicalize: |det| <= 1e-24");
    cplx s = std::sqrt(det);
    return unit_sl2(a / s, b / s, c / s, d / s);
}

Isometry operator*(const Isometry& g, const Isometry& h) {
    return unit_sl2(g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                    g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d);
}

double entry_distance(const Isometry& g, const Isometry& h) {
    return std::max({std::abs(g.a - h.a), std::abs(g.b - h.b),
                     std::abs(g.c - h.c), std::abs(g.d - h.d)});
}

double frobenius(const Isometry& g) {
    return std::sqrt(std::norm(g.a) + std::norm(g.b) + std::norm(g.c) + std::norm(g.d));
}

namespace {

// eigenvalue with |lambda| >= 1 of the given representative (no re-signing)
cplx lam_of(const Isometry& g) {
    cplx tr = g.trace();
    cplx s = std::sqrt(tr * tr - 4.0);
    cplx lam = (tr + s) / 2.0;
    if (std::abs(lam) < 1.0) lam = (tr - s) / 2.0;
    return lam;
}

} // namespace

IsometryClass classify(const Isometry& g, double eps) {
    Isometry id = Isometry::identity();
    Isometry neg{-1.0, 0.0, 0.0, -1.0};
    if (entry_distance(g, id) <= eps || entry_distance(g, neg) <= eps)
        return IsometryClass::Identity;
    cplx tr = g.trace();
    if (std::min(std::abs(tr - 2.0), std::abs(tr + 2.0)) <= eps) return IsometryClass::Parabolic;
    if (std::abs(std::abs(lam_of(g)) - 1.0) <= eps) return IsometryClass::Elliptic;
    return IsometryClass::Loxodromic;
}

static void require_loxodromic(const Isometry& g, const char* who) {
    switch (classify(g)) {
        case IsometryClass::Identity:
            throw GeomError(GeomError::Kind::Identity, std::string(who) + ": identity");
        case IsometryClass::Parabolic:
            throw GeomError(GeomError::Kind::Parabolic, std::string(who) + ": parabolic");
        case IsometryClass::Elliptic:
            throw GeomError(GeomError::Kind::Elliptic, std::string(who) + ": elliptic");
        case IsometryClass::Loxodromic: break;
    }
}

cplx dominant_eigenvalue(const Isometry& m) {
    require_loxodromic(m, "dominant_eigenvalue");
    return lam_of(m);
}

ComplexLength half_length(const Isometry& m) {
    cplx lam = dominant_eigenvalue(m);
    double im = std::arg(lam);
    // fold mod pi into (-pi/2, pi/2]: +-lambda are the same PSL element
    if (im > pi / 2) im -= pi;
    if (im <= -pi / 2) im += pi;
    return ComplexLength{std::log(std::abs(lam)), im};
}

bool sphere_close(const SpherePoint& p, const SpherePoint& q, double eps) {
    return chordal(p, q) <= eps;
}

SpherePoint mobius_apply(const Isometry& g, const SpherePoint& p) {
    if (p.infinite) {
        if (std::abs(g.c) == 0.0) return SpherePoint::inf();
        return SpherePoint::at(g.a / g.c);
    }
    cplx den = g.c * p.z + g.d;
    if (std::abs(den) == 0.0) return SpherePoint::inf();
    return SpherePoint::at((g.a * p.z + g.b) / den);
}

static SpherePoint fixed_point_of(const Isometry& g, cplx mu) {
    // Fixed-point formulas b/(mu-a) and (mu-d)/c; either can lose all
    // precision to cancellation (near-diagonal g), so pick by the residual of
    // c z^2 + (d-a) z - b = 0.
    double scale = std::abs(g.a) + std::abs(g.b) + std::abs(g.c) + std::abs(g.d);
    bool ok1 = std::abs(mu - g.a) > 1e-16 * scale && std::abs(g.b) > 0.0;
    bool ok2 = std::abs(g.c) > 1e-16 * scale;
    if (!ok1 && !ok2) {
        // diagonal-like: fixed points are 0 and inf; eigenvector of a is (1,0)
        return std::abs(mu - g.a) <= std::abs(mu - g.d) ? SpherePoint::inf() : SpherePoint::at(0.0);
    }
    auto residual = [&](cplx z) {
        cplx r = g.c * z * z + (g.d - g.a) * z - g.b;
        double den = std::abs(g.c) * std::norm(z) + std::abs(g.d - g.a) * std::abs(z) + std::abs(g.b);
        return den == 0.0 ? 0.0 : std::abs(r) / den;
    };
    if (ok1 && !ok2) return SpherePoint::at(g.b / (mu - g.a));
    if (!ok1 && ok2) return SpherePoint::at((mu - g.d) / g.c);
    cplx za = g.b / (mu - g.a), zb = (mu - g.d) / g.c;
    return SpherePoint::at(residual(za) <= residual(zb) ? za : zb);
}

Geodesic axis(const Isometry& g) {
    require_loxodromic(g, "axis");
    cplx lam = lam_of(g);
    SpherePoint att = fixed_point_of(g, lam);
    SpherePoint rep = fixed_point_of(g, 1.0 / lam);
    return {rep, att};
}

H3Point apply(const Isometry& g, const H3Point& p) {
    Quat w{p.z, cplx{p.t, 0.0}};
    Quat num{g.a * w.al + g.b, g.a * w.be};
    Quat den{g.c * w.al + g.d, g.c * w.be};
    Quat r = qmul(num, qinv(den));
    return {r.al, r.be.real()};
}

double h3_distance(const H3Point& p, const H3Point& q) {
    double num = std::norm(p.z - q.z) + (p.t - q.t) * (p.t - q.t);
    double arg = num / (2.0 * p.t * q.t);
    return 2.0 * std::asinh(std::sqrt(arg / 2.0));
}

OrthoFrameData common_orthogonal(const Geodesic& g1, const Geodesic& g2) {
    for (const SpherePoint* e1 : {&g1.rep, &g1.att})
        for (const SpherePoint* e2 : {&g2.rep, &g2.att})
            if (sphere_close(*e1, *e2, 1e-12))
                throw GeomError(GeomError::Kind::SharedEndpoint, "common endpoint");
    Isometry T = to_zero_inf_one(g1.rep, g1.att, g2.rep);
    SpherePoint xi = mobius_apply(T, g2.att);
    if (xi.infinite || std::abs(xi.z) < 1e-28 || std::abs(xi.z - 1.0) < 1e-14)
        throw GeomError(GeomError::Kind::SharedEndpoint, "degenerate configuration");
    cplx w = std::sqrt(xi.z);
    cplx Q = (w + 1.0) / (w - 1.0);
    double aq = std::abs(Q);
    bool flip = aq < 1.0 || (aq <= 1.0 + 1e-15 && std::arg(Q) > 1e-15);
    if (flip) { w = -w; Q = 1.0 / Q; }
    Isometry S = canonicalize(1.0, w, 1.0, -w);
    return {S * T, std::log(Q)};
}

ComplexLength complex_distance(const Geodesic& g1, const Geodesic& g2) {
    OrthoFrameData od = common_orthogonal(g1, g2);
    return ComplexLength{od.u.real(), od.u.imag() + pi};
}

Isometry geodesic_normalizer(const Geodesic& gd) {
    cplx a, b, c, d;
    if (gd.rep.infinite) { a = 0.0; b = 1.0; c = 1.0; d = -gd.att.z; }
    else if (gd.att.infinite) { a = 1.0; b = -gd.rep.z; c = 0.0; d = 1.0; }
    else { a = 1.0; b = -gd.rep.z; c = 1.0; d = -gd.att.z; }
    return canonicalize(a, b, c, d);
}

double point_to_geodesic_distance(const H3Point& p, const Geodesic& gd) {
    H3Point q = apply(geodesic_normalizer(gd), p);
    return std::asinh(std::abs(q.z) / q.t);
}

double point_to_axis_distance(const H3Point& p, const Isometry& g) {
    Geodesic ax = axis(g);
    // translate p to (0,1), then apply the boundary-endpoint formula
    double rt = std::sqrt(p.t);
    Isometry U = unit_sl2(1.0 / rt, -p.z / rt, 0.0, rt);
    Geodesic axp = mobius_apply(U, ax);
    double s;
    if (axp.rep.infinite) s = std::abs(axp.att.z);
    else if (axp.att.infinite) s = std::abs(axp.rep.z);
    else s = std::abs((1.0 + axp.rep.z * std::conj(axp.att.z)) / (axp.rep.z - axp.att.z));
    return std::asinh(s);
}

// geodesic through two interior points, as boundary endpoints ordered s1 -> s2
static Geodesic geodesic_through(const H3Point& s1, const H3Point& s2) {
    cplx dz = s2.z - s1.z;
    double L = std::abs(dz);
    if (L < 1e-14) {
        // vertical line
        if (s2.t >= s1.t) return {SpherePoint::at(s1.z), SpherePoint::inf()};
        return {SpherePoint::inf(), SpherePoint::at(s1.z)};
    }
    cplx u = dz / L;
    // in the vertical plane: points (0, t1), (L, t2); circle center c, radius r
    double c = (L * L + s2.t * s2.t - s1.t * s1.t) / (2.0 * L);
    double r = std::sqrt(c * c + s1.t * s1.t);
    return {SpherePoint::at(s1.z + u * (c - r)), SpherePoint::at(s1.z + u * (c + r))};
}

double point_to_segment_distance(const H3Point& p, const H3Point& s1, const H3Point& s2) {
    double dd = h3_distance(s1, s2);
    if (dd < 1e-12) return h3_distance(p, s1);
    Isometry N = geodesic_normalizer(geodesic_through(s1, s2));
    H3Point q = apply(N, p);
    H3Point e1 = apply(N, s1);
    H3Point e2 = apply(N, s2);
    double lo = std::min(e1.t, e2.t), hi = std::max(e1.t, e2.t);
    double h = std::sqrt(std::norm(q.z) + q.t * q.t);
    h = std::clamp(h, lo, hi);
    return h3_distance(q, H3Point{0.0, h});
}

H3Point geodesic_point(const Geodesic& gd, double s) {
    Isometry N = geodesic_normalizer(gd);
    return apply(N.inverse(), H3Point{0.0, std::exp(s)});
}

} // namespace hyp3
