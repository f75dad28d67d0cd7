#include "hyp3/zigzag.hpp"

#include <cmath>
#include <vector>

namespace hyp3 {

std::array<cplx, 4> zigzag_entries(cplx l1, cplx l2, cplx l3, cplx l4) {
    cplx c2 = std::cosh(l2), s2 = std::sinh(l2), c4 = std::cosh(l4), s4 = std::sinh(l4);
    cplx e1 = std::exp(l1), e3 = std::exp(l3);
    return {e1 * (e3 * c2 * c4 - s2 * s4 / e3), e1 * (e3 * c2 * s4 - s2 * c4 / e3),
            (c2 * s4 / e3 - e3 * s2 * c4) / e1, (c2 * c4 / e3 - e3 * s2 * s4) / e1};
}

Isometry zigzag_holonomy(cplx l1, cplx l2, cplx l3, cplx l4) {
    auto e = zigzag_entries(l1, l2, l3, l4);
    return unit_sl2(e[0], e[1], e[2], e[3]);
}

FramedCycle zigzag_cycle(cplx l1, cplx l2, cplx l3, cplx l4) {
    cplx ip2{0.0, pi / 2};
    return FramedCycle::continuous({ComplexLength(2.0 * l1), ComplexLength(2.0 * (l2 + ip2)),
                                    ComplexLength(2.0 * l3), ComplexLength(2.0 * (l4 + ip2))});
}

namespace {

// fixed point of X for eigenvalue mu, picking the quadratic-residual-stable
// formula among b/(mu-a) and (mu-d)/c; infinite when both degenerate
SpherePoint fixed_point(const Isometry& x, cplx mu) {
    double scale = std::abs(x.a) + std::abs(x.b) + std::abs(x.c) + std::abs(x.d);
    bool d1 = std::abs(mu - x.a) > 1e-16 * scale;
    bool d2 = std::abs(x.c) > 1e-16 * scale;
    if (!d1 && !d2) return SpherePoint::inf();
    if (d1 && !d2) return SpherePoint::at(x.b / (mu - x.a));
    if (!d1 && d2) return SpherePoint::at((mu - x.d) / x.c);
    auto residual = [&](cplx z) {
        cplx r = x.c * z * z + (x.d - x.a) * z - x.b;
        double den = std::abs(x.c) * std::norm(z) + std::abs(x.d - x.a) * std::abs(z) + std::abs(x.b);
        return den == 0.0 ? 0.0 : std::abs(r) / den;
    };
    cplx za = x.b / (mu - x.a), zb = (mu - x.d) / x.c;
    return SpherePoint::at(residual(za) <= residual(zb) ? za : zb);
}

} // namespace

double zigzag_axis_distance(cplx l1, cplx l2, cplx l3, cplx l4) {
    Isometry x = zigzag_holonomy(l1, l2, l3, l4);
    if (classify(x) != IsometryClass::Loxodromic)
        throw GeomError(GeomError::Kind::NotClosable, "zigzag_axis_distance: holonomy not loxodromic");
    cplx lam = dominant_eigenvalue(x);
    SpherePoint z1 = fixed_point(x, lam);
    SpherePoint z2 = fixed_point(x, 1.0 / lam);
    double s;
    if (z1.infinite && z2.infinite) return 0.0;
    if (z1.infinite) s = std::abs(z2.z);
    else if (z2.infinite) s = std::abs(z1.z);
    else s = std::abs((1.0 + z1.z * std::conj(z2.z)) / (z1.z - z2.z));
    return std::asinh(s);
}

ZigzagBounds zigzag_bounds(double L, double eps, double R, double B) {
    if (L <= 0.0 || R <= 0.0)
        throw GeomError(GeomError::Kind::OutOfRange, "zigzag_bounds: L, R must be positive");
    return {48.0 * eps + 8.0 * std::exp(-2.0 * L), B * std::exp(-R / 2.0)};
}

double hausdorff_oracle(const FramedCycle& c, int n_samples) {
    Isometry x = cycle_holonomy(c);
    if (classify(x) != IsometryClass::Loxodromic)
        throw GeomError(GeomError::Kind::NotClosable, "hausdorff_oracle: holonomy not loxodromic");
    Geodesic ax = axis(x);
    const std::size_t m = c.segments.size();

    // joint vertices over one period plus the closing image, with the segment
    // normalizers (each maps its carrier geodesic to (0, inf))
    std::vector<H3Point> verts{H3Point{0.0, 1.0}};
    std::vector<Isometry> segnorm;
    Frame f = Frame::base();
    for (std::size_t i = 0; i < m; ++i) {
        segnorm.push_back(geodesic_normalizer(frame_u_geodesic(f)));
        f = right_act(f, gen_A(c.segments[i].value() / 2.0));
        verts.push_back(frame_vectors(f).p);
        const Joint& j = c.joints[i];
        if (j.psi != 0.0) f = right_act(f, gen_A(cplx{0.0, j.psi / 2.0}));
        if (j.theta != 0.0) f = right_act(f, gen_B(j.theta));
    }

    // carrier segments over periods -1, 0, +1
    Isometry xinv = x.inverse();
    std::vector<std::pair<H3Point, H3Point>> segs;
    for (std::size_t i = 0; i < m; ++i) {
        segs.push_back({verts[i], verts[i + 1]});
        segs.push_back({apply(x, verts[i]), apply(x, verts[i + 1])});
        segs.push_back({apply(xinv, verts[i]), apply(xinv, verts[i + 1])});
    }
    auto to_carrier = [&](const H3Point& p) {
        double best = 1e300;
        for (const auto& [a, b] : segs) best = std::min(best, point_to_segment_distance(p, a, b));
        return best;
    };

    Isometry nrm = geodesic_normalizer(ax);
    Isometry nrm_inv = nrm.inverse();
    auto proj_log_height = [&](const H3Point& p) {
        H3Point q = apply(nrm, p);
        return 0.5 * std::log(std::norm(q.z) + q.t * q.t);
    };
    auto axis_point = [&](double s) { return apply(nrm_inv, H3Point{0.0, std::exp(s)}); };
    auto carrier_point = [&](std::size_t i, double u) {
        H3Point a = apply(segnorm[i], verts[i]);
        H3Point b = apply(segnorm[i], verts[i + 1]);
        return apply(segnorm[i].inverse(), H3Point{0.0, a.t * std::pow(b.t / a.t, u)});
    };

    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        worst = std::max(worst, point_to_geodesic_distance(verts[i], ax));
        worst = std::max(worst, to_carrier(axis_point(proj_log_height(verts[i]))));
    }

    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) total += std::max(c.segments[i].re, 1e-9);
    double s0 = proj_log_height(verts[0]);
    double period = 2.0 * half_length(x).re;
    int n = std::max(1, n_samples);
    for (int k = 0; k < n; ++k) {
        double t = (k + 0.5) / n;
        double target = t * total;
        for (std::size_t i = 0; i < m; ++i) {
            double len = std::max(c.segments[i].re, 1e-9);
            if (target <= len || i + 1 == m) {
                worst = std::max(worst,
                                 point_to_geodesic_distance(carrier_point(i, std::min(1.0, target / len)), ax));
                break;
            }
            target -= len;
        }
        worst = std::max(worst, to_carrier(axis_point(s0 + t * period)));
    }
    return worst;
}

} // namespace hyp3
