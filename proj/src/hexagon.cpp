#include "hyp3/hexagon.hpp"

#include <cmath>

namespace hyp3 {

cplx acosh_principal(cplx w) {
    cplx r = std::log(w + std::sqrt(w * w - 1.0));
    if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
    return {r.real(), canonical_angle(r.imag())};
}

double Hexagon::law_residual(int i) const {
    auto s = [&](int k) { return sides[((i + k) % 6 + 6) % 6]; };
    cplx lhs = std::cosh(s(0));
    cplx rhs = -std::cosh(s(2)) * std::cosh(s(4)) + std::sinh(s(2)) * std::sinh(s(4)) * std::cosh(s(3));
    return std::abs(lhs - rhs);
}

double Hexagon::max_law_residual() const {
    double m = 0.0;
    for (int i = 0; i < 6; ++i) m = std::max(m, law_residual(i));
    return m;
}

Hexagon hexagon_from_alternating(cplx s0, cplx s2, cplx s4) {
    auto opposite = [](cplx sa, cplx sl, cplx sr) {
        cplx den = std::sinh(sl) * std::sinh(sr);
        if (std::abs(den) < 1e-14)
            throw GeomError(GeomError::Kind::BranchAmbiguity, "hexagon: sinh product below 1e-14");
        return acosh_principal((std::cosh(sa) + std::cosh(sl) * std::cosh(sr)) / den);
    };
    Hexagon h;
    h.sides[0] = s0;
    h.sides[2] = s2;
    h.sides[4] = s4;
    h.sides[3] = opposite(s0, s2, s4); // opposite of side 0
    h.sides[5] = opposite(s2, s4, s0); // opposite of side 2
    h.sides[1] = opposite(s4, s0, s2); // opposite of side 4
    return h;
}

ComplexLength hexagon_opposite(const ComplexLength& l1, const ComplexLength& l3,
                               const ComplexLength& twod) {
    cplx den = std::sinh(l1.value()) * std::sinh(l3.value());
    if (std::abs(den) < 1e-14)
        throw GeomError(GeomError::Kind::BranchAmbiguity, "hexagon_opposite: |sinh l1 sinh l3| < 1e-14");
    cplx c4 = std::cosh(twod.value()) * den - std::cosh(l1.value()) * std::cosh(l3.value());
    return ComplexLength(acosh_principal(c4));
}

QuadSolution quad_solve(const ComplexLength& x, const ComplexLength& y, const ComplexLength& c) {
    cplx xv = x.value(), yv = y.value(), cv = c.value();
    cplx sx = std::sinh(xv), sy = std::sinh(yv);
    if (std::abs(sx) < 1e-14 || std::abs(sy) < 1e-14)
        throw GeomError(GeomError::Kind::BranchAmbiguity, "quad_solve: degenerate sinh factor");
    // cosh(z - i pi) = cosh(x + y) + sinh x sinh y (cosh(c - i pi) - 1)
    cplx cm1 = std::cosh(cv - cplx{0.0, pi}) - 1.0;
    cplx zshift = acosh_principal(std::cosh(xv + yv) + sx * sy * cm1);
    cplx zv = zshift + cplx{0.0, pi};
    cplx sz = std::sinh(zshift) * (-1.0); // sinh(z) = -sinh(z - i pi)
    if (std::abs(sz) < 1e-14)
        throw GeomError(GeomError::Kind::BranchAmbiguity, "quad_solve: sinh z below 1e-14");
    cplx ratio = std::sinh(cv) / sz;
    cplx av = std::asinh(ratio * sy);
    cplx bv = std::asinh(ratio * sx);

    // fix arcsinh branches (a vs i pi - a) against the hexagon laws
    Hexagon h;
    auto residual = [&](cplx aa, cplx bb) {
        h.sides = {aa, xv, cv, yv, bb, zv};
        return h.max_law_residual();
    };
    cplx a_alt = cplx{0.0, pi} - av, b_alt = cplx{0.0, pi} - bv;
    cplx best_a = av, best_b = bv;
    double best = residual(av, bv);
    for (auto [aa, bb] : {std::pair{av, b_alt}, std::pair{a_alt, bv}, std::pair{a_alt, b_alt}}) {
        double r = residual(aa, bb);
        if (r < best) { best = r; best_a = aa; best_b = bb; }
    }
    return {ComplexLength(zv), ComplexLength(best_a), ComplexLength(best_b)};
}

ComplexLength ortho_spacing(const ComplexLength& lambda, cplx z0, int k) {
    if (lambda.re <= 0.0)
        throw GeomError(GeomError::Kind::OutOfRange, "ortho_spacing: Re(lambda) <= 0");
    if (std::abs(z0) == 0.0)
        throw GeomError(GeomError::Kind::OutOfRange, "ortho_spacing: z0 = 0");
    cplx zk = std::exp(-double(k) * lambda.value()) * z0;
    cplx ed = -(1.0 + 2.0 * zk + 2.0 * std::sqrt(zk * zk + zk));
    cplx dk = std::log(ed);
    if (dk.real() < 0.0) dk = -dk; // the two sqrt branches give e^{+-d}
    return ComplexLength(dk);
}

HexagonFrames build_hexagon_frames(const Hexagon& h) {
    HexagonFrames out;
    Frame f = Frame::base();
    for (int k = 0; k < 6; ++k) {
        out.vertex[k] = f;
        out.side[k] = frame_u_geodesic(f);
        f = right_act(f, gen_A(h.sides[k] / 2.0));
        f = right_act(f, gen_B(pi / 2));
    }
    out.closure_residual = frame_metric(f.g);
    return out;
}

} // namespace hyp3
