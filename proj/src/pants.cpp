#include "hyp3/pants.hpp"

#include <cmath>

#include "hyp3/inefficiency.hpp"

namespace hyp3 {

std::pair<TorsorPoint, TorsorPoint> Pants::feet(int cuff) const {
    cplx h = hl[cuff].value();
    return {TorsorPoint(foot_base[cuff], h), TorsorPoint(foot_base[cuff] + h, h)};
}

Hexagon Pants::hexagon() const {
    Hexagon h;
    h.sides = {hl[0].value(), ortho[2].value(), hl[1].value(),
               ortho[0].value(), hl[2].value(), ortho[1].value()};
    return h;
}

Pants build_pants(const ComplexLength& hl1, const ComplexLength& hl2, const ComplexLength& hl3) {
    if (hl1.re <= 0.0 || hl2.re <= 0.0 || hl3.re <= 0.0)
        throw GeomError(GeomError::Kind::OutOfRange, "build_pants: Re(hl) must be positive");
    Pants p;
    p.hl = {hl1, hl2, hl3};
    for (int i = 0; i < 3; ++i) {
        const ComplexLength& a = p.hl[i];
        const ComplexLength& l = p.hl[(i + 1) % 3];
        const ComplexLength& r = p.hl[(i + 2) % 3];
        cplx den = std::sinh(l.value()) * std::sinh(r.value());
        if (std::abs(den) < 1e-14)
            throw GeomError(GeomError::Kind::BranchAmbiguity, "build_pants: degenerate hexagon");
        p.ortho[i] = ComplexLength(
            acosh_principal((std::cosh(a.value()) + std::cosh(l.value()) * std::cosh(r.value())) / den));
    }
    return p;
}

ShearResult shears(const Pants& p1, const Pants& p2, int cuff, cplx o1, cplx o2) {
    if (cl_distance(p1.hl[cuff], p2.hl[cuff]) > 1e-9)
        throw GeomError(GeomError::Kind::CuffMismatch, "shears: cuff half-lengths differ");
    cplx h = p1.hl[cuff].value();
    ShearResult out;
    out.s = TorsorPoint(o2 - o1, h);
    cplx two_h = 2.0 * h;
    cplx a1 = torsor_reduce(o1 + h / 2.0, two_h);
    cplx a2 = torsor_reduce(o1 + h / 2.0 + h, two_h);
    cplx b1 = torsor_reduce(o2 + h / 2.0, two_h);
    cplx b2 = torsor_reduce(o2 + h / 2.0 + h, two_h);
    out.t1 = ComplexLength(torsor_reduce(b1 - a1, two_h));
    out.t2 = ComplexLength(torsor_reduce(b2 - a2, two_h));
    return out;
}

ComplexLength ideal_shear(const ComplexLength& hl1, const ComplexLength& hl2,
                          const ComplexLength& hl3, int j) {
    std::array<ComplexLength, 3> h{hl1, hl2, hl3};
    int k = ((j % 3) + 3) % 3;
    return h[(k + 1) % 3] + h[(k + 2) % 3] - h[k];
}

SpinSpec regular_spin_base(std::array<int, 3> n) {
    const double a = std::acosh(2.0); // regular right-angled hexagon side
    SpinSpec s;
    for (int i = 0; i < 3; ++i) {
        s.cuff[i] = ComplexLength{2.0 * a, 0.0};
        s.eta_next[i] = ComplexLength{a, 0.2};
        s.eta_prev[i] = ComplexLength{a, -0.1};
        s.cross_b[i] = ComplexLength{a, 0.4};
        s.cross_d[i] = ComplexLength{a, -0.7};
    }
    s.n = n;
    return s;
}

SpinResult spin_prediction(const SpinSpec& spec, int i) {
    int k = ((i % 3) + 3) % 3;
    int nxt = (k + 1) % 3, prv = (k + 2) % 3;
    ComplexLength wa = spec.eta_next[k] + double(spec.n[nxt]) * spec.cuff[nxt];
    ComplexLength wc = spec.eta_prev[k] + double(spec.n[prv]) * spec.cuff[prv];
    FramedCycle cyc = FramedCycle::continuous({wa, spec.cross_b[k], wc, spec.cross_d[k]});

    SpinResult out;
    out.actual = closed_length(cyc);
    // sigma carries everything n-independent: the connection lengths, the
    // crossing segments, and their inefficiency corrections
    cplx sigma = spec.eta_next[k].value() + spec.eta_prev[k].value() +
                 spec.cross_b[k].value() + spec.cross_d[k].value() -
                 complex_inefficiency(spec.cross_b[k].value() / 2.0) -
                 complex_inefficiency(spec.cross_d[k].value() / 2.0);
    out.predicted = ComplexLength(double(spec.n[nxt]) * spec.cuff[nxt].value() +
                                  double(spec.n[prv]) * spec.cuff[prv].value() + sigma);
    out.residual = cl_distance(out.actual, out.predicted);
    return out;
}

LatticeFit lattice_fit(const std::array<ComplexLength, 3>& lengths,
                       const std::array<cplx, 3>& sigmas, double R0, double R1_threshold) {
    for (const auto& l : lengths)
        if (l.re <= 0.0) throw GeomError(GeomError::Kind::OutOfRange, "lattice_fit: Re(l) <= 0");
    if (R0 <= 0.0) throw GeomError(GeomError::Kind::OutOfRange, "lattice_fit: R0 <= 0");

    double max_len = std::max({lengths[0].re, lengths[1].re, lengths[2].re});
    double m1 = max_len / 2.0 + 1e-9;
    double sig_sum = std::abs(sigmas[0]) + std::abs(sigmas[1]) + std::abs(sigmas[2]);
    double rmin = std::max({R1_threshold, 2.0 * R0 + 2.0 * sig_sum, 3.0 * m1}) + 1.0;
    double rmax = rmin + max_len + 1.0;

    std::array<std::pair<int, int>, 3> box;
    for (int i = 0; i < 3; ++i) {
        double re_l = lengths[i].re, re_s = sigmas[i].real();
        int lo = std::max(1, int(std::floor((rmin - m1 + re_s) / re_l)) - 1);
        int hi = std::max(lo, int(std::ceil((rmax + m1 + re_s) / re_l)) + 1);
        box[i] = {lo, hi};
    }

    LatticeFit best;
    best.m1 = m1;
    double best_err = 1e300;
    long best_sum = 0;
    double best_rp = 0.0;
    bool found = false;
    for (int n1 = box[0].first; n1 <= box[0].second; ++n1)
        for (int n2 = box[1].first; n2 <= box[1].second; ++n2)
            for (int n3 = box[2].first; n3 <= box[2].second; ++n3) {
                std::array<int, 3> n{n1, n2, n3};
                double v[3];
                for (int i = 0; i < 3; ++i)
                    v[i] = double(n[i]) * lengths[i].re - sigmas[i].real();
                double vmin = std::min({v[0], v[1], v[2]});
                double vmax = std::max({v[0], v[1], v[2]});
                double rp = std::max(rmin, (vmin + vmax) / 2.0);
                if (rp > rmax) continue;
                double err = std::max({std::fabs(v[0] - rp), std::fabs(v[1] - rp), std::fabs(v[2] - rp)});
                long nsum = long(n1) + n2 + n3;
                bool better = err < best_err - 1e-15 ||
                              (err < best_err + 1e-15 &&
                               (nsum < best_sum || (nsum == best_sum && rp < best_rp)));
                if (better) {
                    best_err = err;
                    best_sum = nsum;
                    best_rp = rp;
                    best.n = n;
                    best.Rprime = rp;
                    for (int i = 0; i < 3; ++i) best.errors[i] = std::fabs(v[i] - rp);
                    found = true;
                }
            }
    if (!found || best_err >= m1)
        throw GeomError(GeomError::Kind::Infeasible, "lattice_fit: search range exhausted");
    double total = 0.0;
    for (int i = 0; i < 3; ++i) total += double(best.n[i]) * lengths[i].re;
    best.R = (total - best.Rprime) / 2.0;
    return best;
}

GoodnessReport goodness_check(const std::array<ComplexLength, 3>& hl,
                              const std::array<cplx, 3>& shear, double R, double delta,
                              double Bminus, double Bplus) {
    GoodnessReport rep;
    rep.pass = true;
    for (int i = 0; i < 3; ++i) {
        rep.hl_margin[i] = delta - cl_distance(hl[i], ComplexLength{R, 0.0});
        rep.shear_margin[i] = std::min(shear[i].real() - Bminus, Bplus - shear[i].real());
        rep.pass = rep.pass && rep.hl_margin[i] > 0.0 && rep.shear_margin[i] > 0.0;
    }
    return rep;
}

} // namespace hyp3
