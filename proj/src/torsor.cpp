#include "hyp3/torsor.hpp"

#include <cmath>

#include "hyp3/isometry.hpp"
#include "hyp3/rng.hpp"

namespace hyp3 {

cplx torsor_reduce(cplx v, cplx hl) {
    double k = std::floor(v.real() / hl.real());
    cplx w = v - k * hl;
    if (w.real() >= hl.real()) w -= hl; // guard fp boundary
    if (w.real() < 0.0) w += hl;
    return {w.real(), canonical_angle(w.imag())};
}

TorsorPoint::TorsorPoint(cplx value, cplx modulus) : hl(modulus) {
    if (modulus.real() <= 0.0)
        throw GeomError(GeomError::Kind::OutOfRange, "TorsorPoint: Re(hl) <= 0");
    v = torsor_reduce(value, modulus);
}

double torsor_distance(cplx a, cplx b, cplx hl) {
    cplx d = torsor_reduce(a - b, hl);
    double best = 1e300;
    for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n)
            best = std::min(best, std::abs(d + double(m) * hl + cplx{0.0, 2.0 * pi * n}));
    return best;
}

double torsor_distance(const TorsorPoint& a, const TorsorPoint& b) {
    return torsor_distance(a.v, b.v, a.hl);
}

TorsorPoint tau_shift(const TorsorPoint& p, cplx s) {
    return TorsorPoint(p.v + cplx{0.0, pi} + s, p.hl);
}

FootSet sample_feet(int n, cplx hl, const SampleMode& mode, std::uint64_t seed) {
    if (n < 1) throw GeomError(GeomError::Kind::BadParams, "sample_feet: n < 1");
    FootSet fs;
    fs.hl = hl;
    Rng rng(seed);
    if (mode.kind == SampleMode::Kind::Uniform) {
        for (int i = 0; i < n; ++i) {
            cplx v{rng.uniform(0.0, hl.real()), rng.uniform(-pi, pi)};
            fs.feet.push_back({TorsorPoint(v, hl), i % 2 == 0 ? +1 : -1, i});
        }
        return fs;
    }
    if (n % 2 != 0)
        throw GeomError(GeomError::Kind::OddCount, "sample_feet: tau_symmetric needs even n");
    int half = n / 2;
    for (int i = 0; i < half; ++i) {
        cplx v{rng.uniform(0.0, hl.real()), rng.uniform(-pi, pi)};
        fs.feet.push_back({TorsorPoint(v, hl), +1, i});
    }
    for (int i = 0; i < half; ++i) {
        cplx delta = mode.jitter > 0.0 ? Rng(seed, 1000 + i).in_disk(mode.jitter) : cplx{0.0};
        TorsorPoint partner = tau_shift(fs.feet[i].p, mode.s);
        fs.feet.push_back({TorsorPoint(partner.v + delta, hl), -1, half + i});
    }
    return fs;
}

} // namespace hyp3
