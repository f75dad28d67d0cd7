#pragma once

#include <cstdint>
#include <vector>

#include "hyp3/complex_length.hpp"

namespace hyp3 {

// Point of the unit-normal torsor N^1(sqrt(gamma)) = C / (hl Z + 2 pi i Z),
// canonicalized to the fundamental domain [0, Re hl) x (-pi, pi].
struct TorsorPoint {
    cplx v{0.0};
    cplx hl{1.0}; // modulus of the lattice hl Z + 2 pi i Z, Re(hl) > 0

    TorsorPoint() = default;
    TorsorPoint(cplx value, cplx modulus);
};

cplx torsor_reduce(cplx v, cplx hl);

// exact quotient metric: min over lattice shifts of |v1 - v2 + m hl + 2 pi i n|
double torsor_distance(const TorsorPoint& a, const TorsorPoint& b);
double torsor_distance(cplx a, cplx b, cplx hl);

// tau(v) = v + i pi + s
TorsorPoint tau_shift(const TorsorPoint& v, cplx s);

struct Foot {
    TorsorPoint p;
    int orientation{+1}; // +-1
    int pants_id{0};
};

struct FootSet {
    cplx hl{1.0};
    std::vector<Foot> feet;
};

struct SampleMode {
    enum class Kind { Uniform, TauSymmetric } kind{Kind::Uniform};
    cplx s{0.0};        // shear used by tau in TauSymmetric mode
    double jitter{0.0}; // partner displacement bound

    static SampleMode uniform() { return {}; }
    static SampleMode tau_symmetric(cplx s, double jitter) {
        return {Kind::TauSymmetric, s, jitter};
    }
};

// Uniform: n i.i.d. points on the fundamental domain, alternating orientation.
// TauSymmetric: n/2 uniform positive feet v plus partners tau(v) + delta with
// |delta| < jitter and negative orientation (pants_id pairs k and k + n/2).
FootSet sample_feet(int n, cplx hl, const SampleMode& mode, std::uint64_t seed);

} // namespace hyp3
