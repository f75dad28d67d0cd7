#pragma once

#include <stdexcept>
#include <string>

#include "hyp3/complex_length.hpp"

namespace hyp3 {

namespace tol {
inline constexpr double invariant = 1e-12; // type invariants
inline constexpr double geometric = 1e-9;  // derived geometric quantities
} // namespace tol

struct GeomError : std::runtime_error {
    enum class Kind {
        SingularMatrix,
        Elliptic,
        Parabolic,
        Identity,
        SharedEndpoint,
        NonRealAngle,
        NotClosable,
        OutOfRange,
        ZeroDetour,
        BranchAmbiguity,
        CuffMismatch,
        Infeasible,
        OddCount,
        NotApplicable,
        HypothesisViolated,
        NotSemiLinear,
        DegenerateQuadruple,
        UnknownSuite,
        BadParams,
    };
    Kind kind;
    GeomError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Canonical SL(2,C) representative of an element of PSL(2,C).
// Invariants: det = 1 (within 1e-12) and the first entry of (a,b,c,d) with
// modulus > 1e-12 has argument in (-pi/2, pi/2], which fixes the +-I ambiguity
// and makes equality of canonical representatives meaningful.
struct Isometry {
    cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static Isometry identity() { return {}; }
    cplx det() const { return a * d - b * c; }
    cplx trace() const { return a + d; }
    Isometry inverse() const { return Isometry{d, -b, -c, a}; }
};

// Canonicalize raw input: rescale to det 1 and apply the sign rule. Computing
// ad - bc cancels badly for matrices whose entries span a large dynamic
// range, so this is for external input; products of unit-det representatives
// never renormalize.
Isometry canonicalize(cplx a, cplx b, cplx c, cplx d);
inline Isometry canonicalize(const Isometry& m) { return canonicalize(m.a, m.b, m.c, m.d); }

// entries already have det = 1: apply the sign rule only
Isometry unit_sl2(cplx a, cplx b, cplx c, cplx d);
Isometry sign_normalize(const Isometry& m);

// sign-normalized product, no det renormalization
Isometry operator*(const Isometry& g, const Isometry& h);

double entry_distance(const Isometry& g, const Isometry& h);
inline bool approx_equal(const Isometry& g, const Isometry& h, double eps = tol::invariant) {
    return entry_distance(canonicalize(g), canonicalize(h)) <= eps;
}

double frobenius(const Isometry& g);

enum class IsometryClass { Identity, Parabolic, Elliptic, Loxodromic };
IsometryClass classify(const Isometry& g, double eps = tol::invariant);

// hl with Re > 0 such that g is conjugate to diag(e^hl, e^-hl). Since -I is
// trivial in PSL(2,C), hl is only defined mod i pi; the representative with
// Im in (-pi/2, pi/2] is returned, which makes hl conjugation-invariant. The
// closed geodesic of g has full complex length 2*hl, defined mod 2 pi i.
ComplexLength half_length(const Isometry& g);

// eigenvalue of the canonical representative with |lambda| > 1 (loxodromic g)
cplx dominant_eigenvalue(const Isometry& g);

// A point of the Riemann sphere: finite value or the tagged point at infinity.
struct SpherePoint {
    cplx z{0.0};
    bool infinite{false};

    static SpherePoint inf() { return {cplx{0.0}, true}; }
    static SpherePoint at(cplx w) { return {w, false}; }
};

bool sphere_close(const SpherePoint& p, const SpherePoint& q, double eps = 1e-9);

// Oriented geodesic: repelling endpoint first, attracting second.
struct Geodesic {
    SpherePoint rep, att;

    Geodesic() = default;
    Geodesic(SpherePoint r, SpherePoint a) : rep(r), att(a) {}
    Geodesic(cplx r, cplx a) : rep(SpherePoint::at(r)), att(SpherePoint::at(a)) {}
    Geodesic reversed() const { return {att, rep}; }
};

SpherePoint mobius_apply(const Isometry& g, const SpherePoint& p);
inline Geodesic mobius_apply(const Isometry& g, const Geodesic& gd) {
    return {mobius_apply(g, gd.rep), mobius_apply(g, gd.att)};
}

// axis of a loxodromic element, oriented (repelling, attracting)
Geodesic axis(const Isometry& g);

// Upper half-space model point (z, t), t > 0.
struct H3Point {
    cplx z{0.0};
    double t{1.0};
};

H3Point apply(const Isometry& g, const H3Point& p);
double h3_distance(const H3Point& p, const H3Point& q);

// Signed complex distance between oriented geodesics: Re >= 0, Im in (-pi,pi];
// for intersecting geodesics Re = 0 and Im is the intersection angle.
ComplexLength complex_distance(const Geodesic& g1, const Geodesic& g2);

// Normal form for a disjoint pair: M maps the common orthogonal to (0, inf)
// oriented g1 -> g2 and maps g1 to (-1, 1) preserving orientation. The frame
// based at j with u up and v along (-1,1) is the foot frame on g1; sliding by
// A(u/2) reaches the foot frame on g2. complex_distance = u + i pi mod 2pi i.
struct OrthoFrameData {
    Isometry normalizer; // M
    cplx u;              // transport parameter, Re(u) >= 0
};
OrthoFrameData common_orthogonal(const Geodesic& g1, const Geodesic& g2);

// Mobius map sending gd to (0, inf), repelling endpoint to 0
Isometry geodesic_normalizer(const Geodesic& gd);

double point_to_geodesic_distance(const H3Point& p, const Geodesic& gd);
double point_to_axis_distance(const H3Point& p, const Isometry& g);

// distance from p to the segment of gd between the feet of q1 and q2
double point_to_segment_distance(const H3Point& p, const H3Point& s1, const H3Point& s2);

// point on an oriented geodesic at arclength parameter s from its "apex"
// (the normalization image of (0, e^s))
H3Point geodesic_point(const Geodesic& gd, double s);

} // namespace hyp3
