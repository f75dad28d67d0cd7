#pragma once

#include <array>

#include "hyp3/frame.hpp"

namespace hyp3 {

// arccosh with Re >= 0, Im in (-pi, pi]
cplx acosh_principal(cplx w);

// Right-angled hexagon, sides in cyclic order. Opposite pairs are (i, i+3);
// side i satisfies cosh s_i = -cosh s_{i+2} cosh s_{i+4}
//                            + sinh s_{i+2} sinh s_{i+4} cosh s_{i+3}.
struct Hexagon {
    std::array<cplx, 6> sides{};

    double law_residual(int i) const;
    double max_law_residual() const;
};

// hexagon determined by three alternating sides (positions 0, 2, 4)
Hexagon hexagon_from_alternating(cplx s0, cplx s2, cplx s4);

// Solve cosh(2d) = (cosh l1 cosh l3 + cosh l4) / (sinh l1 sinh l3) for l4,
// branch Re(l4) >= 0.
ComplexLength hexagon_opposite(const ComplexLength& l1, const ComplexLength& l3,
                               const ComplexLength& twod);

// Degenerate right-angled hexagon (a, x, c, y, b, z): given x, y, c solve z
// from cosh(z - i pi) = cosh(x+y) + sinh x sinh y (cosh(c - i pi) - 1), then
// a, b from the sine rule sinh a / sinh y = sinh b / sinh x = sinh c / sinh z.
struct QuadSolution {
    ComplexLength z, a, b;
};
QuadSolution quad_solve(const ComplexLength& x, const ComplexLength& y, const ComplexLength& c);

// Orthogeodesic spacing along an ideal-triangle side: d_k between the lift of
// p1 (geodesic -1 -> 0) and the k-th lift of p2 (geodesic z_k -> inf), where
// z_k = e^{-k lambda} z0; e^{d_k} = -(1 + 2 z_k + 2 sqrt(z_k^2 + z_k)).
ComplexLength ortho_spacing(const ComplexLength& lambda, cplx z0, int k);

// Geometric realization: vertex frames V_k, side geodesics, and the closing
// residual of the word prod A(s_k/2) B(pi/2) (identity in PSL within eps for a
// genuine hexagon). Side k runs from vertex k to vertex k+1 along the frame's
// u-axis.
struct HexagonFrames {
    std::array<Frame, 6> vertex;     // frame at the start of side k
    std::array<Geodesic, 6> side;    // full geodesic carrying side k
    double closure_residual;         // frame_metric of the full word
};
HexagonFrames build_hexagon_frames(const Hexagon& h);

} // namespace hyp3
