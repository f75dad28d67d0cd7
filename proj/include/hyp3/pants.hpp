#pragma once

#include <array>

#include "hyp3/hexagon.hpp"
#include "hyp3/torsor.hpp"

namespace hyp3 {

// Pair of pants given by its three cuff half-lengths. ortho[i] is the complex
// length of the orthogeodesic between cuffs i+1 and i+2, from the hexagon law
//   cosh(ortho_i) = (cosh hl_i + cosh hl_{i+1} cosh hl_{i+2})
//                   / (sinh hl_{i+1} sinh hl_{i+2}).
// The two orthogeodesic feet on cuff i sit at foot_base[i] and
// foot_base[i] + hl_i on the torsor of that cuff.
struct Pants {
    std::array<ComplexLength, 3> hl;
    std::array<ComplexLength, 3> ortho;
    std::array<cplx, 3> foot_base{};

    std::pair<TorsorPoint, TorsorPoint> feet(int cuff) const;
    Hexagon hexagon() const; // sides (hl0, o2, hl1, o0, hl2, o1)
};

Pants build_pants(const ComplexLength& hl1, const ComplexLength& hl2, const ComplexLength& hl3);

// Short and long shears between two pants sharing cuff `cuff`; o1, o2 are the
// marking feet of the two pants on that cuff. Third-connection feet sit at the
// half-length midpoints, so t1 + t2 = 2s in C/(2 hl Z + 2 pi i Z).
struct ShearResult {
    TorsorPoint s;          // short shear, modulus hl
    ComplexLength t1, t2;   // long shear pair, reduced mod (2 hl, 2 pi i)
};
ShearResult shears(const Pants& p1, const Pants& p2, int cuff, cplx o1, cplx o2);

// ideal-triangle shear hl_{j+1} + hl_{j+2} - hl_j along side p^j
ComplexLength ideal_shear(const ComplexLength& hl1, const ComplexLength& hl2,
                          const ComplexLength& hl3, int j);

// Spinning construction data: base cuff complex lengths l(C_i), connection
// lengths l(eta_{i,i+1}), l(eta_{i,i-1}), and the crossing segments b_i, d_i.
struct SpinSpec {
    std::array<ComplexLength, 3> cuff;
    std::array<ComplexLength, 3> eta_next, eta_prev;
    std::array<ComplexLength, 3> cross_b, cross_d;
    std::array<int, 3> n{1, 1, 1};
};

SpinSpec regular_spin_base(std::array<int, 3> n);

struct SpinResult {
    ComplexLength actual;    // closed_length of the spun word
    ComplexLength predicted; // n_{i+1} l(C_{i+1}) + n_{i-1} l(C_{i-1}) + sigma_i
    double residual;         // |actual - predicted| with phase mod 2 pi
};
SpinResult spin_prediction(const SpinSpec& spec, int i);

// Integer fit of Re(n_i l_i - sigma_i) to a common R' >= the admissibility
// threshold; deterministic box search, ties broken by smaller max error, then
// smaller n1+n2+n3, then smaller R'.
struct LatticeFit {
    std::array<int, 3> n;
    double Rprime;
    double R; // (sum Re(n_i l_i) - R') / 2
    std::array<double, 3> errors;
    double m1;
};
LatticeFit lattice_fit(const std::array<ComplexLength, 3>& lengths,
                       const std::array<cplx, 3>& sigmas, double R0, double R1_threshold = 0.0);

struct GoodnessReport {
    std::array<double, 3> hl_margin;    // delta - |hl_i - R|
    std::array<double, 3> shear_margin; // min(Re s_i - B-, B+ - Re s_i)
    bool pass{false};
};
GoodnessReport goodness_check(const std::array<ComplexLength, 3>& hl,
                              const std::array<cplx, 3>& shear, double R, double delta,
                              double Bminus, double Bplus);

} // namespace hyp3
