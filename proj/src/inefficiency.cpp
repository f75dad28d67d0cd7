#include "hyp3/inefficiency.hpp"

#include <cmath>

namespace hyp3 {

double angle_inefficiency(double theta) {
    if (theta < 0.0 || theta >= pi)
        throw GeomError(GeomError::Kind::OutOfRange, "angle_inefficiency: theta outside [0, pi)");
    return 2.0 * std::log(1.0 / std::cos(theta / 2.0));
}

cplx complex_inefficiency(cplx d) {
    if (std::abs(d) == 0.0)
        throw GeomError(GeomError::Kind::ZeroDetour, "complex_inefficiency: d = 0");
    cplx s = std::sinh(d);
    double il = 2.0 * d.real() - 2.0 * std::log(std::abs(s));
    double ip = canonical_angle(2.0 * d.imag() - 2.0 * std::arg(s));
    return {il, ip};
}

ClosurePrediction predict_closure(const FramedCycle& c) {
    if (c.segments.size() % 2 != 0 || c.segments.empty())
        throw GeomError(GeomError::Kind::BadParams, "predict_closure: need an even segment count");
    ClosurePrediction out;
    out.actual = closed_length(c);
    double plen = 0.0, pphase = 0.0;
    for (const auto& w : c.segments) {
        plen += w.re;
        pphase += w.im;
    }
    for (std::size_t i = 1; i < c.segments.size(); i += 2) {
        cplx ineff = complex_inefficiency(c.segments[i].value() / 2.0);
        plen -= ineff.real();
        pphase -= ineff.imag();
    }
    out.predicted_length = plen;
    out.predicted_phase = canonical_angle(pphase);
    out.residual_length = std::fabs(out.actual.re - plen);
    out.residual_phase = circle_distance(out.actual.im - pphase);
    return out;
}

} // namespace hyp3
