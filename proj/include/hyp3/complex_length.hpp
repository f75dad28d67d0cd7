#pragma once

#include <cmath>
#include <complex>

namespace hyp3 {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// fold an angle into (-pi, pi]
inline double canonical_angle(double x) {
    double y = std::fmod(x, 2.0 * pi);
    if (y <= -pi) y += 2.0 * pi;
    if (y > pi) y -= 2.0 * pi;
    return y;
}

// distance from 0 in R/2piZ, valued in [0, pi]
inline double circle_distance(double x) { return std::fabs(canonical_angle(x)); }

// A value in C/2pi i Z: real part is a hyperbolic length or signed distance,
// imaginary part a rotation angle kept in (-pi, pi].
struct ComplexLength {
    double re{0.0};
    double im{0.0};

    ComplexLength() = default;
    ComplexLength(double length, double phase) : re(length), im(canonical_angle(phase)) {}
    explicit ComplexLength(cplx v) : re(v.real()), im(canonical_angle(v.imag())) {}

    cplx value() const { return {re, im}; }

    ComplexLength operator+(const ComplexLength& o) const { return {re + o.re, im + o.im}; }
    ComplexLength operator-(const ComplexLength& o) const { return {re - o.re, im - o.im}; }
    ComplexLength operator-() const { return {-re, -im}; }
    ComplexLength operator*(double k) const { return {k * re, k * im}; }

    bool operator==(const ComplexLength& o) const { return re == o.re && im == o.im; }
};

inline ComplexLength operator*(double k, const ComplexLength& w) { return w * k; }

// |a - b| with the phase difference measured in R/2piZ
inline double cl_distance(const ComplexLength& a, const ComplexLength& b) {
    double dr = a.re - b.re;
    double di = circle_distance(a.im - b.im);
    return std::sqrt(dr * dr + di * di);
}

} // namespace hyp3
