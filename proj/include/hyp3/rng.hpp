#pragma once

#include <cstdint>
#include <complex>

namespace hyp3 {

// Deterministic splittable RNG. Trials are seeded as hash(seed, index) so a
// run produces identical streams no matter how the trial loop is scheduled.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed ^ 0xa5a5a5a5deadbeefULL)) {}
    Rng(std::uint64_t seed, std::uint64_t stream)
        : state_(splitmix64(splitmix64(seed) ^ splitmix64(stream * 0x9e3779b97f4a7c15ULL + 1))) {}

    std::uint64_t next_u64() {
        state_ = splitmix64(state_);
        return state_;
    }

    // uniform in [0, 1)
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    std::complex<double> in_disk(double radius) {
        for (;;) {
            double x = uniform(-1.0, 1.0), y = uniform(-1.0, 1.0);
            if (x * x + y * y <= 1.0) return {radius * x, radius * y};
        }
    }

    std::complex<double> unit() {
        double t = uniform(-3.14159265358979323846, 3.14159265358979323846);
        return {std::cos(t), std::sin(t)};
    }

  private:
    std::uint64_t state_;
};

} // namespace hyp3
