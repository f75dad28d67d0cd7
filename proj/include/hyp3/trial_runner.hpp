#pragma once

#include <algorithm>
#include <vector>

#include "hyp3/rng.hpp"

#ifdef HYP3_HAVE_OPENMP
#include <omp.h>
#endif

namespace hyp3 {

// Runs n independent trials; trial i draws from Rng(seed, i), so the margin
// vector is bit-identical whether the loop runs serially or under OpenMP.
// The serial path is the reference implementation used by the consistency
// tests and the benchmark.
template <typename F>
std::vector<double> run_trials(int n, std::uint64_t seed, bool parallel, F&& fn) {
    std::vector<double> out(std::size_t(std::max(0, n)));
    if (parallel) {
#ifdef HYP3_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int i = 0; i < n; ++i) {
            Rng rng(seed, std::uint64_t(i));
            double m;
            try {
                m = fn(rng, i);
            } catch (...) {
                m = -1e9;
            }
            out[std::size_t(i)] = m;
        }
    } else {
        for (int i = 0; i < n; ++i) {
            Rng rng(seed, std::uint64_t(i));
            double m;
            try {
                m = fn(rng, i);
            } catch (...) {
                m = -1e9;
            }
            out[std::size_t(i)] = m;
        }
    }
    return out;
}

inline double min_margin(const std::vector<double>& v) {
    double m = 1e300;
    for (double x : v) m = std::min(m, x);
    return v.empty() ? 0.0 : m;
}

inline double fraction_positive(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    std::size_t k = 0;
    for (double x : v)
        if (x > 0.0) ++k;
    return double(k) / double(v.size());
}

} // namespace hyp3
