#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace warpspace {

// Wrap x into [0, c). Result of exactly c collapses to 0.
inline double wrap_coord(double x, double c) {
    double m = std::fmod(x, c);
    if (m < 0) m += c;
    if (m >= c) m = 0.0;
    return m;
}

// Signed shortest displacement a -> b on a circle of circumference c,
// in (-c/2, c/2]. Antipodal ties resolve to +c/2 (positive direction).
inline double circle_delta(double a, double b, double c) {
    double d = wrap_coord(b - a, c);
    if (d > c / 2) d -= c;
    return d;
}

inline double circle_dist(double a, double b, double c) {
    return std::fabs(circle_delta(a, b, c));
}

// Deterministic RNG wrapper. std::mt19937_64 has a fixed sequence everywhere;
// the uniform/normal draws below avoid std::*_distribution, whose output is
// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {  // [0, 1)
        return (eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t bits() { return eng_(); }
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    double normal() {  // Box-Muller, one value per call pair kept simple
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

private:
    std::mt19937_64 eng_;
};

// Runs fn(i) for i in [0, n). Honors WARPSPACE_THREADS; results must be written
// to disjoint slots so the output does not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Thread cap from WARPSPACE_THREADS (>=1), else hardware concurrency.
unsigned thread_cap();

} // namespace warpspace
