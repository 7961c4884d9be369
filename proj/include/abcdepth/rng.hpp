#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace abcdepth {

// Seeded generator used by every randomized component. The uniform and
// normal mappings are written out explicitly so that streams are identical
// across standard libraries, not just across runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Standard normal via the Box-Muller transform; consumes two uniforms.
    double normal() {
        double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi_ * u2);
    }

    std::uint64_t next_u64() { return eng_(); }

private:
    static constexpr double pi_ = 3.14159265358979323846;
    std::mt19937_64 eng_;
};

}  // namespace abcdepth
