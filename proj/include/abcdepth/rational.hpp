#pragma once

#include <cstdint>
#include <string>

namespace abcdepth {

/// Exact depth value on the 1/n grid, kept unreduced as num/den.
struct Depth {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Depth& a, const Depth& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const Depth& a, const Depth& b) { return !(a == b); }
    friend bool operator<(const Depth& a, const Depth& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Depth& a, const Depth& b) { return a < b || a == b; }
    friend bool operator>(const Depth& a, const Depth& b) { return b < a; }
    friend bool operator>=(const Depth& a, const Depth& b) { return b <= a; }
};

}  // namespace abcdepth
