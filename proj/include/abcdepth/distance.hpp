#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "abcdepth/data.hpp"
#include "abcdepth/parallel.hpp"

namespace abcdepth {

/// Euclidean distance; fixed left-to-right accumulation so recomputed values
/// match stored ones bit for bit.
inline double euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("euclidean: dimension mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        double diff = a[k] - b[k];
        s += diff * diff;
    }
    return std::sqrt(s);
}

// Lower-triangular pairwise distances: row i (i >= 1) holds d(x_i, x_j) for
// j < i, packed contiguously.
class DistanceStore {
public:
    DistanceStore() = default;

    explicit DistanceStore(std::size_t n) : n_(n), tri_(n * (n - 1) / 2, 0.0) {}

    std::size_t n() const { return n_; }
    std::size_t pair_count() const { return tri_.size(); }

    double dist(std::size_t i, std::size_t j) const {
        if (i == j) return 0.0;
        if (i < j) std::swap(i, j);
        return tri_[i * (i - 1) / 2 + j];
    }

    double& at(std::size_t i, std::size_t j) {
        return tri_[i * (i - 1) / 2 + j];  // requires j < i
    }

    /// Distances d(x_i, x_j), j = 0..i-1.
    std::span<const double> row(std::size_t i) const {
        return {tri_.data() + i * (i - 1) / 2, i};
    }

private:
    std::size_t n_ = 0;
    std::vector<double> tri_;
};

/// All n(n-1)/2 Euclidean inter-distances of X.
inline DistanceStore pairwise_distances(const DataMatrix& X, int threads = 1) {
    const std::size_t n = X.n_total();
    DistanceStore D(n);
    detail::parallel_for(1, n, threads, [&](std::size_t i) {
        auto xi = X.row(i);
        for (std::size_t j = 0; j < i; ++j) D.at(i, j) = euclidean(xi, X.row(j));
    });
    return D;
}

}  // namespace abcdepth
