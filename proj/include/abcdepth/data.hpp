#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace abcdepth {

enum class Origin : std::uint8_t { original, artificial };

// n points in R^d, row-major. Original rows come first; artificial rows can
// only be appended, never interleaved. Duplicate rows are allowed.
class DataMatrix {
public:
    DataMatrix() = default;

    DataMatrix(std::vector<double> values, std::size_t dim)
        : values_(std::move(values)), d_(dim) {
        if (d_ == 0) throw std::invalid_argument("DataMatrix: dimension must be >= 1");
        if (values_.empty() || values_.size() % d_ != 0)
            throw std::invalid_argument("DataMatrix: values size not a multiple of d");
        n_original_ = values_.size() / d_;
        check_finite(0);
    }

    std::size_t n_original() const { return n_original_; }
    std::size_t n_total() const { return values_.size() / d_; }
    std::size_t n_artificial() const { return n_total() - n_original_; }
    std::size_t d() const { return d_; }

    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * d_, d_};
    }

    Origin origin(std::size_t i) const {
        return i < n_original_ ? Origin::original : Origin::artificial;
    }

    bool is_original(std::size_t i) const { return i < n_original_; }

    /// Appends rows flagged artificial; `flat` is row-major count*d doubles.
    void append_artificial(std::span<const double> flat) {
        if (flat.size() % d_ != 0)
            throw std::invalid_argument("append_artificial: size not a multiple of d");
        std::size_t first = n_total();
        values_.insert(values_.end(), flat.begin(), flat.end());
        check_finite(first);
    }

    const std::vector<double>& values() const { return values_; }

private:
    void check_finite(std::size_t from_row) const {
        for (std::size_t i = from_row * d_; i < values_.size(); ++i)
            if (!std::isfinite(values_[i]))
                throw std::invalid_argument("DataMatrix: non-finite coordinate in row " +
                                            std::to_string(i / d_));
    }

    std::vector<double> values_;
    std::size_t n_original_ = 0;
    std::size_t d_ = 0;
};

}  // namespace abcdepth
