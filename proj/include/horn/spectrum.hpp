#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace horn {

/// Ordered spectrum: a finite sequence of reals in non-increasing order.
class Spectrum {
public:
    Spectrum() = default;

    /// Throws unless the values are already non-increasing (NaN rejected).
    explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {
        for (std::size_t k = 0; k + 1 < values_.size(); ++k) {
            if (!(values_[k] >= values_[k + 1]))
                throw std::invalid_argument("spectrum values must be non-increasing");
        }
        if (values_.size() == 1 && std::isnan(values_[0]))
            throw std::invalid_argument("spectrum values must be finite");
    }

    /// Sorts into non-increasing order first.
    static Spectrum sorted(std::vector<double> values) {
        std::sort(values.begin(), values.end(), std::greater<double>());
        return Spectrum(std::move(values));
    }

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    const std::vector<double>& values() const { return values_; }

    double sum() const {
        double s = 0.0;
        for (double v : values_) s += v;
        return s;
    }

    double one_norm() const {
        double s = 0.0;
        for (double v : values_) s += std::abs(v);
        return s;
    }

    bool operator==(const Spectrum&) const = default;

private:
    std::vector<double> values_;
};

}  // namespace horn
