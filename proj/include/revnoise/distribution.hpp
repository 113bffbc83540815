#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "revnoise/bits.hpp"

namespace revnoise {

inline constexpr double kNormalizationTol = 1e-12;

/// Exact probability vector over {0,1}^N, indexed by packed state.
struct BitDistribution {
    std::uint32_t width = 0;
    std::vector<double> probs;

    static BitDistribution point_mass(std::uint32_t width, Word state) {
        if (width == 0 || width > 30)
            throw std::invalid_argument("distribution width must be in 1..30");
        BitDistribution d;
        d.width = width;
        d.probs.assign(std::size_t{1} << width, 0.0);
        d.probs.at(state) = 1.0;
        return d;
    }

    static BitDistribution uniform(std::uint32_t width) {
        BitDistribution d;
        d.width = width;
        d.probs.assign(std::size_t{1} << width,
                       1.0 / static_cast<double>(std::size_t{1} << width));
        return d;
    }

    std::size_t support_size() const { return probs.size(); }

    double total() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

    bool is_valid(double tol = kNormalizationTol) const {
        if (probs.size() != (std::size_t{1} << width)) return false;
        for (double p : probs)
            if (p < 0.0 || !std::isfinite(p)) return false;
        return std::abs(total() - 1.0) <= tol;
    }

    /// Pr[bit at `wire` = 1].
    double marginal_one(std::uint32_t wire) const {
        Word mask = bit_mask(width, wire);
        double m = 0.0;
        for (std::size_t s = 0; s < probs.size(); ++s)
            if (s & mask) m += probs[s];
        return m;
    }
};

} // namespace revnoise
