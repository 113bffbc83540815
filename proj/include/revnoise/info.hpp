#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "revnoise/distribution.hpp"

namespace revnoise {

/// Probabilities below this count as exact zeros in entropy sums.
inline constexpr double kEntropyZeroTol = 1e-15;

/// Shannon entropy in bits of an arbitrary probability vector.
inline double shannon_entropy_of(std::span<const double> probs) {
    double h = 0.0;
    for (double q : probs)
        if (q > kEntropyZeroTol) h -= q * std::log2(q);
    return h;
}

inline double shannon_entropy(const BitDistribution& dist) {
    return shannon_entropy_of(dist.probs);
}

/// Binary entropy H(q) in bits.
inline double binary_entropy(double q) {
    double h = 0.0;
    if (q > kEntropyZeroTol) h -= q * std::log2(q);
    if (1.0 - q > kEntropyZeroTol) h -= (1.0 - q) * std::log2(1.0 - q);
    return h;
}

/// Shannon information I = N - H, the quantity whose per-noise-step decay
/// drives all the lower bounds here.
inline double information(const BitDistribution& dist) {
    return static_cast<double>(dist.width) - shannon_entropy(dist);
}

/// Pushes the distribution through the binary symmetric channel on one wire:
/// the bit flips with probability p, independently of everything else.
inline void apply_bsc_wire(BitDistribution& dist, std::uint32_t wire, double p) {
    if (p < 0.0 || p > 0.5) throw std::invalid_argument("flip probability must be in [0, 1/2]");
    if (wire >= dist.width) throw std::invalid_argument("wire out of range");
    Word mask = bit_mask(dist.width, wire);
    for (std::size_t s = 0; s < dist.probs.size(); ++s) {
        if (s & mask) continue;
        std::size_t t = s | mask;
        double a = dist.probs[s], b = dist.probs[t];
        dist.probs[s] = (1.0 - p) * a + p * b;
        dist.probs[t] = p * a + (1.0 - p) * b;
    }
}

/// Exact pushforward through the product flip channel (every wire, same p).
inline BitDistribution apply_bsc(const BitDistribution& dist, double p) {
    BitDistribution out = dist;
    for (std::uint32_t w = 0; w < out.width; ++w) apply_bsc_wire(out, w, p);
    return out;
}

/// Information of a single bit with bias delta: Pr[1] = (1+delta)/2.
/// Closed form K(delta) = ((1+d)log2(1+d) + (1-d)log2(1-d))/2 = 1 - H((1+d)/2).
inline double binary_information_K(double delta) {
    if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("delta must be in [0, 1]");
    double k = 0.0;
    if (1.0 + delta > kEntropyZeroTol) k += (1.0 + delta) * std::log2(1.0 + delta);
    if (1.0 - delta > kEntropyZeroTol) k += (1.0 - delta) * std::log2(1.0 - delta);
    return k / 2.0;
}

/// K(delta) via its power series (1/ln 2) * sum_k delta^{2k} / [2k(2k-1)],
/// truncated once terms drop below `term_tol`. Converges on [0, 1].
inline double binary_information_K_series(double delta, double term_tol = 1e-18,
                                          std::size_t max_terms = 2000000) {
    if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("delta must be in [0, 1]");
    double d2 = delta * delta;
    double power = 1.0;
    double sum = 0.0;
    for (std::size_t k = 1; k <= max_terms; ++k) {
        power *= d2;
        double term = power / static_cast<double>(2 * k * (2 * k - 1));
        sum += term;
        if (term < term_tol) break;
    }
    return sum / std::log(2.0);
}

/// One application of the information-decay inequality: pushing X through the
/// product flip channel with probability p obeys I(Y) <= (1-2p)^2 I(X).
struct DecayCheck {
    double info_before = 0.0;
    double info_after = 0.0;
    double bound = 0.0;
    bool holds = false;
};

inline DecayCheck verify_decay_lemma(const BitDistribution& dist, double p,
                                     double tol = 1e-9) {
    DecayCheck c;
    c.info_before = information(dist);
    c.info_after = information(apply_bsc(dist, p));
    double rho = 1.0 - 2.0 * p;
    c.bound = rho * rho * c.info_before;
    c.holds = c.info_after <= c.bound + tol;
    return c;
}

/// Per-time-step information records against the geometric decay envelope.
struct DecayCurve {
    struct Record {
        int step = 0;
        double information = 0.0;
        double bound = 0.0;
        /// Information re-measured after the step's gate layer; permutations
        /// must leave it unchanged. NaN for the initial record.
        double information_after_gates = std::numeric_limits<double>::quiet_NaN();
    };
    std::vector<Record> records;

    void write_csv(std::ostream& out) const {
        out << "m,I_m,bound_m\n";
        for (const auto& r : records)
            out << r.step << ',' << r.information << ',' << r.bound << '\n';
    }
};

} // namespace revnoise
