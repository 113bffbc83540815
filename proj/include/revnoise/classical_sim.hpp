#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "revnoise/circuit.hpp"
#include "revnoise/distribution.hpp"
#include "revnoise/errors.hpp"
#include "revnoise/info.hpp"
#include "revnoise/rng.hpp"

namespace revnoise {

inline constexpr std::uint32_t kDefaultExactWidthCap = 20;

/// Per-wire per-time-unit bit-flip noise. Every wire — idle ones included —
/// flips independently with probability p once per time unit; this is what
/// makes deep circuits decay. The schedule is (noise, layer) for each layer;
/// `final_noise_step` adds one more noise step after the last layer (the
/// variant where the output wire lives one extra unit before being read).
struct NoiseModel {
    double p = 0.0;
    bool final_noise_step = false;

    void check() const {
        if (!(p >= 0.0 && p < 0.5))
            throw std::invalid_argument("flip probability must satisfy 0 <= p < 1/2");
    }

    std::size_t noise_steps(std::size_t depth) const {
        return depth + (final_noise_step ? 1 : 0);
    }
};

// ---------------------------------------------------------------------------
// Exact propagation
// ---------------------------------------------------------------------------

/// Step-by-step exact propagation of the full 2^N distribution. Exposed as a
/// class so experiments can observe the state between noise and gate steps.
class ExactPropagator {
  public:
    ExactPropagator(const ReversibleCircuit& circuit, NoiseModel noise, Word input,
                    std::uint32_t width_cap = kDefaultExactWidthCap)
        : circuit_(circuit), noise_(noise) {
        noise_.check();
        if (circuit.width > width_cap)
            throw ResourceLimitError("exact propagation width over cap", circuit.width,
                                     width_cap);
        state_ = BitDistribution::point_mass(circuit.width, input);
    }

    /// One noise time unit: independent flip channel on every wire.
    void apply_noise_step() {
        for (std::uint32_t w = 0; w < state_.width; ++w)
            apply_bsc_wire(state_, w, noise_.p);
    }

    /// Pushes the distribution through one layer's permutation.
    void apply_layer(std::size_t layer_index) {
        const Layer& layer = circuit_.layers.at(layer_index);
        if (layer.gates.empty()) return;
        std::vector<double> next(state_.probs.size());
        for (std::size_t s = 0; s < state_.probs.size(); ++s) {
            Word t = revnoise::apply_layer(layer, state_.width, static_cast<Word>(s));
            next[t] = state_.probs[s];
        }
        state_.probs = std::move(next);
    }

    /// Runs the remaining schedule to completion and returns the final state.
    const BitDistribution& run() {
        for (std::size_t li = 0; li < circuit_.depth(); ++li) {
            apply_noise_step();
            apply_layer(li);
        }
        if (noise_.final_noise_step) apply_noise_step();
        return state_;
    }

    const BitDistribution& state() const { return state_; }
    const ReversibleCircuit& circuit() const { return circuit_; }

  private:
    const ReversibleCircuit& circuit_;
    NoiseModel noise_;
    BitDistribution state_;
};

/// Exact final distribution of the noisy circuit on a fixed input.
inline BitDistribution propagate_exact(const ReversibleCircuit& circuit, NoiseModel noise,
                                       Word input,
                                       std::uint32_t width_cap = kDefaultExactWidthCap) {
    ExactPropagator prop(circuit, noise, input, width_cap);
    return prop.run();
}

/// Runs propagation recording information after each noise step, against the
/// envelope (1-2p)^{2m} * n. Stops after `max_steps` noise steps if the
/// circuit is deeper.
inline DecayCurve decay_curve(const ReversibleCircuit& circuit, NoiseModel noise, Word input,
                              std::size_t max_steps,
                              std::uint32_t width_cap = kDefaultExactWidthCap) {
    ExactPropagator prop(circuit, noise, input, width_cap);
    double n = static_cast<double>(circuit.width);
    double rho2 = (1.0 - 2.0 * noise.p) * (1.0 - 2.0 * noise.p);
    DecayCurve curve;
    curve.records.push_back({0, information(prop.state()), n, information(prop.state())});
    std::size_t steps = std::min(max_steps, circuit.depth());
    double bound = n;
    for (std::size_t m = 1; m <= steps; ++m) {
        prop.apply_noise_step();
        bound *= rho2;
        double info_after_noise = information(prop.state());
        prop.apply_layer(m - 1);
        curve.records.push_back({static_cast<int>(m), info_after_noise, bound,
                                 information(prop.state())});
    }
    return curve;
}

// ---------------------------------------------------------------------------
// Monte Carlo
// ---------------------------------------------------------------------------

/// One Monte Carlo trial; flip draws are a pure function of
/// (seed, trial, time step, wire), so any execution order is bit-identical.
inline Word run_mc_trial(const ReversibleCircuit& circuit, const NoiseModel& noise, Word input,
                         const CounterRng& rng, std::uint64_t trial) {
    Word state = input;
    for (std::size_t li = 0; li < circuit.depth(); ++li) {
        for (std::uint32_t w = 0; w < circuit.width; ++w)
            if (rng.bernoulli(noise.p, trial, li, w))
                state = flip_bit(state, circuit.width, w);
        state = apply_layer(circuit.layers[li], circuit.width, state);
    }
    if (noise.final_noise_step)
        for (std::uint32_t w = 0; w < circuit.width; ++w)
            if (rng.bernoulli(noise.p, trial, circuit.depth(), w))
                state = flip_bit(state, circuit.width, w);
    return state;
}

/// z-score for a symmetric two-sided normal confidence interval.
inline double z_for_confidence(double confidence) {
    if (confidence >= 0.999) return 3.2905;
    if (confidence >= 0.99) return 2.5758;
    if (confidence >= 0.95) return 1.9600;
    return 1.6449;
}

struct SimReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double p = 0.0;
    std::uint32_t width = 0;
    std::uint32_t result_wire = 0;
    std::string input;
    std::string noiseless_output;
    std::vector<double> marginals;  // Pr[wire = 1], per wire
    double result_p0 = 0.0;
    double result_p1 = 0.0;
    /// Fraction of trials whose result bit differs from the noiseless run.
    double empirical_error = 0.0;
    double confidence = 0.99;
    double half_width = 0.0;  // CI half-width for the result-bit frequency

    void write_csv(std::ostream& out) const {
        out << "quantity,value\n";
        out << "trials," << trials << "\n";
        out << "seed," << seed << "\n";
        out << "p," << p << "\n";
        out << "width," << width << "\n";
        out << "result_wire," << result_wire << "\n";
        out << "input," << input << "\n";
        out << "noiseless_output," << noiseless_output << "\n";
        for (std::size_t w = 0; w < marginals.size(); ++w)
            out << "marginal_" << w << "," << marginals[w] << "\n";
        out << "result_p0," << result_p0 << "\n";
        out << "result_p1," << result_p1 << "\n";
        out << "empirical_error," << empirical_error << "\n";
        out << "confidence," << confidence << "\n";
        out << "half_width," << half_width << "\n";
    }
};

/// Seeded Monte Carlo estimate of the noisy circuit's output statistics.
/// Deterministic given (seed, trials).
inline SimReport simulate_monte_carlo(const ReversibleCircuit& circuit, NoiseModel noise,
                                      Word input, std::uint64_t trials, std::uint64_t seed,
                                      double confidence = 0.99) {
    noise.check();
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    if (circuit.width > kMaxPackedWidth)
        throw ResourceLimitError("Monte Carlo width over cap", circuit.width, kMaxPackedWidth);
    CounterRng rng(seed);
    Word reference = evaluate_noiseless(circuit, input);
    std::vector<std::uint64_t> ones(circuit.width, 0);
    std::uint64_t result_ones = 0;
    std::uint64_t errors = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Word out = run_mc_trial(circuit, noise, input, rng, t);
        for (std::uint32_t w = 0; w < circuit.width; ++w)
            ones[w] += static_cast<std::uint64_t>(get_bit(out, circuit.width, w));
        int rbit = get_bit(out, circuit.width, circuit.result_wire);
        result_ones += static_cast<std::uint64_t>(rbit);
        errors += static_cast<std::uint64_t>(
            rbit != get_bit(reference, circuit.width, circuit.result_wire));
    }
    SimReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.p = noise.p;
    rep.width = circuit.width;
    rep.result_wire = circuit.result_wire;
    rep.input = format_bits(input, circuit.width);
    rep.noiseless_output = format_bits(reference, circuit.width);
    rep.marginals.resize(circuit.width);
    double n = static_cast<double>(trials);
    for (std::uint32_t w = 0; w < circuit.width; ++w)
        rep.marginals[w] = static_cast<double>(ones[w]) / n;
    rep.result_p1 = static_cast<double>(result_ones) / n;
    rep.result_p0 = 1.0 - rep.result_p1;
    rep.empirical_error = static_cast<double>(errors) / n;
    rep.confidence = confidence;
    double q = rep.result_p1;
    rep.half_width = z_for_confidence(confidence) * std::sqrt(q * (1.0 - q) / n);
    return rep;
}

// ---------------------------------------------------------------------------
// Probed Monte Carlo: flip statistics of chosen wires at chosen layers,
// measured against the noiseless reference trajectory. Used to check
// level-by-level error containment of encoded circuits.
// ---------------------------------------------------------------------------

struct Probe {
    std::size_t after_layer = 0;  // snapshot taken right after this layer fires
    std::vector<std::uint32_t> wires;
};

struct ProbeStats {
    Probe probe;
    std::uint64_t observations = 0;  // trials * wires
    std::uint64_t flips = 0;         // mismatches vs the noiseless trajectory

    double flip_rate() const {
        return observations ? static_cast<double>(flips) / static_cast<double>(observations)
                            : 0.0;
    }
};

inline std::vector<ProbeStats> simulate_with_probes(const ReversibleCircuit& circuit,
                                                    NoiseModel noise, Word input,
                                                    std::uint64_t trials, std::uint64_t seed,
                                                    const std::vector<Probe>& probes) {
    noise.check();
    if (circuit.width > kMaxPackedWidth)
        throw ResourceLimitError("Monte Carlo width over cap", circuit.width, kMaxPackedWidth);
    // Noiseless reference state after each layer.
    std::vector<Word> reference(circuit.depth() + 1);
    reference[0] = input;
    for (std::size_t li = 0; li < circuit.depth(); ++li)
        reference[li + 1] = apply_layer(circuit.layers[li], circuit.width, reference[li]);

    std::vector<ProbeStats> stats;
    stats.reserve(probes.size());
    for (const auto& pr : probes) stats.push_back({pr, 0, 0});

    CounterRng rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Word state = input;
        for (std::size_t li = 0; li < circuit.depth(); ++li) {
            for (std::uint32_t w = 0; w < circuit.width; ++w)
                if (rng.bernoulli(noise.p, t, li, w))
                    state = flip_bit(state, circuit.width, w);
            state = apply_layer(circuit.layers[li], circuit.width, state);
            for (auto& st : stats) {
                if (st.probe.after_layer != li) continue;
                for (std::uint32_t w : st.probe.wires) {
                    ++st.observations;
                    st.flips += static_cast<std::uint64_t>(
                        get_bit(state, circuit.width, w) !=
                        get_bit(reference[li + 1], circuit.width, w));
                }
            }
        }
    }
    return stats;
}

// ---------------------------------------------------------------------------
// Worthlessness
// ---------------------------------------------------------------------------

struct WorthlessOptions {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    double confidence = 0.99;
    /// Use exact propagation instead of Monte Carlo (half-widths become 0).
    bool exact = false;
    std::uint32_t width_cap = kDefaultExactWidthCap;
};

struct WorthlessVerdict {
    std::string input;
    double p0 = 0.0;
    double p1 = 0.0;
    double half_width = 0.0;
    /// Both outcomes estimated at probability >= 0.49 - half_width.
    bool worthless_consistent = false;
};

struct WorthlessReport {
    std::vector<WorthlessVerdict> per_input;
    bool all_worthless_consistent = false;
};

/// Tests each input against the 49/100 definition: the circuit is
/// worthless-consistent on an input when both result-bit values appear with
/// probability at least 0.49 (minus sampling slack).
inline WorthlessReport worthless_test(const ReversibleCircuit& circuit, NoiseModel noise,
                                      const std::vector<Word>& inputs,
                                      const WorthlessOptions& opts = {}) {
    if (inputs.empty()) throw std::invalid_argument("worthless_test needs at least one input");
    WorthlessReport rep;
    rep.all_worthless_consistent = true;
    for (Word in : inputs) {
        WorthlessVerdict v;
        v.input = format_bits(in, circuit.width);
        if (opts.exact) {
            BitDistribution dist = propagate_exact(circuit, noise, in, opts.width_cap);
            v.p1 = dist.marginal_one(circuit.result_wire);
            v.p0 = 1.0 - v.p1;
            v.half_width = 0.0;
        } else {
            SimReport r = simulate_monte_carlo(circuit, noise, in, opts.trials, opts.seed,
                                               opts.confidence);
            v.p0 = r.result_p0;
            v.p1 = r.result_p1;
            v.half_width = r.half_width;
        }
        v.worthless_consistent =
            v.p0 >= 0.49 - v.half_width && v.p1 >= 0.49 - v.half_width;
        rep.all_worthless_consistent = rep.all_worthless_consistent && v.worthless_consistent;
        rep.per_input.push_back(std::move(v));
    }
    return rep;
}

} // namespace revnoise
