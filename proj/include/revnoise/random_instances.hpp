#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "revnoise/distribution.hpp"
#include "revnoise/rng.hpp"

namespace revnoise {

/// Uniform draw from the probability simplex (exponential spacings).
inline BitDistribution random_simplex_distribution(std::uint32_t width, DetRng& rng) {
    BitDistribution d;
    d.width = width;
    d.probs.resize(std::size_t{1} << width);
    double total = 0.0;
    for (double& p : d.probs) {
        p = rng.exponential();
        total += p;
    }
    for (double& p : d.probs) p /= total;
    return d;
}

/// Distribution supported on `support` random states with random weights.
inline BitDistribution random_sparse_distribution(std::uint32_t width, std::size_t support,
                                                  DetRng& rng) {
    BitDistribution d;
    d.width = width;
    d.probs.assign(std::size_t{1} << width, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < support; ++i) {
        double w = rng.exponential();
        d.probs[rng.uniform_index(d.probs.size())] += w;
        total += w;
    }
    for (double& p : d.probs) p /= total;
    return d;
}

/// Random test distribution with adversarial corners mixed in: point masses
/// and two-point supports alongside full-simplex draws. Decay inequalities
/// quantify over all distributions, so corners matter.
inline BitDistribution random_test_distribution(std::uint32_t width, DetRng& rng) {
    switch (rng.uniform_index(5)) {
        case 0:
            return BitDistribution::point_mass(
                width, rng.uniform_index(std::uint64_t{1} << width));
        case 1: return random_sparse_distribution(width, 2, rng);
        default: return random_simplex_distribution(width, rng);
    }
}

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of R's diagonal folded into Q.
inline Eigen::MatrixXcd random_unitary(int dim, DetRng& rng) {
    Eigen::MatrixXcd g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = std::complex<double>(rng.normal(), rng.normal());
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < dim; ++c) {
        std::complex<double> d = r(c, c);
        double a = std::abs(d);
        q.col(c) *= (a > 0) ? d / a : 1.0;
    }
    return q;
}

/// GUE-style random Hermitian matrix; eigenvalues are almost surely simple.
inline Eigen::MatrixXcd random_hermitian(int dim, DetRng& rng) {
    Eigen::MatrixXcd g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = std::complex<double>(rng.normal(), rng.normal());
    return 0.5 * (g + g.adjoint());
}

} // namespace revnoise
