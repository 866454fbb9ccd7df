#pragma once

#include <cmath>
#include <numbers>
#include <utility>

#include "quidsim/errors.hpp"
#include "quidsim/gate_matrix.hpp"
#include "quidsim/statevector.hpp"

namespace quidsim {

inline GateMatrix identity() {
    return make_gate({1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0});
}

inline GateMatrix pauli_x() {
    return make_gate({0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0});
}

inline GateMatrix pauli_z() {
    return make_gate({1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0});
}

inline GateMatrix hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return make_gate({s, 0.0}, {s, 0.0}, {s, 0.0}, {-s, 0.0});
}

/// How far |alpha|^2 + |beta|^2 may drift from 1 before an amplitude pair is
/// rejected. Loose enough to accept values quoted to five decimal places;
/// accepted pairs are renormalized exactly before use.
inline constexpr double kStateNormTolerance = 1e-4;

/// Validates an amplitude pair against kStateNormTolerance and returns it
/// scaled to unit norm. Throws NotNormalized otherwise (including NaN/inf).
inline std::pair<Complex, Complex> normalize_pair(Complex alpha, Complex beta) {
    const double norm_sq = std::norm(alpha) + std::norm(beta);
    if (!(std::abs(norm_sq - 1.0) <= kStateNormTolerance))
        throw NotNormalized("|alpha|^2 + |beta|^2 = " + std::to_string(norm_sq) +
                            " is not within " + std::to_string(kStateNormTolerance) + " of 1");
    const double scale = 1.0 / std::sqrt(norm_sq);
    return {alpha * scale, beta * scale};
}

/// Unitary whose first column is (alpha, beta): it maps |0> to the target
/// state. The second column is fixed as (-conj(beta), conj(alpha)).
inline GateMatrix preparation_unitary(Complex alpha, Complex beta) {
    auto [a, b] = normalize_pair(alpha, beta);
    return make_gate(a, -std::conj(b), b, std::conj(a));
}

/// Single-qubit state alpha|0> + beta|1>, renormalized exactly.
inline StateVector prepare_qubit(Complex alpha, Complex beta) {
    auto [a, b] = normalize_pair(alpha, beta);
    return StateVector::from_amplitudes({a, b});
}

struct BlochVector {
    double x;
    double y;
    double z;
};

/// Bloch-sphere coordinates of alpha|0> + beta|1>:
/// x = 2 Re(conj(alpha) beta), y = 2 Im(conj(alpha) beta),
/// z = |alpha|^2 - |beta|^2. Always a unit vector for a pure state.
inline BlochVector bloch_coords(Complex alpha, Complex beta) {
    auto [a, b] = normalize_pair(alpha, beta);
    const Complex cross = std::conj(a) * b;
    return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(a) - std::norm(b)};
}

} // namespace quidsim
