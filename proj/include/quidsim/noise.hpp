#pragma once

#include <cstddef>
#include <stdexcept>

#include "quidsim/gates.hpp"
#include "quidsim/random.hpp"
#include "quidsim/statevector.hpp"

namespace quidsim {

/// Trajectory-level noise knobs. With `enabled` false the sampler must not
/// draw any noise randomness, so a disabled run is bit-identical to one with
/// both probabilities set to zero.
struct NoiseConfig {
    double readout_flip_p = 0.0;
    double depolarizing_p = 0.0;
    bool enabled = false;

    void validate() const {
        if (!(readout_flip_p >= 0.0 && readout_flip_p <= 1.0))
            throw std::invalid_argument("readout_flip_p must be in [0, 1]");
        if (!(depolarizing_p >= 0.0 && depolarizing_p <= 1.0))
            throw std::invalid_argument("depolarizing_p must be in [0, 1]");
    }
};

/// Classical readout error: flips the recorded bit with probability p.
inline int apply_readout_flip(int bit, double p, RandomSource& rng) {
    return rng.uniform() < p ? bit ^ 1 : bit;
}

/// One depolarizing trajectory step on `qubit`: with probability p applies a
/// Pauli chosen uniformly from {X, Y, Z}, otherwise leaves the state alone.
/// Consumes one draw to decide, plus one more only when an error fires.
inline void apply_depolarizing(StateVector& state, std::size_t qubit, double p,
                               RandomSource& rng) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("depolarizing probability must be in [0, 1]");
    if (!(rng.uniform() < p)) return;
    const double which = rng.uniform() * 3.0;
    if (which < 1.0) {
        state.apply_single(qubit, pauli_x());
    } else if (which < 2.0) {
        // Y = iXZ
        state.apply_single(qubit, make_gate({0.0, 0.0}, {0.0, -1.0}, {0.0, 1.0}, {0.0, 0.0}));
    } else {
        state.apply_single(qubit, pauli_z());
    }
}

} // namespace quidsim
