#pragma once

#include <cstddef>
#include <string>

#include "quidsim/errors.hpp"
#include "quidsim/random.hpp"
#include "quidsim/statevector.hpp"

namespace quidsim {

struct MeasurementRecord {
    std::size_t qubit;
    int outcome;
    /// Pre-collapse probability of the outcome that occurred.
    double probability;
};

/// Projectively measures one qubit, collapsing the state in place. The
/// outcome is 1 when the next uniform draw falls below P(1).
inline MeasurementRecord measure(StateVector& state, std::size_t qubit, RandomSource& rng) {
    const double p1 = state.prob_one(qubit);
    const int outcome = rng.uniform() < p1 ? 1 : 0;
    const double p = state.collapse(qubit, outcome);
    return {qubit, outcome, p};
}

/// Collapses one qubit onto a chosen outcome instead of sampling, for
/// replaying a specific measurement branch. Returns the probability the
/// branch had; outcomes with probability <= 1e-12 are rejected.
inline double measure_forced(StateVector& state, std::size_t qubit, int outcome) {
    if (outcome != 0 && outcome != 1)
        throw std::invalid_argument("measurement outcome must be 0 or 1");
    const double p1 = state.prob_one(qubit);
    const double p = outcome == 1 ? p1 : 1.0 - p1;
    if (p <= 1e-12)
        throw ImpossibleOutcome("forced outcome " + std::to_string(outcome) + " on qubit " +
                                std::to_string(qubit) + " has probability " + std::to_string(p));
    state.collapse(qubit, outcome);
    return p;
}

} // namespace quidsim
