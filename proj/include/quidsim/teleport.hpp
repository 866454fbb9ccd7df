#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quidsim/circuit.hpp"
#include "quidsim/quid.hpp"
#include "quidsim/sampling.hpp"

namespace quidsim {

/// Teleportation of one qubit state across a shared Bell pair.
///
/// Layout, fixed across this header: qubit 0 carries the message state,
/// qubit 1 is the sender's half of the Bell pair, qubit 2 is the receiver's
/// half. Classical bit 0 (m_psi) records the message-qubit measurement,
/// classical bit 1 (m_a) the sender-half measurement, so sampled keys read
/// "receiver, m_a, m_psi" left to right.

/// Correction gates the receiver applies for outcomes (m_psi, m_a), in
/// application order: X when m_a = 1, then Z when m_psi = 1.
inline std::vector<std::string> correction_for(int m_psi, int m_a) {
    if ((m_psi != 0 && m_psi != 1) || (m_a != 0 && m_a != 1))
        throw std::invalid_argument("measurement outcomes must be 0 or 1");
    std::vector<std::string> ops;
    if (m_a == 1) ops.emplace_back("X");
    if (m_psi == 1) ops.emplace_back("Z");
    return ops;
}

/// The canonical protocol: prepare the message, create the Bell pair, run
/// the sender's Bell measurement, then the conditioned corrections (X before
/// Z, matching correction_for).
inline CircuitProgram build_teleport_program(const QuID& psi) {
    CircuitProgram prog;
    prog.num_qubits = 3;
    prog.num_clbits = 2;
    prog.clbit_names = {"m_psi", "m_a"};
    prog.prepare(0, psi.alpha(), psi.beta());
    prog.gate(Gate::H, 1);
    prog.controlled(Gate::X, 1, 2);
    prog.controlled(Gate::X, 0, 1);
    prog.gate(Gate::H, 0);
    prog.measure_into(0, 0);
    prog.measure_into(1, 1);
    prog.conditional(Gate::X, 2, 1);
    prog.conditional(Gate::Z, 2, 0);
    return prog;
}

struct TeleportResult {
    int m_psi;
    int m_a;
    std::vector<std::string> corrections;
    /// Post-correction three-qubit state. Only the two basis states
    /// consistent with the measured branch have support.
    StateVector state;
    /// Receiver amplitudes (alpha, beta) read from that branch.
    std::pair<Complex, Complex> receiver;
    /// Probability of the measured branch, 1/4 for any message state.
    double branch_probability;
};

namespace detail {

inline TeleportResult teleport_result_from_shot(ShotResult shot) {
    const int m_psi = shot.records.at(0).outcome;
    const int m_a = shot.records.at(1).outcome;
    const double branch_p = shot.records.at(0).probability * shot.records.at(1).probability;
    const std::size_t lo = static_cast<std::size_t>(m_psi) + 2 * static_cast<std::size_t>(m_a);
    std::pair<Complex, Complex> receiver{shot.state[lo], shot.state[lo | 4]};
    return {m_psi, m_a,          correction_for(m_psi, m_a),
            std::move(shot.state), std::move(receiver), branch_p};
}

} // namespace detail

/// One noiseless teleportation with randomly sampled measurement outcomes.
inline TeleportResult run_teleport_statevector(const QuID& psi, RandomSource& rng) {
    return detail::teleport_result_from_shot(execute(build_teleport_program(psi), rng));
}

/// One noiseless teleportation replaying the chosen measurement branch.
inline TeleportResult run_teleport_forced(const QuID& psi, int m_psi, int m_a) {
    if ((m_psi != 0 && m_psi != 1) || (m_a != 0 && m_a != 1))
        throw std::invalid_argument("measurement outcomes must be 0 or 1");
    RandomSource unused(0);
    ShotResult shot = execute(build_teleport_program(psi), unused, NoiseConfig{},
                              {{0, m_psi}, {1, m_a}});
    return detail::teleport_result_from_shot(std::move(shot));
}

/// End-to-end check circuit: teleport H|prep_bit> and have the receiver undo
/// the H and measure, so a perfect run always reads back prep_bit. Classical
/// bit 2 records the receiver's measurement.
inline CircuitProgram build_experiment_program(int prep_bit) {
    if (prep_bit != 0 && prep_bit != 1)
        throw std::invalid_argument("prep_bit must be 0 or 1");
    CircuitProgram prog;
    prog.num_qubits = 3;
    prog.num_clbits = 3;
    prog.clbit_names = {"m_psi", "m_a", "receiver"};
    prog.prepare(0, prep_bit == 0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0},
                 prep_bit == 0 ? Complex{0.0, 0.0} : Complex{1.0, 0.0});
    prog.gate(Gate::H, 0);
    prog.gate(Gate::H, 1);
    prog.controlled(Gate::X, 1, 2);
    prog.controlled(Gate::X, 0, 1);
    prog.gate(Gate::H, 0);
    prog.measure_into(0, 0);
    prog.measure_into(1, 1);
    prog.conditional(Gate::X, 2, 1);
    prog.conditional(Gate::Z, 2, 0);
    prog.gate(Gate::H, 2);
    prog.measure_into(2, 2);
    return prog;
}

struct ExperimentResult {
    Counts counts;
    /// Fraction of shots whose receiver bit disagrees with prep_bit.
    double receiver_error_rate;
};

/// Samples the check circuit. Keys read "receiver, m_a, m_psi"; the error
/// rate counts shots whose leftmost key bit differs from prep_bit.
inline ExperimentResult run_teleport_experiment(int prep_bit, std::uint64_t shots,
                                                RandomSource& rng,
                                                const NoiseConfig& noise = NoiseConfig{}) {
    Counts counts = sample_counts(build_experiment_program(prep_bit), shots, rng, noise);
    std::uint64_t errors = 0;
    const char expected = static_cast<char>('0' + prep_bit);
    for (const auto& [key, count] : counts.table())
        if (key[0] != expected) errors += count;
    return {std::move(counts), static_cast<double>(errors) / static_cast<double>(shots)};
}

} // namespace quidsim
