#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quidsim/errors.hpp"
#include "quidsim/gates.hpp"
#include "quidsim/measurement.hpp"
#include "quidsim/noise.hpp"
#include "quidsim/random.hpp"
#include "quidsim/statevector.hpp"

namespace quidsim {

enum class Gate { I, X, Z, H };

inline GateMatrix gate_matrix(Gate g) {
    switch (g) {
        case Gate::I: return identity();
        case Gate::X: return pauli_x();
        case Gate::Z: return pauli_z();
        case Gate::H: return hadamard();
    }
    throw std::invalid_argument("unknown gate");
}

inline std::string_view gate_name(Gate g) {
    switch (g) {
        case Gate::I: return "I";
        case Gate::X: return "X";
        case Gate::Z: return "Z";
        case Gate::H: return "H";
    }
    throw std::invalid_argument("unknown gate");
}

/// Gate application, optionally controlled by a qubit and/or conditioned on a
/// classical bit. A conditioned gate runs only when its clbit holds 1.
struct GateOp {
    Gate gate;
    std::size_t target;
    std::optional<std::size_t> control;
    std::optional<std::size_t> condition;
};

/// Applies the unitary taking |0> to alpha|0> + beta|1> on `target`.
struct PrepareOp {
    std::size_t target;
    Complex alpha;
    Complex beta;
};

/// Projective measurement of `qubit`, outcome stored in classical bit `clbit`.
struct MeasureOp {
    std::size_t qubit;
    std::size_t clbit;
};

using Instruction = std::variant<GateOp, PrepareOp, MeasureOp>;

struct CircuitProgram {
    std::size_t num_qubits = 0;
    std::size_t num_clbits = 0;
    /// Optional labels, one per classical bit when non-empty.
    std::vector<std::string> clbit_names;
    std::vector<Instruction> instructions;

    void prepare(std::size_t target, Complex alpha, Complex beta) {
        instructions.push_back(PrepareOp{target, alpha, beta});
    }
    void gate(Gate g, std::size_t target) {
        instructions.push_back(GateOp{g, target, std::nullopt, std::nullopt});
    }
    void controlled(Gate g, std::size_t control, std::size_t target) {
        instructions.push_back(GateOp{g, target, control, std::nullopt});
    }
    void conditional(Gate g, std::size_t target, std::size_t condition_clbit) {
        instructions.push_back(GateOp{g, target, std::nullopt, condition_clbit});
    }
    void measure_into(std::size_t qubit, std::size_t clbit) {
        instructions.push_back(MeasureOp{qubit, clbit});
    }

    /// Structural checks: index ranges, distinct control/target, label count,
    /// and preparable amplitude pairs. Throws on the first violation.
    void validate() const {
        if (num_qubits == 0 || num_qubits > kMaxQubits)
            throw std::invalid_argument("program qubit count must be in [1, " +
                                        std::to_string(kMaxQubits) + "]");
        if (!clbit_names.empty() && clbit_names.size() != num_clbits)
            throw std::invalid_argument("clbit_names must be empty or match num_clbits");
        auto check_qubit = [&](std::size_t q) {
            if (q >= num_qubits) throw std::out_of_range("instruction qubit out of range");
        };
        auto check_clbit = [&](std::size_t c) {
            if (c >= num_clbits) throw std::out_of_range("instruction clbit out of range");
        };
        for (const Instruction& inst : instructions) {
            if (const auto* g = std::get_if<GateOp>(&inst)) {
                check_qubit(g->target);
                if (g->control) {
                    check_qubit(*g->control);
                    if (*g->control == g->target)
                        throw std::invalid_argument("control and target must be distinct");
                }
                if (g->condition) check_clbit(*g->condition);
            } else if (const auto* p = std::get_if<PrepareOp>(&inst)) {
                check_qubit(p->target);
                normalize_pair(p->alpha, p->beta);
            } else {
                const auto& m = std::get<MeasureOp>(inst);
                check_qubit(m.qubit);
                check_clbit(m.clbit);
            }
        }
    }
};

struct ShotResult {
    StateVector state;
    /// Reported classical bits, i.e. after any readout noise.
    std::vector<int> classical;
    /// True collapse outcomes in program order, before readout noise.
    std::vector<MeasurementRecord> records;
};

/// Runs one trajectory of `program` from |0...0>.
///
/// Conditioned gates always read the true measurement outcomes; readout
/// noise perturbs only the reported bits, once per measured clbit at the end
/// of the shot (ascending clbit order). Depolarizing noise is drawn after
/// every gate that executes, on its target, preceded by its control qubit
/// for controlled gates. Preparations and measurements draw no gate noise.
/// With noise disabled (or a probability at zero) the corresponding draws
/// are skipped entirely, keeping the random stream identical.
///
/// An entry `clbit -> outcome` in `forced` replays that measurement as the
/// given outcome instead of sampling it, consuming no randomness.
inline ShotResult execute(const CircuitProgram& program, RandomSource& rng,
                          const NoiseConfig& noise = NoiseConfig{},
                          const std::map<std::size_t, int>& forced = {}) {
    program.validate();
    noise.validate();
    const bool gate_noise = noise.enabled && noise.depolarizing_p > 0.0;
    const bool readout_noise = noise.enabled && noise.readout_flip_p > 0.0;

    StateVector state(program.num_qubits);
    std::vector<int> classical(program.num_clbits, 0);
    std::vector<bool> measured(program.num_clbits, false);
    std::vector<MeasurementRecord> records;

    for (const Instruction& inst : program.instructions) {
        if (const auto* g = std::get_if<GateOp>(&inst)) {
            if (g->condition && classical[*g->condition] != 1) continue;
            if (g->control)
                state.apply_controlled(*g->control, g->target, gate_matrix(g->gate));
            else
                state.apply_single(g->target, gate_matrix(g->gate));
            if (gate_noise) {
                if (g->control) apply_depolarizing(state, *g->control, noise.depolarizing_p, rng);
                apply_depolarizing(state, g->target, noise.depolarizing_p, rng);
            }
        } else if (const auto* p = std::get_if<PrepareOp>(&inst)) {
            state.apply_single(p->target, preparation_unitary(p->alpha, p->beta));
        } else {
            const auto& m = std::get<MeasureOp>(inst);
            auto it = forced.find(m.clbit);
            if (it != forced.end()) {
                const double prob = measure_forced(state, m.qubit, it->second);
                records.push_back({m.qubit, it->second, prob});
            } else {
                records.push_back(measure(state, m.qubit, rng));
            }
            classical[m.clbit] = records.back().outcome;
            measured[m.clbit] = true;
        }
    }

    std::vector<int> reported = classical;
    if (readout_noise) {
        for (std::size_t c = 0; c < reported.size(); ++c)
            if (measured[c]) reported[c] = apply_readout_flip(reported[c], noise.readout_flip_p, rng);
    }
    return {std::move(state), std::move(reported), std::move(records)};
}

} // namespace quidsim
