#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quidsim/errors.hpp"
#include "quidsim/gates.hpp"
#include "quidsim/statevector.hpp"

namespace quidsim {

/// Quantum identity: a frozen amplitude pair (alpha, beta) that fingerprints
/// a qubit. Identities are compared component-wise, never measured, so using
/// one does not disturb the qubit it names.
class QuID {
  public:
    QuID(Complex alpha, Complex beta) {
        auto [a, b] = normalize_pair(alpha, beta);
        alpha_ = a;
        beta_ = b;
    }

    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }

  private:
    Complex alpha_;
    Complex beta_;
};

/// Largest absolute difference across the four real components
/// (Re alpha, Im alpha, Re beta, Im beta).
inline double max_component_distance(const QuID& a, const QuID& b) {
    return std::max({std::abs(a.alpha().real() - b.alpha().real()),
                     std::abs(a.alpha().imag() - b.alpha().imag()),
                     std::abs(a.beta().real() - b.beta().real()),
                     std::abs(a.beta().imag() - b.beta().imag())});
}

struct QubitHandle {
    std::uint64_t id;
    friend auto operator<=>(const QubitHandle&, const QubitHandle&) = default;
};

/// Marginal P(1) above which a qubit no longer counts as being in |0>.
inline constexpr double kGroundTolerance = 1e-9;

/// Directory of identity-tagged qubits. Each qubit is registered with a QuID
/// and starts in |0> in its own register; entangling fuses the two registers
/// so later operations see the shared state.
class QuidRegistry {
  public:
    /// Adds a qubit under `handle`. The identity is frozen as given.
    void register_qubit(QubitHandle handle, const QuID& quid) {
        if (entries_.count(handle.id))
            throw DuplicateHandle("handle " + std::to_string(handle.id) +
                                  " is already registered");
        std::size_t reg = next_register_id_++;
        registers_.emplace(reg, Register{StateVector(1), {handle.id}});
        entries_.emplace(handle.id, Entry{quid, reg, 0});
    }

    bool contains(QubitHandle handle) const { return entries_.count(handle.id) != 0; }

    /// The identity exactly as registered.
    const QuID& identity(QubitHandle handle) const { return entry(handle).quid; }

    /// The identity as seen by a probe of finite resolving power: each of the
    /// four real components is rounded to the nearest multiple of
    /// `resolution`, then the pair is renormalized. Resolution 0 reads the
    /// identity exactly. Identities further apart than the resolution stay
    /// distinguishable; ones much closer may collapse to the same estimate.
    QuID tomography(QubitHandle handle, double resolution) const {
        const QuID& q = entry(handle).quid;
        if (!(resolution >= 0.0))
            throw std::invalid_argument("resolution must be non-negative");
        if (resolution == 0.0) return q;
        auto snap = [&](double x) { return resolution * std::round(x / resolution); };
        const double ar = snap(q.alpha().real());
        const double ai = snap(q.alpha().imag());
        const double br = snap(q.beta().real());
        const double bi = snap(q.beta().imag());
        const double norm_sq = ar * ar + ai * ai + br * br + bi * bi;
        if (norm_sq < 1e-24)
            throw std::domain_error("resolution " + std::to_string(resolution) +
                                    " rounds every component to zero");
        const double s = 1.0 / std::sqrt(norm_sq);
        return QuID{{ar * s, ai * s}, {br * s, bi * s}};
    }

    /// Entangles the qubit behind `local` with the unique registered qubit
    /// whose identity lies within `tol` of `observed_peer` (component-wise).
    /// Both qubits must still be in |0>. On success their registers are
    /// fused, H + CNOT turn |00> into the Bell pair (|00> + |11>)/sqrt(2),
    /// and a copy of the fused register state is returned.
    StateVector remote_entangle(QubitHandle local, const QuID& observed_peer, double tol) {
        if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
        Entry& local_entry = entry(local);
        std::uint64_t match_id = 0;
        std::size_t match_count = 0;
        for (const auto& [id, e] : entries_) {
            if (id == local.id) continue;
            if (max_component_distance(e.quid, observed_peer) <= tol) {
                match_id = id;
                ++match_count;
            }
        }
        if (match_count == 0)
            throw NoMatch("no registered identity within tolerance " + std::to_string(tol));
        if (match_count > 1)
            throw AmbiguousMatch(std::to_string(match_count) +
                                 " registered identities lie within tolerance " +
                                 std::to_string(tol));
        Entry& match_entry = entries_.at(match_id);

        Register& local_reg = registers_.at(local_entry.reg);
        Register& match_reg = registers_.at(match_entry.reg);
        if (local_reg.state.prob_one(local_entry.pos) > kGroundTolerance)
            throw NotGroundState("local qubit " + std::to_string(local.id) +
                                 " is no longer in |0>");
        if (match_reg.state.prob_one(match_entry.pos) > kGroundTolerance)
            throw NotGroundState("matched qubit " + std::to_string(match_id) +
                                 " is no longer in |0>");

        if (local_entry.reg != match_entry.reg) {
            const std::size_t vacated = match_entry.reg;
            const std::size_t shift = local_reg.state.num_qubits();
            StateVector fused = tensor(local_reg.state, match_reg.state);
            for (std::uint64_t member : match_reg.members) {
                Entry& e = entries_.at(member);
                e.reg = local_entry.reg;
                e.pos += shift;
                local_reg.members.push_back(member);
            }
            registers_.erase(vacated);
            local_reg.state = std::move(fused);
        }

        StateVector& state = registers_.at(local_entry.reg).state;
        state.apply_single(local_entry.pos, hadamard());
        state.apply_controlled(local_entry.pos, match_entry.pos, pauli_x());
        return state;
    }

    /// State of the register holding `handle` (shared after entangling).
    const StateVector& register_state(QubitHandle handle) const {
        return registers_.at(entry(handle).reg).state;
    }

    /// Qubit index of `handle` inside its register's state.
    std::size_t position_of(QubitHandle handle) const { return entry(handle).pos; }

    /// Handles sharing a register with `handle`, in qubit-position order.
    std::vector<QubitHandle> register_members(QubitHandle handle) const {
        const Register& reg = registers_.at(entry(handle).reg);
        std::vector<QubitHandle> out;
        out.reserve(reg.members.size());
        for (std::uint64_t id : reg.members) out.push_back(QubitHandle{id});
        return out;
    }

  private:
    struct Entry {
        QuID quid;
        std::size_t reg;
        std::size_t pos;
    };
    struct Register {
        StateVector state;
        std::vector<std::uint64_t> members;
    };

    const Entry& entry(QubitHandle handle) const {
        auto it = entries_.find(handle.id);
        if (it == entries_.end())
            throw UnknownHandle("handle " + std::to_string(handle.id) + " is not registered");
        return it->second;
    }
    Entry& entry(QubitHandle handle) {
        auto it = entries_.find(handle.id);
        if (it == entries_.end())
            throw UnknownHandle("handle " + std::to_string(handle.id) + " is not registered");
        return it->second;
    }

    std::map<std::uint64_t, Entry> entries_;
    std::map<std::size_t, Register> registers_;
    std::size_t next_register_id_ = 0;
};

} // namespace quidsim
