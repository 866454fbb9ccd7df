#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "quidsim/errors.hpp"
#include "quidsim/gate_matrix.hpp"

#ifndef QUIDSIM_MAX_QUBITS
#define QUIDSIM_MAX_QUBITS 20
#endif

namespace quidsim {

inline constexpr std::size_t kMaxQubits = QUIDSIM_MAX_QUBITS;

/// Dense complex amplitude vector over n qubits.
///
/// Indexing is little-endian: bit k of a basis index is the state of qubit k,
/// so |q2 q1 q0> = |110> lives at index 6 and qubit 0 varies fastest. All
/// gate application is in place over the 2^n amplitudes.
class StateVector {
  public:
    /// State |basis_index> on num_qubits qubits, |0...0> by default.
    explicit StateVector(std::size_t num_qubits, std::size_t basis_index = 0)
        : num_qubits_(num_qubits) {
        if (num_qubits == 0 || num_qubits > kMaxQubits)
            throw std::invalid_argument("qubit count must be in [1, " +
                                        std::to_string(kMaxQubits) + "]");
        amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
        if (basis_index >= amps_.size())
            throw std::out_of_range("basis index out of range");
        amps_[basis_index] = 1.0;
    }

    /// Wraps an explicit amplitude vector (length a power of two, norm within
    /// 1e-9 of one). The stored state is renormalized exactly.
    static StateVector from_amplitudes(std::vector<Complex> amps) {
        std::size_t n = 0;
        while ((std::size_t{1} << n) < amps.size()) ++n;
        if (amps.empty() || (std::size_t{1} << n) != amps.size() || n == 0 || n > kMaxQubits)
            throw std::invalid_argument("amplitude count must be 2^n with n in [1, " +
                                        std::to_string(kMaxQubits) + "]");
        double norm_sq = 0.0;
        for (const Complex& a : amps) norm_sq += std::norm(a);
        if (!(std::abs(norm_sq - 1.0) <= 1e-9))
            throw NotNormalized("amplitude vector has squared norm " + std::to_string(norm_sq));
        double scale = 1.0 / std::sqrt(norm_sq);
        for (Complex& a : amps) a *= scale;
        StateVector sv(n);
        sv.amps_ = std::move(amps);
        return sv;
    }

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amps_.size(); }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }
    std::span<const Complex> amplitudes() const { return amps_; }

    /// Applies a single-qubit unitary to `target` in place.
    void apply_single(std::size_t target, const GateMatrix& u) {
        check_qubit(target);
        check_unitary(u);
        const std::size_t stride = std::size_t{1} << target;
        for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                const Complex a0 = amps_[i];
                const Complex a1 = amps_[i + stride];
                amps_[i] = u.m[0][0] * a0 + u.m[0][1] * a1;
                amps_[i + stride] = u.m[1][0] * a0 + u.m[1][1] * a1;
            }
        }
    }

    /// Applies `u` to `target` on the subspace where `control` is |1>.
    void apply_controlled(std::size_t control, std::size_t target, const GateMatrix& u) {
        check_qubit(control);
        check_qubit(target);
        if (control == target)
            throw std::invalid_argument("control and target must be distinct qubits");
        check_unitary(u);
        const std::size_t cbit = std::size_t{1} << control;
        const std::size_t tbit = std::size_t{1} << target;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & cbit) && !(i & tbit)) {
                const Complex a0 = amps_[i];
                const Complex a1 = amps_[i | tbit];
                amps_[i] = u.m[0][0] * a0 + u.m[0][1] * a1;
                amps_[i | tbit] = u.m[1][0] * a0 + u.m[1][1] * a1;
            }
        }
    }

    /// Probability that measuring `qubit` yields 1.
    double prob_one(std::size_t qubit) const {
        check_qubit(qubit);
        const std::size_t bit = std::size_t{1} << qubit;
        double p = 0.0;
        for (std::size_t i = 0; i < amps_.size(); ++i)
            if (i & bit) p += std::norm(amps_[i]);
        return p;
    }

    /// Projects `qubit` onto `outcome` and renormalizes. Returns the
    /// pre-collapse probability of that outcome, which must be positive.
    double collapse(std::size_t qubit, int outcome) {
        check_qubit(qubit);
        if (outcome != 0 && outcome != 1)
            throw std::invalid_argument("measurement outcome must be 0 or 1");
        const std::size_t bit = std::size_t{1} << qubit;
        const double p1 = prob_one(qubit);
        const double p = outcome == 1 ? p1 : 1.0 - p1;
        if (p <= 0.0)
            throw ImpossibleOutcome("outcome " + std::to_string(outcome) + " on qubit " +
                                    std::to_string(qubit) + " has zero probability");
        const double scale = 1.0 / std::sqrt(p);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            const bool keep = ((i & bit) != 0) == (outcome == 1);
            amps_[i] = keep ? amps_[i] * scale : Complex{0.0, 0.0};
        }
        return p;
    }

  private:
    void check_qubit(std::size_t q) const {
        if (q >= num_qubits_)
            throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " +
                                    std::to_string(num_qubits_) + " qubits");
    }

    static void check_unitary(const GateMatrix& u) {
        if (!u.is_unitary())
            throw std::invalid_argument("gate matrix is not unitary");
    }

    std::size_t num_qubits_;
    std::vector<Complex> amps_;
};

/// Kronecker product placing `low` on the low-order qubits: qubit k of `low`
/// stays qubit k, qubit k of `high` becomes qubit low.num_qubits() + k.
inline StateVector tensor(const StateVector& low, const StateVector& high) {
    if (low.num_qubits() + high.num_qubits() > kMaxQubits)
        throw std::invalid_argument("tensor product exceeds the qubit limit");
    std::vector<Complex> out(low.size() * high.size());
    for (std::size_t h = 0; h < high.size(); ++h)
        for (std::size_t l = 0; l < low.size(); ++l)
            out[(h << low.num_qubits()) | l] = high[h] * low[l];
    return StateVector::from_amplitudes(std::move(out));
}

/// |<a|b>|^2. Both states must have the same qubit count.
inline double fidelity(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("fidelity requires equal qubit counts");
    Complex overlap{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(a[i]) * b[i];
    return std::norm(overlap);
}

/// True when b = e^{i phi} a for some phase, entrywise within `tol`.
inline bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                                     double tol = 1e-9) {
    if (a.num_qubits() != b.num_qubits()) return false;
    Complex overlap{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(a[i]) * b[i];
    if (std::abs(overlap) == 0.0) return false;
    const Complex phase = overlap / std::abs(overlap);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(phase * a[i] - b[i]) > tol) return false;
    return true;
}

} // namespace quidsim
