#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace quidsim {

using Complex = std::complex<double>;

/// 2x2 single-qubit operator. m[row][col] in the {|0>, |1>} basis.
struct GateMatrix {
    std::array<std::array<Complex, 2>, 2> m;

    /// Largest entry of |U U^dagger - I|, zero for an exact unitary.
    double unitarity_defect() const {
        double worst = 0.0;
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                Complex dot = m[r][0] * std::conj(m[c][0]) + m[r][1] * std::conj(m[c][1]);
                if (r == c) dot -= 1.0;
                worst = std::max(worst, std::abs(dot));
            }
        }
        return worst;
    }

    bool is_unitary(double tol = 1e-10) const { return unitarity_defect() <= tol; }
};

inline GateMatrix make_gate(Complex m00, Complex m01, Complex m10, Complex m11) {
    GateMatrix g;
    g.m[0] = {m00, m01};
    g.m[1] = {m10, m11};
    return g;
}

} // namespace quidsim
