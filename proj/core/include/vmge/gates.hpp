#pragma once

#include <array>

#include "vmge/state_vector.hpp"

namespace vmge {

struct Gate2x2 {
  std::array<cdouble, 4> u{};  // row-major

  cdouble operator()(int r, int c) const { return u[2 * r + c]; }
};

// Row/column basis ordered |q_a q_b> with q_a the more significant bit.
struct Gate4x4 {
  std::array<cdouble, 16> u{};  // row-major

  cdouble operator()(int r, int c) const { return u[4 * r + c]; }
};

bool is_unitary(const Gate2x2& g, double tol = 1e-12);
bool is_unitary(const Gate4x4& g, double tol = 1e-12);

// exp(-i theta sigma_x / 2)
Gate2x2 rx(double theta);
// exp(-i phi sigma_z / 2)
Gate2x2 rz(double phi);

// exp[-(i/2)(c1 XX + c2 YY + c3 ZZ)] in closed form.  The three generator
// terms commute and are jointly diagonal in the Bell basis, which collapses
// the exponential to four phases:
//   |00>,|11> block: phase exp(-i c3/2), mixing angle (c1 - c2)/2
//   |01>,|10> block: phase exp(+i c3/2), mixing angle (c1 + c2)/2
Gate4x4 canonical_two_qubit(double c1, double c2, double c3);

// New state (I x ... x g x ... x I)|state>.
StateVector apply_single_qubit_gate(const StateVector& state, int qubit,
                                    const Gate2x2& g);

// Gate acts on (qubit_a, qubit_b), identity elsewhere; qubit_a maps to the
// gate's more significant index.
StateVector apply_two_qubit_gate(const StateVector& state, int qubit_a,
                                 int qubit_b, const Gate4x4& g);

namespace detail {
// In-place kernels on a raw amplitude array of 2^n entries.
void apply_1q_inplace(cdouble* amps, int n_qubits, int qubit, const Gate2x2& g);
void apply_2q_inplace(cdouble* amps, int n_qubits, int qubit_a, int qubit_b,
                      const Gate4x4& g);
}  // namespace detail

}  // namespace vmge
