#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace vmge {

using cdouble = std::complex<double>;

inline constexpr int kMaxQubits = 28;  // 2^28 amplitudes = 4 GiB, past any desk-scale use

// Dense pure state of n qubits.  Amplitude indices follow the convention
// b = sum_j bit_j * 2^(n-1-j): qubit 0 is the most significant bit, so
// |q0 q1 ... q_{n-1}> reads like the binary expansion of the index.
class StateVector {
 public:
  // Takes ownership of `amps`; must have length 2^n_qubits.
  // Norm policy: |1 - ||a||^2| <= 1e-10 accepted as-is; <= 1e-6 renormalized
  // with a warning on stderr; anything worse is rejected.
  StateVector(int n_qubits, std::vector<cdouble> amps);

  static StateVector zero_state(int n_qubits);
  static StateVector basis_state(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
  std::span<const cdouble> amplitudes() const { return amps_; }
  const cdouble& operator[](std::uint64_t i) const { return amps_[i]; }

  double norm() const;

 private:
  friend StateVector apply_single_qubit_gate(const StateVector&, int,
                                             const struct Gate2x2&);
  friend StateVector apply_two_qubit_gate(const StateVector&, int, int,
                                          const struct Gate4x4&);
  friend class StateBuilder;

  struct unchecked_t {};
  StateVector(int n_qubits, std::vector<cdouble> amps, unchecked_t)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  int n_qubits_;
  std::vector<cdouble> amps_;
};

// Escape hatch for internal routines that construct states already known to
// be normalized (gate application, local circuit assembly).
class StateBuilder {
 public:
  static StateVector adopt(int n_qubits, std::vector<cdouble> amps) {
    return StateVector(n_qubits, std::move(amps), StateVector::unchecked_t{});
  }
};

// Kronecker product of the factors, in order: the first factor's qubits are
// the most significant block of the result.
StateVector product_state(std::span<const StateVector> factors);

// <a|b> = sum_i conj(a_i) b_i.
cdouble inner_product(const StateVector& a, const StateVector& b);

// |<a|b>|^2
double overlap_sq(const StateVector& a, const StateVector& b);

// Tr(rho_subset^2) for the reduced state on `subset`.  Always in
// [2^-|subset|, 1]; equals 1 exactly when the subset factorizes out.
double reduced_purity(const StateVector& state, std::span<const int> subset);

}  // namespace vmge
