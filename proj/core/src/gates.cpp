#include "vmge/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace vmge {

namespace {

template <typename Gate, int N>
bool is_unitary_impl(const Gate& g, double tol) {
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      cdouble s{0.0, 0.0};
      for (int k = 0; k < N; ++k) s += g(i, k) * std::conj(g(j, k));
      const cdouble want = (i == j) ? cdouble{1.0, 0.0} : cdouble{0.0, 0.0};
      if (std::abs(s - want) > tol) return false;
    }
  }
  return true;
}

}  // namespace

bool is_unitary(const Gate2x2& g, double tol) {
  return is_unitary_impl<Gate2x2, 2>(g, tol);
}

bool is_unitary(const Gate4x4& g, double tol) {
  return is_unitary_impl<Gate4x4, 4>(g, tol);
}

Gate2x2 rx(double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  Gate2x2 g;
  g.u = {cdouble{c, 0.0}, cdouble{0.0, -s},  //
         cdouble{0.0, -s}, cdouble{c, 0.0}};
  return g;
}

Gate2x2 rz(double phi) {
  Gate2x2 g;
  g.u = {std::polar(1.0, -0.5 * phi), cdouble{0.0, 0.0},  //
         cdouble{0.0, 0.0}, std::polar(1.0, 0.5 * phi)};
  return g;
}

Gate4x4 canonical_two_qubit(double c1, double c2, double c3) {
  const double d = 0.5 * (c1 - c2);   // mixes |00>,|11>
  const double s = 0.5 * (c1 + c2);   // mixes |01>,|10>
  const cdouble pm = std::polar(1.0, -0.5 * c3);
  const cdouble pp = std::polar(1.0, 0.5 * c3);
  const cdouble cd = pm * std::cos(d);
  const cdouble sd = pm * cdouble{0.0, -1.0} * std::sin(d);
  const cdouble cs = pp * std::cos(s);
  const cdouble ss = pp * cdouble{0.0, -1.0} * std::sin(s);
  Gate4x4 g;
  g.u = {cd, 0.0, 0.0, sd,   //
         0.0, cs, ss, 0.0,   //
         0.0, ss, cs, 0.0,   //
         sd, 0.0, 0.0, cd};
  return g;
}

namespace detail {

void apply_1q_inplace(cdouble* amps, int n_qubits, int qubit,
                      const Gate2x2& g) {
  const std::uint64_t stride = std::uint64_t{1} << (n_qubits - 1 - qubit);
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  const cdouble u00 = g.u[0], u01 = g.u[1], u10 = g.u[2], u11 = g.u[3];
  for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
    for (std::uint64_t i = base; i < base + stride; ++i) {
      const cdouble a0 = amps[i];
      const cdouble a1 = amps[i + stride];
      amps[i] = u00 * a0 + u01 * a1;
      amps[i + stride] = u10 * a0 + u11 * a1;
    }
  }
}

void apply_2q_inplace(cdouble* amps, int n_qubits, int qubit_a, int qubit_b,
                      const Gate4x4& g) {
  const std::uint64_t sa = std::uint64_t{1} << (n_qubits - 1 - qubit_a);
  const std::uint64_t sb = std::uint64_t{1} << (n_qubits - 1 - qubit_b);
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  // Iterate over indices with both target bits clear.
  for (std::uint64_t b = 0; b < dim; ++b) {
    if ((b & sa) || (b & sb)) continue;
    const std::uint64_t i00 = b;
    const std::uint64_t i01 = b | sb;
    const std::uint64_t i10 = b | sa;
    const std::uint64_t i11 = b | sa | sb;
    const cdouble a0 = amps[i00], a1 = amps[i01], a2 = amps[i10],
                  a3 = amps[i11];
    amps[i00] = g.u[0] * a0 + g.u[1] * a1 + g.u[2] * a2 + g.u[3] * a3;
    amps[i01] = g.u[4] * a0 + g.u[5] * a1 + g.u[6] * a2 + g.u[7] * a3;
    amps[i10] = g.u[8] * a0 + g.u[9] * a1 + g.u[10] * a2 + g.u[11] * a3;
    amps[i11] = g.u[12] * a0 + g.u[13] * a1 + g.u[14] * a2 + g.u[15] * a3;
  }
}

}  // namespace detail

StateVector apply_single_qubit_gate(const StateVector& state, int qubit,
                                    const Gate2x2& g) {
  if (qubit < 0 || qubit >= state.n_qubits()) {
    throw std::invalid_argument("apply_single_qubit_gate: qubit out of range");
  }
  std::vector<cdouble> amps(state.amplitudes().begin(),
                            state.amplitudes().end());
  detail::apply_1q_inplace(amps.data(), state.n_qubits(), qubit, g);
  return StateBuilder::adopt(state.n_qubits(), std::move(amps));
}

StateVector apply_two_qubit_gate(const StateVector& state, int qubit_a,
                                 int qubit_b, const Gate4x4& g) {
  const int n = state.n_qubits();
  if (qubit_a < 0 || qubit_a >= n || qubit_b < 0 || qubit_b >= n) {
    throw std::invalid_argument("apply_two_qubit_gate: qubit out of range");
  }
  if (qubit_a == qubit_b) {
    throw std::invalid_argument("apply_two_qubit_gate: equal qubit indices");
  }
  std::vector<cdouble> amps(state.amplitudes().begin(),
                            state.amplitudes().end());
  detail::apply_2q_inplace(amps.data(), n, qubit_a, qubit_b, g);
  return StateBuilder::adopt(n, std::move(amps));
}

}  // namespace vmge
