#include "vmge/state_vector.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace vmge {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("n_qubits must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n_qubits));
  }
}

double norm_sq(std::span<const cdouble> a) {
  double s = 0.0;
  for (const cdouble& x : a) s += std::norm(x);
  return s;
}

}  // namespace

StateVector::StateVector(int n_qubits, std::vector<cdouble> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
  check_qubit_count(n_qubits);
  if (amps_.size() != (std::uint64_t{1} << n_qubits_)) {
    throw std::invalid_argument("amplitude count " +
                                std::to_string(amps_.size()) +
                                " does not match 2^" +
                                std::to_string(n_qubits_));
  }
  const double n2 = norm_sq(amps_);
  const double dev = std::abs(1.0 - n2);
  if (dev <= 1e-10) return;
  if (dev <= 1e-6) {
    std::fprintf(stderr,
                 "vmge: warning: renormalizing state (|1 - norm^2| = %.3e)\n",
                 dev);
    const double inv = 1.0 / std::sqrt(n2);
    for (cdouble& x : amps_) x *= inv;
    return;
  }
  throw std::invalid_argument("state is not normalized: |1 - norm^2| = " +
                              std::to_string(dev));
}

StateVector StateVector::zero_state(int n_qubits) {
  return basis_state(n_qubits, 0);
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  check_qubit_count(n_qubits);
  const std::uint64_t d = std::uint64_t{1} << n_qubits;
  if (index >= d) throw std::invalid_argument("basis index out of range");
  std::vector<cdouble> amps(d, cdouble{0.0, 0.0});
  amps[index] = cdouble{1.0, 0.0};
  return StateBuilder::adopt(n_qubits, std::move(amps));
}

double StateVector::norm() const { return std::sqrt(norm_sq(amps_)); }

StateVector product_state(std::span<const StateVector> factors) {
  if (factors.empty()) {
    throw std::invalid_argument("product_state: empty factor list");
  }
  int n = 0;
  for (const StateVector& f : factors) n += f.n_qubits();
  check_qubit_count(n);
  std::vector<cdouble> acc{cdouble{1.0, 0.0}};
  for (const StateVector& f : factors) {
    std::vector<cdouble> next(acc.size() * f.dim());
    std::size_t k = 0;
    for (const cdouble& a : acc) {
      for (const cdouble& b : f.amplitudes()) next[k++] = a * b;
    }
    acc = std::move(next);
  }
  return StateBuilder::adopt(n, std::move(acc));
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  cdouble s{0.0, 0.0};
  const auto av = a.amplitudes();
  const auto bv = b.amplitudes();
  for (std::size_t i = 0; i < av.size(); ++i) s += std::conj(av[i]) * bv[i];
  return s;
}

double overlap_sq(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

double reduced_purity(const StateVector& state, std::span<const int> subset) {
  if (subset.empty()) {
    throw std::invalid_argument("reduced_purity: empty subset");
  }
  const int n = state.n_qubits();
  std::uint64_t keep_mask = 0;
  for (int q : subset) {
    if (q < 0 || q >= n) {
      throw std::invalid_argument("reduced_purity: qubit index out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    if (keep_mask & bit) {
      throw std::invalid_argument("reduced_purity: duplicate qubit index");
    }
    keep_mask |= bit;
  }

  // Tr(rho_A^2) = Tr(rho_B^2), so reduce over whichever side is smaller.
  const int m = static_cast<int>(subset.size());
  const bool use_complement = m > n - m;
  const std::uint64_t mask = use_complement ? (~keep_mask & (state.dim() - 1))
                                            : keep_mask;
  const int rows_bits = use_complement ? n - m : m;
  const std::uint64_t rows = std::uint64_t{1} << rows_bits;
  const std::uint64_t cols = state.dim() >> rows_bits;

  // Gather the state into an explicit rows x cols matrix A with the row index
  // built from `mask` bits, then purity = ||A A^dagger||_F^2.
  std::vector<cdouble> mat(rows * cols);
  const auto amps = state.amplitudes();
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    std::uint64_t r = 0, c = 0;
    for (int pos = n - 1; pos >= 0; --pos) {
      const std::uint64_t bit = (b >> pos) & 1;
      if ((mask >> pos) & 1) {
        r = (r << 1) | bit;
      } else {
        c = (c << 1) | bit;
      }
    }
    mat[r * cols + c] = amps[b];
  }

  double purity = 0.0;
  for (std::uint64_t i = 0; i < rows; ++i) {
    for (std::uint64_t j = 0; j < rows; ++j) {
      cdouble g{0.0, 0.0};
      const cdouble* ri = &mat[i * cols];
      const cdouble* rj = &mat[j * cols];
      for (std::uint64_t k = 0; k < cols; ++k) g += ri[k] * std::conj(rj[k]);
      purity += std::norm(g);
    }
  }
  return purity;
}

}  // namespace vmge
