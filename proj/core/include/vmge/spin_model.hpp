#pragma once

#include <memory>
#include <optional>
#include <span>

#include "vmge/lattice.hpp"
#include "vmge/state_vector.hpp"

namespace vmge {

enum class ModelKind { XY, XXZ };

// Transverse-field XY or longitudinal-field XXZ model on a lattice graph.
//   XY:  -J sum_<ij> [ (1+r)/2 XX + (1-r)/2 YY ] - h sum Z
//   XXZ:  J sum_<ij> [ XX + YY + delta ZZ ]      - h sum Z
// Sign convention: Z|0> = +|0>, so large positive h polarizes to |0...0>.
struct SpinModelSpec {
  ModelKind kind = ModelKind::XY;
  double J = 1.0;
  std::optional<double> r;      // XY anisotropy
  std::optional<double> delta;  // XXZ anisotropy
  double h = 0.0;
  LatticeGraph lattice;

  void validate() const;

  static SpinModelSpec xy(double J, double r, double h, LatticeGraph lattice);
  static SpinModelSpec xxz(double J, double delta, double h,
                           LatticeGraph lattice);
};

// Hermitian operator with a matrix-free apply.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;
  virtual std::uint64_t dim() const = 0;
  virtual void apply(std::span<const cdouble> in,
                     std::span<cdouble> out) const = 0;
};

// Bit-kernel Hamiltonian action: the diagonal (ZZ + field) part is
// precomputed per basis state; each edge's XX/YY part scatters amplitudes
// across the two flipped bits.  O(E * 2^N) per apply, no stored matrix.
class HamiltonianOperator final : public LinearOperator {
 public:
  explicit HamiltonianOperator(SpinModelSpec spec);

  std::uint64_t dim() const override;
  void apply(std::span<const cdouble> in,
             std::span<cdouble> out) const override;

  const SpinModelSpec& spec() const { return spec_; }

 private:
  SpinModelSpec spec_;
  int n_sites_;
  std::vector<double> diag_;
  // Per edge: flip mask plus the coefficients for equal/unequal bit pairs.
  struct FlipTerm {
    std::uint64_t mask;
    double equal_coeff;    // applies when the two bits agree
    double unequal_coeff;  // applies when they differ
  };
  std::vector<FlipTerm> flips_;
};

HamiltonianOperator build_hamiltonian(const SpinModelSpec& spec);

// Critical-field estimate used to annotate sweeps: J.Z(1+delta) for XXZ,
// J for the 1D XY chain (Z=2) and 3J for the 2D XY square lattice (Z=4).
double saturation_field(const SpinModelSpec& spec);

}  // namespace vmge
