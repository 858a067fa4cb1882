#include "vmge/spin_model.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace vmge {

void SpinModelSpec::validate() const {
  lattice.validate();
  if (lattice.n_sites > kMaxQubits) {
    throw std::invalid_argument("spin model: lattice too large");
  }
  if (kind == ModelKind::XY) {
    if (!r.has_value() || delta.has_value()) {
      throw std::invalid_argument("XY model requires r and forbids delta");
    }
  } else {
    if (!delta.has_value() || r.has_value()) {
      throw std::invalid_argument("XXZ model requires delta and forbids r");
    }
  }
}

SpinModelSpec SpinModelSpec::xy(double J, double r, double h,
                                LatticeGraph lattice) {
  SpinModelSpec s;
  s.kind = ModelKind::XY;
  s.J = J;
  s.r = r;
  s.h = h;
  s.lattice = std::move(lattice);
  s.validate();
  return s;
}

SpinModelSpec SpinModelSpec::xxz(double J, double delta, double h,
                                 LatticeGraph lattice) {
  SpinModelSpec s;
  s.kind = ModelKind::XXZ;
  s.J = J;
  s.delta = delta;
  s.h = h;
  s.lattice = std::move(lattice);
  s.validate();
  return s;
}

HamiltonianOperator::HamiltonianOperator(SpinModelSpec spec)
    : spec_(std::move(spec)), n_sites_(spec_.lattice.n_sites) {
  spec_.validate();
  const int n = n_sites_;
  const std::uint64_t d = std::uint64_t{1} << n;

  double cxx, cyy, czz;
  if (spec_.kind == ModelKind::XY) {
    cxx = -spec_.J * 0.5 * (1.0 + *spec_.r);
    cyy = -spec_.J * 0.5 * (1.0 - *spec_.r);
    czz = 0.0;
  } else {
    cxx = spec_.J;
    cyy = spec_.J;
    czz = spec_.J * *spec_.delta;
  }

  flips_.reserve(spec_.lattice.edges.size());
  for (auto [i, j] : spec_.lattice.edges) {
    FlipTerm t;
    t.mask = (std::uint64_t{1} << (n - 1 - i)) |
             (std::uint64_t{1} << (n - 1 - j));
    // <b'|XX|b> = 1; <b'|YY|b> = -1 for aligned bits, +1 for anti-aligned.
    t.equal_coeff = cxx - cyy;
    t.unequal_coeff = cxx + cyy;
    flips_.push_back(t);
  }

  diag_.resize(d);
  for (std::uint64_t b = 0; b < d; ++b) {
    // Field: -h sum Z = -h (n - 2 popcount).
    double v = -spec_.h * (n - 2 * static_cast<int>(std::popcount(b)));
    if (czz != 0.0) {
      for (auto [i, j] : spec_.lattice.edges) {
        const int bi = (b >> (n - 1 - i)) & 1;
        const int bj = (b >> (n - 1 - j)) & 1;
        v += (bi == bj) ? czz : -czz;
      }
    }
    diag_[b] = v;
  }
}

std::uint64_t HamiltonianOperator::dim() const {
  return std::uint64_t{1} << n_sites_;
}

void HamiltonianOperator::apply(std::span<const cdouble> in,
                                std::span<cdouble> out) const {
  const std::uint64_t d = dim();
  if (in.size() != d || out.size() != d) {
    throw std::invalid_argument("hamiltonian apply: size mismatch");
  }
  for (std::uint64_t b = 0; b < d; ++b) out[b] = diag_[b] * in[b];
  for (const FlipTerm& t : flips_) {
    for (std::uint64_t b = 0; b < d; ++b) {
      const std::uint64_t bits = b & t.mask;
      // bits == 0 or bits == mask: the pair is aligned.
      const double c = (bits == 0 || bits == t.mask) ? t.equal_coeff
                                                     : t.unequal_coeff;
      if (c != 0.0) out[b ^ t.mask] += c * in[b];
    }
  }
}

HamiltonianOperator build_hamiltonian(const SpinModelSpec& spec) {
  return HamiltonianOperator(spec);
}

double saturation_field(const SpinModelSpec& spec) {
  spec.validate();
  const int z = spec.lattice.coordination_number();
  if (spec.kind == ModelKind::XXZ) {
    return spec.J * z * (1.0 + *spec.delta);
  }
  if (z == 2) return spec.J;       // chain/ring
  if (z == 4) return 3.0 * spec.J; // periodic square lattice
  throw std::invalid_argument("saturation_field: no XY estimate for "
                              "coordination number " + std::to_string(z));
}

}  // namespace vmge
