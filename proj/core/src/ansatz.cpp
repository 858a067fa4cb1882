#include "vmge/ansatz.hpp"

#include <algorithm>
#include <stdexcept>

namespace vmge {

AnsatzParams AnsatzParams::zeros(const Partition& partition, int layers) {
  if (layers < 1) throw std::invalid_argument("layers must be >= 1");
  AnsatzParams p;
  p.theta.assign(partition.n_qubits, 0.0);
  p.phi.assign(partition.n_qubits, 0.0);
  p.weyl.assign(3u * layers * partition.bond_count(), 0.0);
  p.layers = layers;
  return p;
}

int AnsatzParams::param_count(const Partition& partition, int layers) {
  return 2 * partition.n_qubits + 3 * layers * partition.bond_count();
}

std::vector<double> AnsatzParams::pack() const {
  std::vector<double> flat;
  flat.reserve(theta.size() + phi.size() + weyl.size());
  flat.insert(flat.end(), theta.begin(), theta.end());
  flat.insert(flat.end(), phi.begin(), phi.end());
  flat.insert(flat.end(), weyl.begin(), weyl.end());
  return flat;
}

AnsatzParams AnsatzParams::unpack(std::span<const double> flat,
                                  const Partition& partition, int layers) {
  if (layers < 1) throw std::invalid_argument("layers must be >= 1");
  const std::size_t n = partition.n_qubits;
  const std::size_t nw = 3u * layers * partition.bond_count();
  if (flat.size() != 2 * n + nw) {
    throw std::invalid_argument("flat parameter vector has wrong length");
  }
  AnsatzParams p;
  p.theta.assign(flat.begin(), flat.begin() + n);
  p.phi.assign(flat.begin() + n, flat.begin() + 2 * n);
  p.weyl.assign(flat.begin() + 2 * n, flat.end());
  p.layers = layers;
  return p;
}

void AnsatzParams::check_sized_for(const Partition& partition) const {
  const std::size_t n = partition.n_qubits;
  if (theta.size() != n || phi.size() != n) {
    throw std::invalid_argument("theta/phi must have one angle per qubit");
  }
  if (layers < 1) throw std::invalid_argument("layers must be >= 1");
  if (weyl.size() != 3u * layers * partition.bond_count()) {
    throw std::invalid_argument("weyl length must be 3 * layers * bonds");
  }
}

namespace {

void check_party_slices(std::span<const int> party,
                        std::span<const double> theta_slice,
                        std::span<const double> phi_slice,
                        std::span<const double> weyl_slice, int layers) {
  const std::size_t m = party.size();
  if (m == 0) throw std::invalid_argument("empty party");
  if (layers < 1) throw std::invalid_argument("layers must be >= 1");
  if (theta_slice.size() != m || phi_slice.size() != m) {
    throw std::invalid_argument("party angle slices must have one entry "
                                "per party qubit");
  }
  if (weyl_slice.size() != 3u * layers * (m - 1)) {
    throw std::invalid_argument("party weyl slice must have 3*layers*(m-1) "
                                "entries");
  }
}

}  // namespace

StateVector party_unitary_apply(const StateVector& state,
                                std::span<const int> party,
                                std::span<const double> theta_slice,
                                std::span<const double> phi_slice,
                                std::span<const double> weyl_slice,
                                int layers) {
  check_party_slices(party, theta_slice, phi_slice, weyl_slice, layers);
  const int n = state.n_qubits();
  for (int q : party) {
    if (q < 0 || q >= n) {
      throw std::invalid_argument("party qubit out of range");
    }
  }
  const int m = static_cast<int>(party.size());
  std::vector<cdouble> amps(state.amplitudes().begin(),
                            state.amplitudes().end());
  for (int layer = 0; layer < layers; ++layer) {
    for (int j = 0; j < m; ++j) {
      detail::apply_1q_inplace(amps.data(), n, party[j], rx(theta_slice[j]));
    }
    const std::size_t base = 3u * layer * (m - 1);
    for (int l = 0; l + 1 < m; ++l) {
      const Gate4x4 g = canonical_two_qubit(weyl_slice[base + 3 * l],
                                            weyl_slice[base + 3 * l + 1],
                                            weyl_slice[base + 3 * l + 2]);
      detail::apply_2q_inplace(amps.data(), n, party[l], party[l + 1], g);
    }
    for (int j = 0; j < m; ++j) {
      detail::apply_1q_inplace(amps.data(), n, party[j], rz(phi_slice[j]));
    }
  }
  return StateBuilder::adopt(n, std::move(amps));
}

StateVector build_separable_state(const Partition& partition,
                                  const AnsatzParams& params) {
  partition.validate();
  params.check_sized_for(partition);
  StateVector state = StateVector::zero_state(partition.n_qubits);
  const int B = partition.bond_count();
  int bond_offset = 0;
  for (const auto& party : partition.parties) {
    const int m = static_cast<int>(party.size());
    std::vector<double> th(m), ph(m);
    for (int j = 0; j < m; ++j) {
      th[j] = params.theta[party[j]];
      ph[j] = params.phi[party[j]];
    }
    // Gather this party's (layer-major) weyl triples.
    std::vector<double> wy;
    wy.reserve(3u * params.layers * (m - 1));
    for (int layer = 0; layer < params.layers; ++layer) {
      const std::size_t base = 3u * (static_cast<std::size_t>(layer) * B +
                                     bond_offset);
      wy.insert(wy.end(), params.weyl.begin() + base,
                params.weyl.begin() + base + 3 * (m - 1));
    }
    state = party_unitary_apply(state, party, th, ph, wy, params.layers);
    bond_offset += m - 1;
  }
  return state;
}

namespace detail {

std::vector<cdouble> party_local_state(int m,
                                       std::span<const double> theta_slice,
                                       std::span<const double> phi_slice,
                                       std::span<const double> weyl_slice,
                                       int layers) {
  std::vector<int> local(m);
  for (int j = 0; j < m; ++j) local[j] = j;
  check_party_slices(local, theta_slice, phi_slice, weyl_slice, layers);
  std::vector<cdouble> amps(std::size_t{1} << m, cdouble{0.0, 0.0});
  amps[0] = cdouble{1.0, 0.0};
  for (int layer = 0; layer < layers; ++layer) {
    for (int j = 0; j < m; ++j) {
      apply_1q_inplace(amps.data(), m, j, rx(theta_slice[j]));
    }
    const std::size_t base = 3u * layer * (m - 1);
    for (int l = 0; l + 1 < m; ++l) {
      const Gate4x4 g = canonical_two_qubit(weyl_slice[base + 3 * l],
                                            weyl_slice[base + 3 * l + 1],
                                            weyl_slice[base + 3 * l + 2]);
      apply_2q_inplace(amps.data(), m, l, l + 1, g);
    }
    for (int j = 0; j < m; ++j) {
      apply_1q_inplace(amps.data(), m, j, rz(phi_slice[j]));
    }
  }
  return amps;
}

std::vector<std::vector<cdouble>> party_local_states(
    const Partition& partition, const AnsatzParams& params) {
  params.check_sized_for(partition);
  std::vector<std::vector<cdouble>> out;
  out.reserve(partition.parties.size());
  const int B = partition.bond_count();
  int bond_offset = 0;
  for (const auto& party : partition.parties) {
    const int m = static_cast<int>(party.size());
    std::vector<double> th(m), ph(m), wy;
    for (int j = 0; j < m; ++j) {
      th[j] = params.theta[party[j]];
      ph[j] = params.phi[party[j]];
    }
    wy.reserve(3u * params.layers * (m - 1));
    for (int layer = 0; layer < params.layers; ++layer) {
      const std::size_t base = 3u * (static_cast<std::size_t>(layer) * B +
                                     bond_offset);
      wy.insert(wy.end(), params.weyl.begin() + base,
                params.weyl.begin() + base + 3 * (m - 1));
    }
    out.push_back(party_local_state(m, th, ph, wy, params.layers));
    bond_offset += m - 1;
  }
  return out;
}

namespace {

// Contracts conj(v) against the tensor over `axes` (axes[0] most
// significant), removing the axes listed in `party` (given in the party's
// local bit order).  Returns the reduced tensor; updates `axes`.
std::vector<cdouble> contract_one_party(const std::vector<cdouble>& tensor,
                                        std::vector<int>& axes,
                                        std::span<const int> party,
                                        const std::vector<cdouble>& v) {
  const int r = static_cast<int>(axes.size());
  const int m = static_cast<int>(party.size());

  // Bit position (from LSB) of each axis id in the current tensor index.
  auto bitpos = [&](int qubit) {
    for (int i = 0; i < r; ++i) {
      if (axes[i] == qubit) return r - 1 - i;
    }
    throw std::invalid_argument("contract: qubit not present in tensor");
  };

  // Scatter table: local party index -> bits at the party's positions.
  std::vector<std::uint64_t> scatter(std::size_t{1} << m, 0);
  std::vector<int> positions(m);
  for (int j = 0; j < m; ++j) positions[j] = bitpos(party[j]);
  for (std::uint64_t k = 0; k < scatter.size(); ++k) {
    std::uint64_t s = 0;
    for (int j = 0; j < m; ++j) {
      if ((k >> (m - 1 - j)) & 1) s |= std::uint64_t{1} << positions[j];
    }
    scatter[k] = s;
  }

  // Expansion masks: insert zero bits at the party's positions (ascending).
  std::vector<std::uint64_t> low_masks(positions.begin(), positions.end());
  std::sort(low_masks.begin(), low_masks.end());
  for (auto& p : low_masks) p = (std::uint64_t{1} << p) - 1;

  const std::uint64_t rest_dim = std::uint64_t{1} << (r - m);
  std::vector<cdouble> out(rest_dim);
  const std::uint64_t kdim = std::uint64_t{1} << m;
  for (std::uint64_t rest = 0; rest < rest_dim; ++rest) {
    std::uint64_t base = rest;
    for (std::uint64_t lm : low_masks) base = ((base & ~lm) << 1) | (base & lm);
    cdouble acc{0.0, 0.0};
    for (std::uint64_t k = 0; k < kdim; ++k) {
      acc += std::conj(v[k]) * tensor[base | scatter[k]];
    }
    out[rest] = acc;
  }

  // Drop the contracted axes, preserving order.
  std::vector<int> next_axes;
  next_axes.reserve(r - m);
  for (int id : axes) {
    if (std::find(party.begin(), party.end(), id) == party.end()) {
      next_axes.push_back(id);
    }
  }
  axes = std::move(next_axes);
  return out;
}

}  // namespace

cdouble separable_overlap(const StateVector& target,
                          const Partition& partition,
                          std::span<const std::vector<cdouble>> party_states) {
  const int n = target.n_qubits();
  if (partition.n_qubits != n ||
      party_states.size() != partition.parties.size()) {
    throw std::invalid_argument("separable_overlap: shape mismatch");
  }
  std::vector<int> axes(n);
  for (int q = 0; q < n; ++q) axes[q] = q;
  std::vector<cdouble> tensor(target.amplitudes().begin(),
                              target.amplitudes().end());

  // Contract largest parties first so later passes run on small tensors.
  std::vector<int> order(partition.parties.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (partition.parties[a].size() != partition.parties[b].size()) {
      return partition.parties[a].size() > partition.parties[b].size();
    }
    return a < b;
  });
  for (int i : order) {
    tensor = contract_one_party(tensor, axes, partition.parties[i],
                                party_states[i]);
  }
  return tensor[0];
}

std::vector<cdouble> partial_overlap(
    const StateVector& target, const Partition& partition,
    std::span<const std::vector<cdouble>> party_states, int skip) {
  const int n = target.n_qubits();
  if (partition.n_qubits != n ||
      party_states.size() != partition.parties.size()) {
    throw std::invalid_argument("partial_overlap: shape mismatch");
  }
  if (skip < 0 || skip >= partition.party_count()) {
    throw std::invalid_argument("partial_overlap: bad party index");
  }
  std::vector<int> axes(n);
  for (int q = 0; q < n; ++q) axes[q] = q;
  std::vector<cdouble> tensor(target.amplitudes().begin(),
                              target.amplitudes().end());

  std::vector<int> order;
  for (int i = 0; i < partition.party_count(); ++i) {
    if (i != skip) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (partition.parties[a].size() != partition.parties[b].size()) {
      return partition.parties[a].size() > partition.parties[b].size();
    }
    return a < b;
  });
  for (int i : order) {
    tensor = contract_one_party(tensor, axes, partition.parties[i],
                                party_states[i]);
  }

  // Remaining axes are the skipped party's qubits in ascending-significance
  // order; rearrange into the party's own list order.
  const auto& party = partition.parties[skip];
  const int m = static_cast<int>(party.size());
  std::vector<int> positions(m);
  for (int j = 0; j < m; ++j) {
    int pos = -1;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      if (axes[i] == party[j]) pos = static_cast<int>(axes.size()) - 1 -
                                     static_cast<int>(i);
    }
    if (pos < 0) throw std::logic_error("partial_overlap: axis bookkeeping");
    positions[j] = pos;
  }
  std::vector<cdouble> out(std::size_t{1} << m);
  for (std::uint64_t k = 0; k < out.size(); ++k) {
    std::uint64_t src = 0;
    for (int j = 0; j < m; ++j) {
      if ((k >> (m - 1 - j)) & 1) src |= std::uint64_t{1} << positions[j];
    }
    out[k] = tensor[src];
  }
  return out;
}

}  // namespace detail

}  // namespace vmge
