#pragma once

#include <span>
#include <vector>

#include "vmge/gates.hpp"
#include "vmge/partition.hpp"
#include "vmge/state_vector.hpp"

namespace vmge {

// Variational angles for the separable-state circuit over a partition.
// theta/phi hold one x- resp. z-rotation angle per qubit, shared across
// layers; weyl holds one (c1,c2,c3) triple per intra-party bond per layer,
// laid out layer-major: weyl[3*(layer*B + bond) + comp] with B the
// partition's total bond count and bonds numbered across parties in
// partition order.
struct AnsatzParams {
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<double> weyl;
  int layers = 1;

  static AnsatzParams zeros(const Partition& partition, int layers = 1);

  // Total flat dimension: 2N + 3 * layers * bond_count.
  static int param_count(const Partition& partition, int layers);

  // Flat layout [theta | phi | weyl].
  std::vector<double> pack() const;
  static AnsatzParams unpack(std::span<const double> flat,
                             const Partition& partition, int layers);

  // Throws std::invalid_argument on a size mismatch.
  void check_sized_for(const Partition& partition) const;
};

// One party's circuit applied to a full register state.  Per layer: an
// x-rotation on every party qubit, then the entangler chain along
// consecutive entries of `party` (ascending), then a z-rotation on every
// party qubit.  For a single-qubit party this is rz(phi) rx(theta).
//
// theta_slice/phi_slice have one entry per party qubit; weyl_slice has
// 3 * layers * (m-1) entries, layer-major.
StateVector party_unitary_apply(const StateVector& state,
                                std::span<const int> party,
                                std::span<const double> theta_slice,
                                std::span<const double> phi_slice,
                                std::span<const double> weyl_slice,
                                int layers);

// The full variational separable state: every party circuit applied to
// |0...0>.  Each party's reduced state is pure by construction.
StateVector build_separable_state(const Partition& partition,
                                  const AnsatzParams& params);

namespace detail {

// Local 2^m-dimensional state of one party's circuit applied to |0...0>,
// with the party's first listed qubit as the most significant local bit.
std::vector<cdouble> party_local_state(int m,
                                       std::span<const double> theta_slice,
                                       std::span<const double> phi_slice,
                                       std::span<const double> weyl_slice,
                                       int layers);

// All party-local states for a parameter set.
std::vector<std::vector<cdouble>> party_local_states(
    const Partition& partition, const AnsatzParams& params);

// <product|target> where |product> is the tensor product of the given
// per-party vectors scattered onto the partition's qubit positions.
// Contracts one party at a time, so the cost is O(2^N) rather than
// O(M * 2^N).
cdouble separable_overlap(const StateVector& target,
                          const Partition& partition,
                          std::span<const std::vector<cdouble>> party_states);

// Same contraction with one party left open: returns the vector
// w[k] = <product of others, party `skip` in basis k | target>, living in
// the skipped party's 2^m local space.  The alternating-ascent oracle's
// exact per-party update is w / ||w||.
std::vector<cdouble> partial_overlap(
    const StateVector& target, const Partition& partition,
    std::span<const std::vector<cdouble>> party_states, int skip);

}  // namespace detail

}  // namespace vmge
