#pragma once

#include <cstdint>

#include "vmge/partition.hpp"
#include "vmge/state_vector.hpp"

namespace vmge {

// Largest squared Schmidt coefficient across a bipartition (M must be 2):
// the exact maximum product-state overlap for that cut, so 1 - result is
// the exact bipartite GE.
double schmidt_max_overlap(const StateVector& state,
                           const Partition& bipartition);

struct BruteForceOptions {
  // restarts == 0 picks the default: 50 for N <= 4, otherwise 200.
  int restarts = 0;
  int inner_iterations = 300;
  std::uint64_t seed = 777;
};

// Multi-start alternating ascent over unconstrained product states: each
// party is a full complex unit vector, updated to the normalized partial
// overlap with all other parties held fixed (the exact per-party argmax, so
// overlap is monotone across updates).  Returns the best 1 - |<phi|psi>|^2
// found -- a stochastic upper bound on the true GE.
double brute_force_ge(const StateVector& state, const Partition& partition,
                      const BruteForceOptions& options = {});

}  // namespace vmge
