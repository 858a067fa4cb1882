#pragma once

#include <cstdint>

#include "vmge/spin_model.hpp"
#include "vmge/state_vector.hpp"

namespace vmge {

struct LanczosOptions {
  double tol = 1e-10;        // residual ||H x - E x||
  int max_restarts = 400;
  int block_size = 48;       // Krylov vectors per restart cycle (memory cap)
  std::uint64_t seed = 20240901;  // start-vector seed, echoed in metadata
};

struct LanczosResult {
  double energy = 0.0;
  StateVector state;
  double residual = 0.0;
  // Gap estimate E1 - E0 from the final Krylov cycle; sweeps flag
  // near-degenerate points where this is tiny.
  double gap_estimate = 0.0;
  int iterations = 0;  // total matrix applications
  bool converged = false;
};

// Restarted Lanczos with full reorthogonalization inside each cycle,
// restarting from the current Ritz vector.  Deterministic for a fixed seed.
// On non-convergence after max_restarts the best Ritz pair is returned with
// converged = false and `residual` reporting how far it got.
LanczosResult lanczos_ground_state(const LinearOperator& op,
                                   const LanczosOptions& options = {});

}  // namespace vmge
