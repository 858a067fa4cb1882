#pragma once

#include "vmge/ansatz.hpp"
#include "vmge/partition.hpp"
#include "vmge/state_vector.hpp"

namespace vmge {

// Two-stage search configuration: a deterministic Sobol scan over
// [seed_lo, seed_hi]^dim followed by BFGS refinement of the top_k best
// scan points.
struct OptimizerConfig {
  int n_init = 2000;
  double seed_lo = 0.0;
  double seed_hi = 6.283185307179586476925286766559;  // 2 pi
  double bfgs_grad_tol = 1e-9;
  int bfgs_max_iter = 500;
  double fd_step = 1e-6;
  int top_k = 1;
  int threads = 1;

  void validate() const;
};

struct GEResult {
  double max_overlap = 0.0;       // in [0, 1], clamped
  double ge = 0.0;                // 1 - max_overlap
  AnsatzParams optimal_params;
  double sobol_best_overlap = 0.0;
  int bfgs_iterations = 0;        // winning refinement run
  bool converged = false;         // winning refinement run
  long objective_evaluations = 0; // total across both stages
};

// 1 - |<phi(params)|target>|^2, the quantity both stages minimize.
double objective(const StateVector& target, const Partition& partition,
                 const AnsatzParams& params);

// Full pipeline for an explicit partition.
GEResult compute_ge(const StateVector& target, const Partition& partition,
                    const OptimizerConfig& config = {}, int layers = 1);

// Translational-invariance shortcut: one shared (theta, phi) pair applied
// to every qubit, so the search space is 2-dimensional regardless of N.
// The partition is implicitly global.
GEResult compute_ge_symmetric(const StateVector& target,
                              const OptimizerConfig& config = {});

}  // namespace vmge
