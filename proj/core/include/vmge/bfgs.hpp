#pragma once

#include <functional>
#include <span>
#include <vector>

namespace vmge {

using ObjectiveFn = std::function<double(std::span<const double>)>;

struct BfgsOptions {
  double grad_tol = 1e-9;    // infinity norm of the gradient
  int max_iterations = 500;
  double fd_step = 1e-6;     // relative central-difference step
  int threads = 1;           // parallel gradient coordinates
};

struct BfgsResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Central differences, h_i = fd_step * (1 + |x_i|).  Coordinates may be
// evaluated in parallel; the result does not depend on `threads`.
std::vector<double> finite_diff_gradient(const ObjectiveFn& f,
                                         std::span<const double> x,
                                         double fd_step = 1e-6,
                                         int threads = 1);

// Quasi-Newton minimization with a strong-Wolfe line search and
// finite-difference gradients.  Accepted iterates are monotone
// non-increasing.  Stops when ||g||_inf <= grad_tol (converged) or at the
// iteration cap; a failed line search returns the best point found with
// converged = false rather than throwing.
BfgsResult bfgs_minimize(const ObjectiveFn& f, std::span<const double> x0,
                         const BfgsOptions& options = {});

}  // namespace vmge
