#include "vmge/ge_optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "vmge/bfgs.hpp"
#include "vmge/parallel.hpp"
#include "vmge/sobol.hpp"

namespace vmge {

void OptimizerConfig::validate() const {
  if (n_init < 1) throw std::invalid_argument("n_init must be >= 1");
  if (top_k < 1) throw std::invalid_argument("top_k must be >= 1");
  if (bfgs_grad_tol <= 0.0 || fd_step <= 0.0) {
    throw std::invalid_argument("tolerances must be > 0");
  }
  if (bfgs_max_iter < 1) throw std::invalid_argument("bfgs_max_iter >= 1");
  if (!(seed_lo <= seed_hi)) {
    throw std::invalid_argument("seed interval is empty");
  }
}

double objective(const StateVector& target, const Partition& partition,
                 const AnsatzParams& params) {
  if (partition.n_qubits != target.n_qubits()) {
    throw std::invalid_argument("objective: partition/target size mismatch");
  }
  partition.validate();
  params.check_sized_for(partition);
  const auto locals = detail::party_local_states(partition, params);
  const cdouble ov = detail::separable_overlap(target, partition, locals);
  return 1.0 - std::norm(ov);
}

namespace {

// Shared two-stage driver.  `eval` maps a flat parameter vector to the
// objective value; `to_params` converts the winning vector to AnsatzParams.
template <typename Eval, typename ToParams>
GEResult run_two_stage(int dim, const OptimizerConfig& config,
                       const Eval& eval, const ToParams& to_params) {
  config.validate();
  std::atomic<long> eval_count{0};
  auto counted = [&](std::span<const double> x) {
    eval_count.fetch_add(1, std::memory_order_relaxed);
    return eval(x);
  };

  // Stage 1: Sobol scan of [seed_lo, seed_hi]^dim.
  const double span = config.seed_hi - config.seed_lo;
  std::vector<double> points = sobol_points(dim, config.n_init);
  for (double& u : points) u = config.seed_lo + span * u;
  std::vector<double> values(config.n_init);
  parallel_for(config.n_init, config.threads, [&](std::int64_t i) {
    values[i] = counted(std::span<const double>(&points[i * dim], dim));
  });

  std::vector<int> order(config.n_init);
  std::iota(order.begin(), order.end(), 0);
  const int k = std::min<int>(config.top_k, config.n_init);
  std::partial_sort(order.begin(), order.begin() + k, order.end(),
                    [&](int a, int b) {
                      if (values[a] != values[b]) return values[a] < values[b];
                      return a < b;  // deterministic tie-break
                    });
  const double sobol_best_value = values[order[0]];

  // Stage 2: BFGS from the top_k scan points.
  BfgsOptions bopt;
  bopt.grad_tol = config.bfgs_grad_tol;
  bopt.max_iterations = config.bfgs_max_iter;
  bopt.fd_step = config.fd_step;
  bopt.threads = config.threads;

  BfgsResult winner;
  winner.value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < k; ++i) {
    std::span<const double> x0(&points[order[i] * dim], dim);
    BfgsResult r = bfgs_minimize(counted, x0, bopt);
    // Refinement never loses: fall back to the start point if the line
    // search failed immediately.
    if (r.value > values[order[i]]) {
      r.value = values[order[i]];
      r.x.assign(x0.begin(), x0.end());
    }
    if (r.value < winner.value) winner = std::move(r);
  }

  GEResult res;
  res.sobol_best_overlap = std::clamp(1.0 - sobol_best_value, 0.0, 1.0);
  res.max_overlap = std::clamp(1.0 - winner.value, 0.0, 1.0);
  res.ge = 1.0 - res.max_overlap;
  res.bfgs_iterations = winner.iterations;
  res.converged = winner.converged;
  res.objective_evaluations = eval_count.load();
  res.optimal_params = to_params(winner.x);
  return res;
}

}  // namespace

GEResult compute_ge(const StateVector& target, const Partition& partition,
                    const OptimizerConfig& config, int layers) {
  if (partition.n_qubits != target.n_qubits()) {
    throw std::invalid_argument("compute_ge: partition/target size mismatch");
  }
  partition.validate();
  if (partition.party_count() < 2) {
    throw std::invalid_argument("compute_ge: need at least 2 parties");
  }
  if (layers < 1) throw std::invalid_argument("compute_ge: layers >= 1");

  const int dim = AnsatzParams::param_count(partition, layers);
  auto eval = [&](std::span<const double> x) {
    const AnsatzParams p = AnsatzParams::unpack(x, partition, layers);
    const auto locals = detail::party_local_states(partition, p);
    return 1.0 - std::norm(detail::separable_overlap(target, partition,
                                                     locals));
  };
  auto to_params = [&](std::span<const double> x) {
    return AnsatzParams::unpack(x, partition, layers);
  };
  return run_two_stage(dim, config, eval, to_params);
}

GEResult compute_ge_symmetric(const StateVector& target,
                              const OptimizerConfig& config) {
  const int n = target.n_qubits();
  const Partition partition = Partition::global(n);

  auto eval = [&](std::span<const double> x) {
    // One shared single-qubit state rz(phi) rx(theta) |0>.
    const double ct = std::cos(0.5 * x[0]);
    const double st = std::sin(0.5 * x[0]);
    const cdouble a0 = std::polar(ct, -0.5 * x[1]);
    const cdouble a1 = cdouble{0.0, -1.0} * std::polar(st, 0.5 * x[1]);
    // <s^xN | target> by repeated halving over the least significant qubit.
    std::vector<cdouble> t(target.amplitudes().begin(),
                           target.amplitudes().end());
    const cdouble c0 = std::conj(a0), c1 = std::conj(a1);
    std::size_t len = t.size();
    while (len > 1) {
      len >>= 1;
      for (std::size_t i = 0; i < len; ++i) {
        t[i] = c0 * t[2 * i] + c1 * t[2 * i + 1];
      }
    }
    return 1.0 - std::norm(t[0]);
  };
  auto to_params = [&](std::span<const double> x) {
    AnsatzParams p;
    p.theta.assign(n, x[0]);
    p.phi.assign(n, x[1]);
    p.layers = 1;
    return p;
  };
  return run_two_stage(2, config, eval, to_params);
}

}  // namespace vmge
