#include "vmge/lanczos.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace vmge {

namespace {

double norm2(std::span<const cdouble> v) {
  double s = 0.0;
  for (const cdouble& x : v) s += std::norm(x);
  return std::sqrt(s);
}

cdouble dotc(std::span<const cdouble> a, std::span<const cdouble> b) {
  cdouble s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

void axpy(cdouble alpha, std::span<const cdouble> x, std::span<cdouble> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace

LanczosResult lanczos_ground_state(const LinearOperator& op,
                                   const LanczosOptions& options) {
  const std::uint64_t d = op.dim();
  if (d < 1) throw std::invalid_argument("lanczos: empty operator");
  if (options.tol <= 0.0) throw std::invalid_argument("lanczos: tol <= 0");

  // Cap the block so one cycle's basis stays under ~2 GiB.
  int block = std::max(2, options.block_size);
  const std::uint64_t budget_vectors =
      std::max<std::uint64_t>(4, (std::uint64_t{2} << 30) / (16 * d));
  block = static_cast<int>(
      std::min<std::uint64_t>(block, budget_vectors));
  block = static_cast<int>(std::min<std::uint64_t>(block, d));

  // Deterministic start vector.
  std::vector<cdouble> x(d);
  {
    std::mt19937_64 gen(options.seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (auto& a : x) a = cdouble{dist(gen), dist(gen)};
    const double inv = 1.0 / norm2(x);
    for (auto& a : x) a *= inv;
  }

  std::vector<std::vector<cdouble>> basis;
  std::vector<cdouble> w(d);
  double best_energy = 0.0;
  double best_residual = std::numeric_limits<double>::infinity();
  double gap = 0.0;
  int total_applies = 0;

  for (int cycle = 0; cycle < options.max_restarts; ++cycle) {
    basis.clear();
    basis.push_back(x);
    std::vector<double> alpha, beta;  // tridiagonal entries

    for (int j = 0; j < block; ++j) {
      op.apply(basis[j], w);
      ++total_applies;
      const double a = dotc(basis[j], w).real();
      alpha.push_back(a);
      // w -= alpha v_j + beta v_{j-1}, then full reorthogonalization.
      axpy(cdouble{-a, 0.0}, basis[j], w);
      if (j > 0) axpy(cdouble{-beta[j - 1], 0.0}, basis[j - 1], w);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& v : basis) axpy(-dotc(v, w), v, w);
      }
      const double b = norm2(w);
      if (j + 1 == block || b < 1e-13) {
        break;
      }
      beta.push_back(b);
      const double inv = 1.0 / b;
      std::vector<cdouble> next(d);
      for (std::uint64_t i = 0; i < d; ++i) next[i] = w[i] * inv;
      basis.push_back(std::move(next));
    }

    const int k = static_cast<int>(alpha.size());
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
      T(i, i) = alpha[i];
      if (i + 1 < k) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    const Eigen::VectorXd evals = es.eigenvalues();
    const Eigen::VectorXd y = es.eigenvectors().col(0);

    // Ritz vector for the lowest eigenvalue.
    std::fill(x.begin(), x.end(), cdouble{0.0, 0.0});
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
      axpy(cdouble{y(j), 0.0}, basis[j], x);
    }
    const double xn = norm2(x);
    for (auto& a : x) a /= xn;

    op.apply(x, w);
    ++total_applies;
    const double energy = dotc(x, w).real();
    axpy(cdouble{-energy, 0.0}, x, w);
    const double residual = norm2(w);

    if (residual < best_residual) {
      best_residual = residual;
      best_energy = energy;
    }
    if (k > 1) gap = evals(1) - evals(0);

    if (residual <= options.tol || d == 1) {
      LanczosResult res{energy, StateBuilder::adopt(
                                    static_cast<int>(std::bit_width(d) - 1),
                                    std::move(x)),
                        residual, gap, total_applies, true};
      return res;
    }
  }

  LanczosResult res{best_energy,
                    StateBuilder::adopt(
                        static_cast<int>(std::bit_width(d) - 1),
                        std::move(x)),
                    best_residual, gap, total_applies, false};
  return res;
}

}  // namespace vmge
