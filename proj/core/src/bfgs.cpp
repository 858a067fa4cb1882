#include "vmge/bfgs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vmge/parallel.hpp"

namespace vmge {

std::vector<double> finite_diff_gradient(const ObjectiveFn& f,
                                         std::span<const double> x,
                                         double fd_step, int threads) {
  const std::size_t n = x.size();
  std::vector<double> grad(n);
  std::vector<double> base(x.begin(), x.end());
  parallel_for(static_cast<std::int64_t>(n), threads, [&](std::int64_t i) {
    const double h = fd_step * (1.0 + std::abs(base[i]));
    std::vector<double> xp = base;
    xp[i] = base[i] + h;
    const double fp = f(xp);
    xp[i] = base[i] - h;
    const double fm = f(xp);
    grad[i] = (fp - fm) / (2.0 * h);
  });
  return grad;
}

namespace {

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct LinePoint {
  double alpha;
  double value;
  double slope;
};

// Directional value and slope at x + alpha d, slope via the FD gradient.
LinePoint eval_line(const ObjectiveFn& f, std::span<const double> x,
                    std::span<const double> d, double alpha,
                    const BfgsOptions& opt, std::vector<double>& xa,
                    std::vector<double>& grad_out) {
  for (std::size_t i = 0; i < x.size(); ++i) xa[i] = x[i] + alpha * d[i];
  const double value = f(xa);
  grad_out = finite_diff_gradient(f, xa, opt.fd_step, opt.threads);
  return {alpha, value, dot(grad_out, d)};
}

constexpr double kWolfeC1 = 1e-4;
constexpr double kWolfeC2 = 0.9;

}  // namespace

BfgsResult bfgs_minimize(const ObjectiveFn& f, std::span<const double> x0,
                         const BfgsOptions& options) {
  const std::size_t n = x0.size();
  BfgsResult res;
  res.x.assign(x0.begin(), x0.end());
  res.value = f(res.x);

  std::vector<double> grad =
      finite_diff_gradient(f, res.x, options.fd_step, options.threads);
  if (inf_norm(grad) <= options.grad_tol) {
    res.converged = true;
    return res;
  }

  // Inverse Hessian approximation, dense row-major.
  std::vector<double> H(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) H[i * n + i] = 1.0;

  std::vector<double> d(n), xa(n), grad_trial(n), grad_best(n);
  std::vector<double> s(n), y(n), Hy(n);

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    // d = -H g
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += H[i * n + j] * grad[j];
      d[i] = -acc;
    }
    double slope0 = dot(grad, d);
    if (slope0 >= 0.0) {
      // Lost positive definiteness (FD noise); restart along -g once.
      std::fill(H.begin(), H.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) H[i * n + i] = 1.0;
      for (std::size_t i = 0; i < n; ++i) d[i] = -grad[i];
      slope0 = dot(grad, d);
      if (slope0 >= 0.0) break;  // gradient numerically zero
    }

    // Strong-Wolfe line search (bracket + zoom).
    const double f0 = res.value;
    bool accepted = false;
    LinePoint best{0.0, f0, slope0};
    double alpha_prev = 0.0, f_prev = f0, g_prev = slope0;
    double alpha = 1.0;
    const double alpha_max = 1e3;
    LinePoint lo{0.0, f0, slope0}, hi{0.0, f0, slope0};
    bool bracketed = false;

    for (int ls = 0; ls < 20 && !bracketed; ++ls) {
      LinePoint p = eval_line(f, res.x, d, alpha, options, xa, grad_trial);
      if (p.value > f0 + kWolfeC1 * alpha * slope0 ||
          (ls > 0 && p.value >= f_prev)) {
        lo = {alpha_prev, f_prev, g_prev};
        hi = p;
        bracketed = true;
        break;
      }
      if (std::abs(p.slope) <= -kWolfeC2 * slope0) {
        best = p;
        grad_best = grad_trial;
        accepted = true;
        break;
      }
      if (p.slope >= 0.0) {
        lo = p;
        hi = {alpha_prev, f_prev, g_prev};
        bracketed = true;
        break;
      }
      alpha_prev = alpha;
      f_prev = p.value;
      g_prev = p.slope;
      alpha = std::min(2.0 * alpha, alpha_max);
      if (alpha >= alpha_max) break;
    }

    if (!accepted && bracketed) {
      for (int z = 0; z < 30; ++z) {
        // Bisection with a quadratic-interpolation candidate.
        double mid = 0.5 * (lo.alpha + hi.alpha);
        const double denom = lo.slope - (lo.value - hi.value) /
                                            (lo.alpha - hi.alpha);
        if (std::abs(denom) > 1e-30) {
          const double cand = lo.alpha - 0.5 * (lo.alpha - hi.alpha) *
                                             lo.slope / denom;
          const double a = std::min(lo.alpha, hi.alpha);
          const double b = std::max(lo.alpha, hi.alpha);
          if (cand > a + 0.1 * (b - a) && cand < b - 0.1 * (b - a)) {
            mid = cand;
          }
        }
        LinePoint p = eval_line(f, res.x, d, mid, options, xa, grad_trial);
        if (p.value > f0 + kWolfeC1 * mid * slope0 || p.value >= lo.value) {
          hi = p;
        } else {
          if (std::abs(p.slope) <= -kWolfeC2 * slope0) {
            best = p;
            grad_best = grad_trial;
            accepted = true;
            break;
          }
          if (p.slope * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
          lo = p;
        }
        if (std::abs(hi.alpha - lo.alpha) < 1e-14) {
          // Interval collapsed; take lo if it strictly improves.
          if (lo.value < f0 && lo.alpha > 0.0) {
            best = eval_line(f, res.x, d, lo.alpha, options, xa, grad_trial);
            grad_best = grad_trial;
            accepted = best.value < f0;
          }
          break;
        }
      }
    }

    if (!accepted) {
      res.iterations = iter;
      res.converged = false;
      return res;
    }

    // s = alpha d, y = g_new - g
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = best.alpha * d[i];
      y[i] = grad_best[i] - grad[i];
      res.x[i] += s[i];
    }
    res.value = best.value;
    grad = grad_best;
    res.iterations = iter + 1;

    if (inf_norm(grad) <= options.grad_tol) {
      res.converged = true;
      return res;
    }

    const double sy = dot(s, y);
    if (sy > 1e-14 * std::sqrt(dot(s, s)) * std::sqrt(dot(y, y)) &&
        sy > 0.0) {
      if (res.iterations == 1) {
        // Nocedal-Wright initial scaling before the first update.
        const double scale = sy / dot(y, y);
        std::fill(H.begin(), H.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) H[i * n + i] = scale;
      }
      const double rho = 1.0 / sy;
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += H[i * n + j] * y[j];
        Hy[i] = acc;
      }
      const double yHy = dot(y, Hy);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          H[i * n + j] += rho * ((1.0 + rho * yHy) * s[i] * s[j] -
                                 Hy[i] * s[j] - s[i] * Hy[j]);
        }
      }
    }
  }

  res.converged = false;  // iteration cap
  return res;
}

}  // namespace vmge
