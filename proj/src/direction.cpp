#include "mosd/direction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mosd {

Vector project_to_simplex(const Vector& y) {
  const Eigen::Index m = y.size();
  require(m >= 1, "project_to_simplex: empty input");
  std::vector<double> u(y.data(), y.data() + m);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumsum = 0.0;
  double tau = 0.0;
  int support = 0;
  for (Eigen::Index k = 0; k < m; ++k) {
    cumsum += u[static_cast<std::size_t>(k)];
    const double t = (cumsum - 1.0) / static_cast<double>(k + 1);
    if (u[static_cast<std::size_t>(k)] > t) {
      tau = t;
      support = static_cast<int>(k + 1);
    }
  }
  (void)support;
  Vector x = (y.array() - tau).cwiseMax(0.0);
  return x;
}

Matrix gram_matrix(const Manifold& man, const Point& p,
                   const std::vector<Tangent>& grads) {
  const int m = static_cast<int>(grads.size());
  Matrix M(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double mij =
          man.inner(p, grads[static_cast<std::size_t>(i)],
                    grads[static_cast<std::size_t>(j)]);
      M(i, j) = mij;
      M(j, i) = mij;
    }
  }
  return M;
}

namespace {

// Frank-Wolfe gap at mu: mu'g - min_j g_j with g = M mu. Zero exactly
// at dual optima; an upper bound on the primal-dual identity error.
double fw_gap(const Vector& g, const Vector& mu) {
  return mu.dot(g) - g.minCoeff();
}

DirectionResult assemble(const Manifold& man, const Point& p,
                         const std::vector<Tangent>& grads, const Matrix& M,
                         const Vector& mu, double gap, bool inexact) {
  const int m = static_cast<int>(grads.size());
  Vector dir = Vector::Zero(man.ambient_size());
  for (int i = 0; i < m; ++i)
    dir -= mu[i] * grads[static_cast<std::size_t>(i)].coords;

  DirectionResult r;
  r.v = Tangent(std::move(dir), p);
  r.mu = mu;
  const Vector Mmu = M * mu;
  // <g_i, v> = -(M mu)_i, so theta = max_i <g_i, v> + 1/2 ||v||^2.
  r.theta = -Mmu.minCoeff() + 0.5 * mu.dot(Mmu);
  r.kkt_residual = gap;
  r.inexact = inexact;
  return r;
}

}  // namespace

DirectionResult solve_direction(const Manifold& man, const Point& p,
                                const std::vector<Tangent>& grads,
                                const QPSettings& settings) {
  const int m = static_cast<int>(grads.size());
  require(m >= 1, "solve_direction: need at least one gradient");
  require(settings.tolerance > 0.0, "solve_direction: tolerance > 0");
  for (const Tangent& g : grads)
    require(g.based_at(p), "solve_direction: gradient not based at p");

  if (m == 1) {
    const Matrix M = gram_matrix(man, p, grads);
    return assemble(man, p, grads, M, Vector::Ones(1), 0.0, false);
  }

  const Matrix M = gram_matrix(man, p, grads);
  const double scale = M.cwiseAbs().maxCoeff();

  // Degenerate case: all gradients (numerically) zero.
  if (scale == 0.0) {
    Vector mu = Vector::Constant(m, 1.0 / m);
    return assemble(man, p, grads, M, mu, 0.0, false);
  }

  // Fixed fallback steplength from the Gershgorin bound on lambda_max.
  const double lmax_bound = M.cwiseAbs().rowwise().sum().maxCoeff();
  const double alpha_fixed = 1.0 / lmax_bound;

  const int budget = settings.max_inner_iter > 0 ? settings.max_inner_iter
                                                 : 10 * m * m + 100;
  // Below this the gap is dominated by roundoff in forming M mu.
  const double fp_floor =
      4.0 * std::numeric_limits<double>::epsilon() * m * scale;

  Vector mu = Vector::Constant(m, 1.0 / m);
  Vector g = M * mu;
  double f = 0.5 * mu.dot(g);
  double gap = fw_gap(g, mu);

  Vector mu_prev = mu, g_prev = g;
  bool have_prev = false;
  bool inexact = true;

  for (int it = 0; it < budget; ++it) {
    if (gap <= settings.tolerance * (1.0 + 2.0 * f) || gap <= fp_floor) {
      inexact = false;
      break;
    }

    double alpha_bb = alpha_fixed;
    if (have_prev) {
      const Vector s = mu - mu_prev;
      const Vector y = g - g_prev;
      const double sy = s.dot(y);
      if (sy > 0.0) alpha_bb = s.dot(s) / sy;
    }

    // Candidate steps: BB and the safe fixed step; keep the better one,
    // which preserves monotone decrease while retaining BB speed.
    const Vector cand_bb = project_to_simplex(mu - alpha_bb * g);
    const Vector g_bb = M * cand_bb;
    const double f_bb = 0.5 * cand_bb.dot(g_bb);

    Vector next = cand_bb, g_next = g_bb;
    double f_next = f_bb;
    if (alpha_bb != alpha_fixed) {
      const Vector cand_fx = project_to_simplex(mu - alpha_fixed * g);
      const Vector g_fx = M * cand_fx;
      const double f_fx = 0.5 * cand_fx.dot(g_fx);
      if (f_fx < f_bb) {
        next = cand_fx;
        g_next = g_fx;
        f_next = f_fx;
      }
    }

    mu_prev.swap(mu);
    g_prev.swap(g);
    mu = next;
    g = g_next;
    f = f_next;
    have_prev = true;
    gap = fw_gap(g, mu);

    // Stalled within roundoff of the previous iterate.
    if ((mu - mu_prev).lpNorm<Eigen::Infinity>() == 0.0) {
      inexact = gap > settings.tolerance * (1.0 + 2.0 * f) && gap > fp_floor;
      break;
    }
  }
  if (gap <= settings.tolerance * (1.0 + 2.0 * f) || gap <= fp_floor)
    inexact = false;

  return assemble(man, p, grads, M, mu, gap, inexact);
}

bool is_critical(const DirectionResult& result, double eps_machine) {
  return result.theta >= -5.0 * std::sqrt(eps_machine);
}

}  // namespace mosd
