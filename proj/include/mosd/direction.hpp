#ifndef MOSD_DIRECTION_HPP
#define MOSD_DIRECTION_HPP

#include <vector>

#include "mosd/manifold.hpp"
#include "mosd/objective.hpp"
#include "mosd/types.hpp"

namespace mosd {

struct QPSettings {
  // Frank-Wolfe gap target, relative to 1 + ||v||^2 (see solve_direction).
  double tolerance = 1e-10;
  // Inner-iteration budget; 0 means the default 10*m^2 + 100.
  int max_inner_iter = 0;
};

/// Solution of the steepest-descent-direction subproblem
///   min_v  max_i <grad f_i(p), v> + 1/2 ||v||^2
/// at a point p, obtained through its dual: the minimum-norm point of
/// the convex hull of the gradients.
struct DirectionResult {
  Tangent v;           // steepest descent direction, -sum mu_i g_i
  double theta = 0.0;  // optimal value; -1/2 ||v||^2 at an exact solution
  Vector mu;           // simplex weights
  double kkt_residual = 0.0;  // final Frank-Wolfe gap of the dual
  bool inexact = false;       // iteration budget exhausted
};

/// Euclidean projection onto the unit simplex {x >= 0, sum x = 1}.
Vector project_to_simplex(const Vector& y);

/// Gram matrix M_ij = <g_i, g_j>_p; symmetric positive semidefinite.
Matrix gram_matrix(const Manifold& man, const Point& p,
                   const std::vector<Tangent>& grads);

/// Solves min_{mu in simplex} 1/2 mu' M mu by projected gradient with a
/// Barzilai-Borwein steplength safeguarded against a fixed 1/lambda_max
/// step, then assembles v = -sum mu_i g_i and theta. Terminates when the
/// Frank-Wolfe gap falls below tolerance * (1 + mu'M mu) or below the
/// floating-point floor of the gap computation itself.
DirectionResult solve_direction(const Manifold& man, const Point& p,
                                const std::vector<Tangent>& grads,
                                const QPSettings& settings = {});

/// Convergence test of the outer method: theta >= -5 sqrt(eps_machine).
bool is_critical(const DirectionResult& result, double eps_machine);

}  // namespace mosd

#endif  // MOSD_DIRECTION_HPP
