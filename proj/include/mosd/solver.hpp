#ifndef MOSD_SOLVER_HPP
#define MOSD_SOLVER_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "mosd/direction.hpp"
#include "mosd/manifold.hpp"
#include "mosd/objective.hpp"
#include "mosd/stepsize.hpp"
#include "mosd/types.hpp"

namespace mosd {

struct SolverConfig {
  StrategyConfig strategy = ArmijoConfig{};
  int max_iter = 10000;
  double eps_machine = std::numeric_limits<double>::epsilon();  // 2^-52
  bool record_trace = true;
  QPSettings qp;
};

enum class Termination { converged, max_iter, line_search_failure };

std::string to_string(Termination t);

struct IterateRecord {
  int k = 0;
  double theta = 0.0;
  double v_norm = 0.0;
  double t = 0.0;  // 0 at the terminal record (no step taken)
  Vector f;        // F(p_k)
  Point point;     // p_k (populated when record_trace)
};

struct SolverTrace {
  std::vector<IterateRecord> iterates;
  Point final_point;
  Vector final_f;
  double final_theta = 0.0;
  Termination termination = Termination::max_iter;
  std::int64_t evalf = 0;
  std::int64_t evalg = 0;
  int iter_count = 0;  // steps taken
};

/// Steepest descent outer loop: compute the direction, stop when
/// critical (the test runs before the first step, so already-critical
/// starts exit with zero steps), otherwise step along the geodesic with
/// the configured stepsize strategy.
SolverTrace solve(const Manifold& man, const VectorObjective& obj,
                  const Point& x0, const SolverConfig& cfg);

/// Replays the recorded trace against the descent inequality
/// F(p_{k+1}) <= F(p_k) - nu t_k ||v_k||^2 componentwise, with relative
/// slack 1e-10 (1 + |f|).
bool verify_descent(const SolverTrace& trace, double nu);

struct ComplexityReport {
  bool holds = true;
  int first_violation = -1;  // first N at which the bound fails
  double constant = 0.0;     // the N-independent factor of the bound
  double worst_margin =      // max over N of lhs - bound (<= 0 if holds)
      -std::numeric_limits<double>::infinity();
};

/// Stepsize floor xi entering the complexity bounds: epsilon, eta/L, or
/// t_min by strategy. lipschitz_L is the true componentwise constant,
/// consumed only by the adaptive case.
double strategy_xi(const StrategyConfig& cfg, double lipschitz_L);

/// The summability constant rho of the quasi-Fejer inequality, computed
/// from a single dominating point q (which upper-bounds the infimum
/// over the full dominated set, so downstream bounds only get weaker).
double quasi_fejer_rho(const StrategyConfig& cfg, const Vector& f_p0,
                       const Vector& f_q);

struct FejerConstants {
  double rho = 0.0;
  double C = 0.0;
  double K = 1.0;
};

/// Curvature-dependent constants of the quasi-Fejer inequality. kappa
/// is a nonpositive sectional-curvature lower bound; kappa == 0 uses
/// the analytic flat limits (C -> 0, K -> 1).
FejerConstants fejer_constants(double kappa, double rho, double d_p0_q);

/// O(1/sqrt(N)) stationarity bound: for every N <= #directions,
/// min_{k<N} ||v_k|| <= sqrt((f_{i*}(p0) - f*_{i*}) / (nu xi)) / sqrt(N)
/// with i* minimizing the initial gap over the finite entries of f_star.
ComplexityReport check_sqrt_complexity(const SolverTrace& trace,
                                       const Vector& f_star, double xi,
                                       double nu);

/// O(1/N) bound under convexity: for every N,
/// min_{k<=N} ||v_k|| <= sqrt(2 (d^2(p0,q) + K rho) / (nu xi^2)) / N.
/// Requires a recorded trace, a manifold distance, and q dominating the
/// whole trajectory.
ComplexityReport check_rate_complexity(const Manifold& man,
                                       const SolverTrace& trace,
                                       const Point& q, const Vector& f_q,
                                       double kappa,
                                       const StrategyConfig& strategy,
                                       double xi, double nu);

/// Per-step quasi-Fejer residuals
/// d^2(p_{k+1}, q) - d^2(p_k, q) - K t_k^2 ||v_k||^2; nonpositive up to
/// roundoff when F is quasi-convex and q dominates the trajectory.
std::vector<double> check_fejer(const Manifold& man, const SolverTrace& trace,
                                const Point& q, double kappa, double rho);

}  // namespace mosd

#endif  // MOSD_SOLVER_HPP
