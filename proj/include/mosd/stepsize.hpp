#ifndef MOSD_STEPSIZE_HPP
#define MOSD_STEPSIZE_HPP

#include <variant>

#include "mosd/manifold.hpp"
#include "mosd/objective.hpp"
#include "mosd/types.hpp"

namespace mosd {

/// Constant 1/L stepsize; valid whenever the Jacobian is componentwise
/// Lipschitz with constant L along geodesics.
struct LipschitzConfig {
  double L = 1.0;
  // Floor of the admissible interval (epsilon, 1/L]; enters only the
  // diagnostic constants, the step itself is the upper endpoint 1/L.
  double epsilon = 0.0;  // 0 means 1/(2L)

  double resolved_epsilon() const { return epsilon > 0.0 ? epsilon : 0.5 / L; }
  void validate() const {
    require(L > 0.0, "lipschitz: L > 0");
    require(resolved_epsilon() < 1.0 / L, "lipschitz: epsilon < 1/L");
  }
};

/// Backtracking from the previous accepted step; the accepted sequence
/// is nonincreasing and approximates 1/L without knowing L.
struct AdaptiveConfig {
  double zeta = 0.5;  // sufficient-decrease coefficient, in (0, 1/2]
  double L0 = 1.0;    // initial estimate; t_0 = 1/L0
  double eta = 0.5;   // backtrack ratio, in (0, 1)
  int max_backtracks = 100;

  void validate() const {
    require(zeta > 0.0 && zeta <= 0.5, "adaptive: zeta in (0, 1/2]");
    require(L0 > 0.0, "adaptive: L0 > 0");
    require(eta > 0.0 && eta < 1.0, "adaptive: eta in (0, 1)");
  }
};

struct AdaptiveState {
  double t_prev = 0.0;  // initialize to 1/L0 at run start
};

enum class FirstTrialRule { fixed, shanno_phua };

/// Armijo-type backtracking with safeguarded quadratic interpolation of
/// the worst-violating coordinate function.
struct ArmijoConfig {
  double delta = 1e-4;
  double t_min = 1e-2;
  double t_max = 1e2;
  double omega1 = 0.05;
  double omega2 = 0.95;
  FirstTrialRule first_trial = FirstTrialRule::shanno_phua;
  double fixed_t0 = 1.0;  // used by FirstTrialRule::fixed
  int max_trials = 100;

  void validate() const {
    require(delta > 0.0 && delta < 1.0, "armijo: delta in (0, 1)");
    require(t_min > 0.0 && t_min < t_max, "armijo: 0 < t_min < t_max");
    require(omega1 > 0.0 && omega1 < omega2 && omega2 < 1.0,
            "armijo: 0 < omega1 < omega2 < 1");
    if (first_trial == FirstTrialRule::fixed)
      require(fixed_t0 >= t_min && fixed_t0 <= t_max,
              "armijo: fixed first trial in [t_min, t_max]");
  }
};

using StrategyConfig =
    std::variant<LipschitzConfig, AdaptiveConfig, ArmijoConfig>;

/// Sufficient-decrease coefficient nu of the descent inequality:
/// 1/2, zeta, or delta depending on the strategy.
double strategy_nu(const StrategyConfig& cfg);

/// Accepted step with the data the caller already paid for: trial count
/// (= number of F evaluations), F at the accepted point, and the point.
struct StepResult {
  double t = 0.0;
  int trial_count = 0;
  Vector f_next;
  Point p_next;
};

/// The constant step of the Lipschitz strategy: the upper endpoint 1/L.
double lipschitz_step(const LipschitzConfig& cfg);

StepResult adaptive_step(const Manifold& man, const VectorObjective& obj,
                         EvalCounters& counters, const Point& p,
                         const Tangent& v, const Vector& f_p,
                         const AdaptiveConfig& cfg, AdaptiveState& state);

/// Backtracks from first_trial (in [t_min, t_max]) until the
/// componentwise sufficient-decrease test holds. dir_derivs holds
/// <grad f_i(p), v> for the interpolation model; the caller has them
/// from the direction subproblem at no extra gradient cost.
StepResult armijo_step(const Manifold& man, const VectorObjective& obj,
                       EvalCounters& counters, const Point& p,
                       const Tangent& v, const Vector& f_p,
                       const Vector& dir_derivs, double first_trial,
                       const ArmijoConfig& cfg);

/// Safeguarded Shanno-Phua first trial: 1/||v_0|| at the first
/// iteration, then t_{k-1} ||v_{k-1}||^2 / ||v_k||^2, clamped into
/// [t_min, t_max].
double shanno_phua_first_trial(int k, double t_prev, double v_norm_prev,
                               double v_norm, const ArmijoConfig& cfg);

}  // namespace mosd

#endif  // MOSD_STEPSIZE_HPP
