#include "mosd/stepsize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mosd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Componentwise test  f_trial[j] <= f_p[j] - coeff * t * ||v||^2,
// evaluated in exact floating order with no epsilon relaxation.
bool sufficient_decrease(const Vector& f_trial, const Vector& f_p,
                         double coeff, double t, double v_sq) {
  for (Eigen::Index j = 0; j < f_p.size(); ++j) {
    if (!(f_trial[j] <= f_p[j] - coeff * t * v_sq)) return false;
  }
  return true;
}

// Evaluate F at the trial point; infeasible or overflowing trials are
// reported as +inf so the backtracking loop rejects and shrinks. Every
// attempt counts toward evalf, including throwing ones.
Vector try_evaluate(const Manifold& man, const VectorObjective& obj,
                    EvalCounters& counters, const Point& p, const Tangent& v,
                    double t, Point& trial_point) {
  counters.evalf += obj.num_objectives();
  try {
    trial_point = man.exp(p, v, t);
    Vector f = obj.eval(trial_point);
    if (!f.allFinite()) f = Vector::Constant(f.size(), kInf);
    return f;
  } catch (const domain_error&) {
  } catch (const overflow_error&) {
  }
  return Vector::Constant(obj.num_objectives(), kInf);
}

}  // namespace

double strategy_nu(const StrategyConfig& cfg) {
  if (std::holds_alternative<LipschitzConfig>(cfg)) return 0.5;
  if (const auto* a = std::get_if<AdaptiveConfig>(&cfg)) return a->zeta;
  return std::get<ArmijoConfig>(cfg).delta;
}

double lipschitz_step(const LipschitzConfig& cfg) {
  cfg.validate();
  return 1.0 / cfg.L;
}

StepResult adaptive_step(const Manifold& man, const VectorObjective& obj,
                         EvalCounters& counters, const Point& p,
                         const Tangent& v, const Vector& f_p,
                         const AdaptiveConfig& cfg, AdaptiveState& state) {
  cfg.validate();
  require(state.t_prev > 0.0, "adaptive_step: state not initialized");
  const double v_sq = man.inner(p, v, v);
  require(v_sq > 0.0, "adaptive_step: zero direction");

  double t = state.t_prev;
  for (int i = 0; i <= cfg.max_backtracks; ++i) {
    Point trial_point;
    const Vector f_trial =
        try_evaluate(man, obj, counters, p, v, t, trial_point);
    if (sufficient_decrease(f_trial, f_p, cfg.zeta, t, v_sq)) {
      state.t_prev = t;
      return {t, i + 1, f_trial, trial_point};
    }
    t *= cfg.eta;
  }
  throw line_search_failure("adaptive stepsize: backtrack cap exceeded");
}

StepResult armijo_step(const Manifold& man, const VectorObjective& obj,
                       EvalCounters& counters, const Point& p,
                       const Tangent& v, const Vector& f_p,
                       const Vector& dir_derivs, double first_trial,
                       const ArmijoConfig& cfg) {
  cfg.validate();
  require(first_trial >= cfg.t_min && first_trial <= cfg.t_max,
          "armijo_step: first trial outside [t_min, t_max]");
  const double v_sq = man.inner(p, v, v);
  require(v_sq > 0.0, "armijo_step: zero direction");
  require(dir_derivs.size() == f_p.size(), "armijo_step: dir_derivs size");

  double t = first_trial;
  for (int trial = 1; trial <= cfg.max_trials; ++trial) {
    Point trial_point;
    const Vector f_trial =
        try_evaluate(man, obj, counters, p, v, t, trial_point);
    if (sufficient_decrease(f_trial, f_p, cfg.delta, t, v_sq)) {
      return {t, trial, f_trial, trial_point};
    }

    // Quadratic interpolation of the worst-violating coordinate,
    // safeguarded into [omega1 t, omega2 t].
    int worst = 0;
    double worst_violation = -kInf;
    for (Eigen::Index j = 0; j < f_p.size(); ++j) {
      const double viol = f_trial[j] - (f_p[j] - cfg.delta * t * v_sq);
      if (viol > worst_violation) {
        worst_violation = viol;
        worst = static_cast<int>(j);
      }
    }

    double next = cfg.omega2 * t;
    if (std::isfinite(f_trial[worst])) {
      const double d = dir_derivs[worst];
      const double curv = (f_trial[worst] - f_p[worst] - d * t) / (t * t);
      if (curv > 0.0) {
        const double minimizer = -d / (2.0 * curv);
        next = std::clamp(minimizer, cfg.omega1 * t, cfg.omega2 * t);
      }
    } else {
      next = cfg.omega1 * t;  // non-finite trial: shrink hard
    }
    t = next;
  }
  throw line_search_failure("armijo stepsize: trial cap exceeded");
}

double shanno_phua_first_trial(int k, double t_prev, double v_norm_prev,
                               double v_norm, const ArmijoConfig& cfg) {
  require(v_norm > 0.0, "shanno_phua: v_norm > 0");
  double t_bar;
  if (k == 0) {
    t_bar = 1.0 / v_norm;
  } else {
    require(t_prev > 0.0 && v_norm_prev >= 0.0, "shanno_phua: bad history");
    t_bar = t_prev * (v_norm_prev * v_norm_prev) / (v_norm * v_norm);
  }
  return std::max(cfg.t_min, std::min(t_bar, cfg.t_max));
}

}  // namespace mosd
