#include "mosd/solver.hpp"

#include <algorithm>
#include <cmath>

namespace mosd {

std::string to_string(Termination t) {
  switch (t) {
    case Termination::converged:
      return "converged";
    case Termination::max_iter:
      return "max_iter";
    case Termination::line_search_failure:
      return "line_search_failure";
  }
  return "unknown";
}

SolverTrace solve(const Manifold& man, const VectorObjective& obj,
                  const Point& x0, const SolverConfig& cfg) {
  require(cfg.max_iter >= 1, "solve: max_iter >= 1");
  if (!man.is_feasible(x0)) throw domain_error("solve: infeasible start");

  const int m = obj.num_objectives();
  EvalCounters counters;
  SolverTrace trace;

  Point p = x0;
  std::vector<Tangent> grads = gradients(obj, p, counters);
  Vector f_p = evaluate(obj, p, counters);

  // Per-run stepsize state.
  AdaptiveState adaptive_state;
  if (const auto* a = std::get_if<AdaptiveConfig>(&cfg.strategy)) {
    a->validate();
    adaptive_state.t_prev = 1.0 / a->L0;
  }
  double armijo_t_prev = 0.0;
  double armijo_vnorm_prev = 0.0;

  for (int k = 0;; ++k) {
    const DirectionResult dir = solve_direction(man, p, grads, cfg.qp);
    const double v_norm = man.norm(p, dir.v);

    trace.iterates.push_back(
        {k, dir.theta, v_norm, 0.0, f_p,
         cfg.record_trace ? p : Point{}});
    trace.final_theta = dir.theta;

    if (is_critical(dir, cfg.eps_machine)) {
      trace.termination = Termination::converged;
      trace.iter_count = k;
      break;
    }
    if (k == cfg.max_iter) {
      trace.termination = Termination::max_iter;
      trace.iter_count = k;
      break;
    }

    StepResult step;
    try {
      if (const auto* lip = std::get_if<LipschitzConfig>(&cfg.strategy)) {
        const double t = lipschitz_step(*lip);
        Point next = man.exp(p, dir.v, t);
        Vector f_next = evaluate(obj, next, counters);
        step = {t, 1, std::move(f_next), std::move(next)};
      } else if (const auto* ada = std::get_if<AdaptiveConfig>(&cfg.strategy)) {
        step = adaptive_step(man, obj, counters, p, dir.v, f_p, *ada,
                             adaptive_state);
      } else {
        const auto& arm = std::get<ArmijoConfig>(cfg.strategy);
        double first = arm.fixed_t0;
        if (arm.first_trial == FirstTrialRule::shanno_phua) {
          first = shanno_phua_first_trial(k, armijo_t_prev, armijo_vnorm_prev,
                                          v_norm, arm);
        }
        Vector dir_derivs(m);
        for (int i = 0; i < m; ++i) {
          dir_derivs[i] =
              man.inner(p, grads[static_cast<std::size_t>(i)], dir.v);
        }
        step = armijo_step(man, obj, counters, p, dir.v, f_p, dir_derivs,
                           first, arm);
        armijo_t_prev = step.t;
        armijo_vnorm_prev = v_norm;
      }
    } catch (const line_search_failure&) {
      trace.termination = Termination::line_search_failure;
      trace.iter_count = k;
      break;
    }

    trace.iterates.back().t = step.t;
    p = std::move(step.p_next);
    f_p = std::move(step.f_next);
    grads = gradients(obj, p, counters);
  }

  trace.final_point = p;
  trace.final_f = f_p;
  trace.evalf = counters.evalf;
  trace.evalg = counters.evalg;
  if (!cfg.record_trace) trace.iterates.clear();
  return trace;
}

bool verify_descent(const SolverTrace& trace, double nu) {
  for (std::size_t k = 0; k + 1 < trace.iterates.size(); ++k) {
    const IterateRecord& cur = trace.iterates[k];
    const IterateRecord& next = trace.iterates[k + 1];
    const double decrement = nu * cur.t * cur.v_norm * cur.v_norm;
    for (Eigen::Index j = 0; j < cur.f.size(); ++j) {
      const double slack = 1e-10 * (1.0 + std::abs(cur.f[j]));
      if (next.f[j] > cur.f[j] - decrement + slack) return false;
    }
  }
  return true;
}

double strategy_xi(const StrategyConfig& cfg, double lipschitz_L) {
  if (const auto* lip = std::get_if<LipschitzConfig>(&cfg))
    return lip->resolved_epsilon();
  if (const auto* ada = std::get_if<AdaptiveConfig>(&cfg)) {
    require(lipschitz_L > 0.0, "strategy_xi: adaptive needs L > 0");
    return ada->eta / lipschitz_L;
  }
  return std::get<ArmijoConfig>(cfg).t_min;
}

double quasi_fejer_rho(const StrategyConfig& cfg, const Vector& f_p0,
                       const Vector& f_q) {
  require(f_p0.size() == f_q.size(), "rho: objective size mismatch");
  const double gap = (f_p0 - f_q).minCoeff();
  if (const auto* lip = std::get_if<LipschitzConfig>(&cfg))
    return 2.0 * gap / lip->L;
  if (const auto* ada = std::get_if<AdaptiveConfig>(&cfg))
    return gap / (ada->zeta * ada->L0);
  const auto& arm = std::get<ArmijoConfig>(cfg);
  return arm.t_max * gap / arm.delta;
}

namespace {

double sinh_over_x(double x) {
  if (std::abs(x) < 1e-8) return 1.0 + x * x / 6.0;
  return std::sinh(x) / x;
}

double x_over_tanh(double x) {
  if (std::abs(x) < 1e-8) return 1.0 + x * x / 3.0;
  return x / std::tanh(x);
}

}  // namespace

FejerConstants fejer_constants(double kappa, double rho, double d_p0_q) {
  require(kappa <= 0.0, "fejer_constants: kappa <= 0");
  require(rho >= 0.0, "fejer_constants: rho >= 0");
  FejerConstants out;
  out.rho = rho;
  if (kappa == 0.0) {
    out.C = 0.0;
    out.K = 1.0;  // flat limit: sinh(x)/x -> 1, C/tanh(C) -> 1
    return out;
  }
  const double kappa_hat = std::sqrt(-kappa);
  const double a = kappa_hat * std::sqrt(rho);
  out.C = std::acosh(std::cosh(kappa_hat * d_p0_q) *
                     std::exp(0.5 * a * std::sinh(a)));
  out.K = sinh_over_x(a) * x_over_tanh(out.C);
  return out;
}

ComplexityReport check_sqrt_complexity(const SolverTrace& trace,
                                       const Vector& f_star, double xi,
                                       double nu) {
  require(!trace.iterates.empty(), "check_sqrt_complexity: empty trace");
  require(xi > 0.0 && nu > 0.0, "check_sqrt_complexity: xi, nu > 0");
  const Vector& f0 = trace.iterates.front().f;
  require(f_star.size() == f0.size(), "check_sqrt_complexity: f_star size");

  double initial_gap = std::numeric_limits<double>::infinity();
  bool any_finite = false;
  for (Eigen::Index i = 0; i < f_star.size(); ++i) {
    if (std::isfinite(f_star[i])) {
      any_finite = true;
      initial_gap = std::min(initial_gap, f0[i] - f_star[i]);
    }
  }
  require(any_finite, "check_sqrt_complexity: no finite f_star entry");

  ComplexityReport report;
  report.constant = initial_gap / (nu * xi);  // squared bound constant
  double running_min = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
    running_min = std::min(running_min, trace.iterates[k].v_norm);
    const int N = static_cast<int>(k) + 1;
    const double bound_sq = report.constant / N;
    const double lhs_sq = running_min * running_min;
    report.worst_margin = std::max(report.worst_margin, lhs_sq - bound_sq);
    if (lhs_sq > bound_sq || !(bound_sq >= 0.0)) {
      report.holds = false;
      if (report.first_violation < 0) report.first_violation = N;
    }
  }
  return report;
}

ComplexityReport check_rate_complexity(const Manifold& man,
                                       const SolverTrace& trace,
                                       const Point& q, const Vector& f_q,
                                       double kappa,
                                       const StrategyConfig& strategy,
                                       double xi, double nu) {
  require(!trace.iterates.empty(), "check_rate_complexity: empty trace");
  require(man.descriptor().has_distance,
          "check_rate_complexity: manifold must provide a distance");
  require(xi > 0.0 && nu > 0.0, "check_rate_complexity: xi, nu > 0");

  // q must dominate every recorded iterate.
  for (const IterateRecord& rec : trace.iterates) {
    for (Eigen::Index j = 0; j < f_q.size(); ++j) {
      if (f_q[j] > rec.f[j])
        throw contract_violation(
            "check_rate_complexity: q does not dominate the trajectory");
    }
  }

  const double rho =
      quasi_fejer_rho(strategy, trace.iterates.front().f, f_q);
  const double d0 = man.distance(trace.iterates.front().point, q);
  const FejerConstants fc = fejer_constants(kappa, rho, d0);

  ComplexityReport report;
  report.constant = 2.0 * (d0 * d0 + fc.K * rho) / (nu * xi * xi);
  double running_min = std::numeric_limits<double>::infinity();
  running_min = trace.iterates.front().v_norm;
  for (std::size_t k = 1; k < trace.iterates.size(); ++k) {
    running_min = std::min(running_min, trace.iterates[k].v_norm);
    const int N = static_cast<int>(k);  // bound over k = 0..N
    const double bound_sq = report.constant / (static_cast<double>(N) * N);
    const double lhs_sq = running_min * running_min;
    report.worst_margin = std::max(report.worst_margin, lhs_sq - bound_sq);
    if (lhs_sq > bound_sq) {
      report.holds = false;
      if (report.first_violation < 0) report.first_violation = N;
    }
  }
  return report;
}

std::vector<double> check_fejer(const Manifold& man, const SolverTrace& trace,
                                const Point& q, double kappa, double rho) {
  require(trace.iterates.size() >= 1, "check_fejer: empty trace");
  require(man.descriptor().has_distance,
          "check_fejer: manifold must provide a distance");
  const double d0 = man.distance(trace.iterates.front().point, q);
  const FejerConstants fc = fejer_constants(kappa, rho, d0);

  std::vector<double> residuals;
  for (std::size_t k = 0; k + 1 < trace.iterates.size(); ++k) {
    const IterateRecord& cur = trace.iterates[k];
    const IterateRecord& next = trace.iterates[k + 1];
    const double dk = man.distance(cur.point, q);
    const double dk1 = man.distance(next.point, q);
    residuals.push_back(dk1 * dk1 - dk * dk -
                        fc.K * cur.t * cur.t * cur.v_norm * cur.v_norm);
  }
  return residuals;
}

}  // namespace mosd
