#ifndef MOSD_OBJECTIVE_HPP
#define MOSD_OBJECTIVE_HPP

#include <cstdint>
#include <vector>

#include "mosd/manifold.hpp"
#include "mosd/types.hpp"

namespace mosd {

/// Immutable vector objective F = (f_1, ..., f_m) with Riemannian
/// gradients. Implementations must not keep mutable state; evaluation
/// accounting lives in the per-run EvalCounters cell so parallel
/// multi-start runs never share counters.
class VectorObjective {
 public:
  virtual ~VectorObjective() = default;

  virtual int num_objectives() const = 0;

  /// (f_1(p), ..., f_m(p)).
  virtual Vector eval(const Point& p) const = 0;

  /// The m Riemannian gradients at p, each a tangent based at p.
  virtual std::vector<Tangent> grad(const Point& p) const = 0;
};

/// Per-run evaluation accounting. Each call to evaluate/gradients is
/// counted per coordinate function, i.e. adds m.
struct EvalCounters {
  std::int64_t evalf = 0;
  std::int64_t evalg = 0;
};

/// Counted objective evaluation. Counts the attempt before evaluating,
/// so trials rejected by a thrown domain error still show up in evalf.
Vector evaluate(const VectorObjective& obj, const Point& p, EvalCounters& c);

/// Counted gradient batch; the direction subproblem always consumes all
/// m gradients at once, so per-function access is not exposed.
std::vector<Tangent> gradients(const VectorObjective& obj, const Point& p,
                               EvalCounters& c);

/// Finite-difference validation of the gradient of f_i against the
/// metric, along geodesics: over a unit-norm tangent basis, the maximum
/// of |(f_i(exp(p,v,h)) - f_i(p))/h - <grad f_i(p), v>| normalized by
/// 1 + ||grad f_i(p)||. Uncounted (test/diagnostic path).
double check_gradient(const Manifold& man, const VectorObjective& obj,
                      const Point& p, int i, double h);

}  // namespace mosd

#endif  // MOSD_OBJECTIVE_HPP
