#include "mosd/objective.hpp"

#include <algorithm>
#include <cmath>

namespace mosd {

Vector evaluate(const VectorObjective& obj, const Point& p, EvalCounters& c) {
  c.evalf += obj.num_objectives();
  return obj.eval(p);
}

std::vector<Tangent> gradients(const VectorObjective& obj, const Point& p,
                               EvalCounters& c) {
  c.evalg += obj.num_objectives();
  return obj.grad(p);
}

double check_gradient(const Manifold& man, const VectorObjective& obj,
                      const Point& p, int i, double h) {
  require(h > 0.0, "check_gradient: h > 0");
  require(i >= 0 && i < obj.num_objectives(), "check_gradient: bad index");

  const Vector f_p = obj.eval(p);
  const Tangent g = obj.grad(p)[static_cast<std::size_t>(i)];
  const double gnorm = man.norm(p, g);

  double worst = 0.0;
  for (Tangent v : man.tangent_basis(p)) {
    const double vn = man.norm(p, v);
    if (vn == 0.0) continue;
    v.coords /= vn;
    const Point q = man.exp(p, v, h);
    const double fd = (obj.eval(q)[i] - f_p[i]) / h;
    const double exact = man.inner(p, g, v);
    worst = std::max(worst, std::abs(fd - exact));
  }
  return worst / (1.0 + gnorm);
}

}  // namespace mosd
