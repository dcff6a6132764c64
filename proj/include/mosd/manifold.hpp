#ifndef MOSD_MANIFOLD_HPP
#define MOSD_MANIFOLD_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "mosd/types.hpp"

namespace mosd {

struct ManifoldDescriptor {
  int dimension = 0;          // intrinsic dimension, >= 1
  bool has_distance = false;  // geodesic distance available
  // Lower bound on the sectional curvature (<= 0), or unset when no
  // documented bound is adopted. Feeds only the diagnostic constants.
  std::optional<double> curvature_lower_bound;
};

/// Riemannian manifold with a closed-form exponential map. Instances
/// hold immutable configuration only and are safe to share across
/// threads; all operations are pure functions of their inputs.
class Manifold {
 public:
  virtual ~Manifold() = default;

  virtual ManifoldDescriptor descriptor() const = 0;

  /// Length of the coordinate array of points and tangents.
  virtual Eigen::Index ambient_size() const = 0;

  virtual bool is_feasible(const Point& p) const = 0;

  /// Riemannian metric at p. Throws domain_error on infeasible p and
  /// contract_violation when u or v is not based at p.
  virtual double inner(const Point& p, const Tangent& u,
                       const Tangent& v) const = 0;

  /// Geodesic point gamma_v(t) emanating from p with velocity v.
  virtual Point exp(const Point& p, const Tangent& v, double t) const = 0;

  /// Geodesic distance. Only when descriptor().has_distance.
  virtual double distance(const Point& p, const Point& q) const {
    (void)p;
    (void)q;
    throw capability_error("manifold does not provide a distance");
  }

  double norm(const Point& p, const Tangent& v) const {
    return std::sqrt(inner(p, v, v));
  }

  /// A basis of T_pM in instance coordinates (not normalized). The
  /// default is the ambient coordinate basis; manifolds with constrained
  /// tangent layouts override it.
  virtual std::vector<Tangent> tangent_basis(const Point& p) const;

 protected:
  void check_pair(const Point& p, const Tangent& u, const Tangent& v) const {
    if (!is_feasible(p)) throw domain_error("inner: infeasible point");
    require(u.based_at(p) && v.based_at(p), "inner: tangents not based at p");
  }
};

/// Flat R^n with the identity metric; exp is translation.
class EuclideanSpace final : public Manifold {
 public:
  explicit EuclideanSpace(int n) : n_(n) { require(n >= 1, "dimension >= 1"); }

  ManifoldDescriptor descriptor() const override { return {n_, true, 0.0}; }
  Eigen::Index ambient_size() const override { return n_; }

  bool is_feasible(const Point& p) const override {
    return p.size() == n_ && p.coords.allFinite();
  }

  double inner(const Point& p, const Tangent& u,
               const Tangent& v) const override {
    check_pair(p, u, v);
    return u.coords.dot(v.coords);
  }

  Point exp(const Point& p, const Tangent& v, double t) const override {
    require(v.based_at(p), "exp: tangent not based at p");
    if (t == 0.0) return p;
    return Point(p.coords + t * v.coords);
  }

  double distance(const Point& p, const Point& q) const override {
    return (p.coords - q.coords).norm();
  }

 private:
  int n_;
};

}  // namespace mosd

#endif  // MOSD_MANIFOLD_HPP
