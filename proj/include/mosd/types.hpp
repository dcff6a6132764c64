#ifndef MOSD_TYPES_HPP
#define MOSD_TYPES_HPP

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace mosd {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A manifold point. The layout of `coords` is owned by the manifold
/// instance: a plain vector of length n for the vector manifolds, or a
/// full symmetric n-by-n matrix stored row-major for the SPD cone.
struct Point {
  Vector coords;

  Point() = default;
  explicit Point(Vector c) : coords(std::move(c)) {}

  Eigen::Index size() const { return coords.size(); }
};

/// A tangent vector at `base`. Same coordinate layout as the base point.
struct Tangent {
  Vector coords;
  Vector base;

  Tangent() = default;
  Tangent(Vector c, const Point& p) : coords(std::move(c)), base(p.coords) {}
  Tangent(Vector c, Vector base_coords)
      : coords(std::move(c)), base(std::move(base_coords)) {}

  bool based_at(const Point& p) const {
    return base.size() == p.coords.size() && base == p.coords;
  }
};

// Error taxonomy. Infeasible points are domain errors, mismatched
// bases or malformed arguments are contract violations, and asking a
// manifold for an operation it does not support is a capability error.

struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct contract_violation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct capability_error : std::logic_error {
  using std::logic_error::logic_error;
};

struct overflow_error : std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct line_search_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw contract_violation(what);
}

}  // namespace mosd

#endif  // MOSD_TYPES_HPP
