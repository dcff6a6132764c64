#include "mosd/manifold.hpp"

namespace mosd {

std::vector<Tangent> Manifold::tangent_basis(const Point& p) const {
  std::vector<Tangent> basis;
  const Eigen::Index n = ambient_size();
  basis.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    Vector e = Vector::Zero(n);
    e[k] = 1.0;
    basis.emplace_back(std::move(e), p);
  }
  return basis;
}

}  // namespace mosd
