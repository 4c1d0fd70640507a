#include "b3rep/geom/gln.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/random/uniform_real_distribution.hpp>

#include "b3rep/errors.hpp"
#include "b3rep/rep/factory.hpp"

namespace b3rep::geom {

rep::RepPair gln_embed(const rep::Matrix& g) {
  if (g.rows() != g.cols() || g.rows() == 0) throw std::invalid_argument("gln_embed needs a square matrix");
  const Eigen::JacobiSVD<rep::Matrix> svd(g);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-12 * std::max(1.0, sv(0))) {
    throw std::invalid_argument("gln_embed needs an invertible matrix");
  }
  const rep::Matrix g2 = g * g;
  return {g2 * g, g2, rep::RelationKind::B3};
}

rep::Matrix gln_retract(const rep::RepPair& v, double tol) {
  const double commutator = (v.A * v.B - v.B * v.A).norm();
  if (commutator > tol * std::max(1.0, v.A.norm() * v.B.norm())) {
    throw NonCommutingPair("gln_retract needs commuting A and B");
  }
  // A B^{-1} = (B^{-T} A^T)^T
  return v.B.transpose().partialPivLu().solve(v.A.transpose()).transpose();
}

rep::Matrix random_gln(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_gln needs n >= 1");
  boost::random::uniform_real_distribution<double> scale(0.5, 2.0);
  const rep::Matrix u = rep::random_unitary(n, rng);
  const rep::Matrix v = rep::random_unitary(n, rng);
  Eigen::VectorXcd s(n);
  for (int i = 0; i < n; ++i) s(i) = scale(rng);
  return u * s.asDiagonal() * v;
}

}  // namespace b3rep::geom
