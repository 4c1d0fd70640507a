#include "b3rep/ext/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "b3rep/errors.hpp"

namespace b3rep::ext {

namespace {

using Eigen::MatrixXcd;

MatrixXcd identity(Eigen::Index n) { return MatrixXcd::Identity(n, n); }

// vec(D S) and vec(T D) for D of shape n_T x n_S.
MatrixXcd right_mul(const MatrixXcd& s, Eigen::Index n_target) {
  return kron(s.transpose(), identity(n_target));
}
MatrixXcd left_mul(const MatrixXcd& t, Eigen::Index n_source) { return kron(identity(n_source), t); }

void require_kind(const RepPair& v, RelationKind kind, const char* which) {
  if (!rep::validate_rep(v, kind).ok) {
    throw std::invalid_argument(std::string(which) + " does not satisfy the " + rep::to_string(kind) +
                                " relation");
  }
}

RankInfo checked_rank(const MatrixXcd& m, const ToleranceConfig& tol, const char* what) {
  RankInfo info = numeric_rank(m, tol);
  if (info.ambiguous) {
    throw ToleranceAmbiguity(std::string(what) + ": singular value within a factor " +
                             std::to_string(info.margin) + " of the rank threshold");
  }
  return info;
}

}  // namespace

CocycleSystem build_cocycle_system(const RepPair& source, const RepPair& target,
                                   RelationKind group_kind) {
  const Eigen::Index ns = source.n();
  const Eigen::Index nt = target.n();
  const Eigen::Index block = ns * nt;
  const MatrixXcd& sx = source.A;
  const MatrixXcd& sy = source.B;
  const MatrixXcd& tx = target.A;
  const MatrixXcd& ty = target.B;

  // delta(X^2) = D_X sX + tX D_X
  const MatrixXcd x_block = right_mul(sx, nt) + left_mul(tx, ns);
  // delta(Y^3) = D_Y sY^2 + tY D_Y sY + tY^2 D_Y
  const MatrixXcd y_block = right_mul(sy * sy, nt) + kron(sy.transpose(), ty) + left_mul(ty * ty, ns);

  CocycleSystem sys;
  sys.group_kind = group_kind;
  sys.n_source = ns;
  sys.n_target = nt;
  if (group_kind == RelationKind::B3) {
    sys.constraints.resize(block, 2 * block);
    sys.constraints << x_block, -y_block;
  } else {
    sys.constraints = MatrixXcd::Zero(2 * block, 2 * block);
    sys.constraints.topLeftCorner(block, block) = x_block;
    sys.constraints.bottomRightCorner(block, block) = y_block;
  }
  return sys;
}

MatrixXcd intertwiner_system(const RepPair& v, const RepPair& w) {
  const Eigen::Index nv = v.n();
  const Eigen::Index nw = w.n();
  MatrixXcd sys(2 * nv * nw, nv * nw);
  sys << right_mul(v.A, nw) - left_mul(w.A, nv), right_mul(v.B, nw) - left_mul(w.B, nv);
  return sys;
}

MatrixXcd boundary_map(const RepPair& source, const RepPair& target) {
  const Eigen::Index ns = source.n();
  const Eigen::Index nt = target.n();
  MatrixXcd map(2 * ns * nt, ns * nt);
  map << left_mul(target.A, ns) - right_mul(source.A, nt),
      left_mul(target.B, ns) - right_mul(source.B, nt);
  return map;
}

long hom_dim_numeric(const RepPair& v, const RepPair& w, RelationKind group_kind,
                     const ToleranceConfig& tol) {
  // Intertwiners depend only on the matrices; the kind just gates the inputs.
  require_kind(v, group_kind, "hom source");
  require_kind(w, group_kind, "hom target");
  return checked_rank(intertwiner_system(v, w), tol, "hom system").kernel_dim;
}

ExtComputation ext_numeric(const RepPair& v, const RepPair& w, RelationKind group_kind,
                           const ToleranceConfig& tol) {
  require_kind(v, group_kind, "ext source");
  require_kind(w, group_kind, "ext target");

  const CocycleSystem sys = build_cocycle_system(v, w, group_kind);
  const MatrixXcd bmap = boundary_map(v, w);

  ExtComputation out;
  out.dim_z = checked_rank(sys.constraints, tol, "cocycle system").kernel_dim;
  out.hom_dim = checked_rank(intertwiner_system(v, w), tol, "hom system").kernel_dim;
  out.dim_b = v.n() * w.n() - out.hom_dim;
  out.boundary_rank = checked_rank(bmap, tol, "boundary map").rank;
  const double scale = std::max(1.0, sys.constraints.norm() * bmap.norm());
  out.boundary_in_cycles_residual = (sys.constraints * bmap).norm() / scale;
  out.ext_dim = out.dim_z - out.dim_b;
  return out;
}

long ext_dim_numeric(const RepPair& v, const RepPair& w, RelationKind group_kind,
                     const ToleranceConfig& tol) {
  return ext_numeric(v, w, group_kind, tol).ext_dim;
}

}  // namespace b3rep::ext
