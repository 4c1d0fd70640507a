#pragma once

#include "b3rep/ext/numeric_rank.hpp"
#include "b3rep/ext/tolerance.hpp"
#include "b3rep/rep/rep_pair.hpp"

namespace b3rep::ext {

using rep::RelationKind;
using rep::RepPair;

/// Linear system whose kernel is the space of cocycles Z(S,T).
///
/// Unknowns are vec(D_X), vec(D_Y) with D_X, D_Y in Hom(S,T) (n_T x n_S).
/// A derivation delta satisfies delta(ab) = delta(a) sigma(b) + tau(a) delta(b),
/// so for B3 the single block delta(X^2) = delta(Y^3) reads
///   D_X sX + tX D_X - (D_Y sY^2 + tY D_Y sY + tY^2 D_Y) = 0,
/// and for Gamma both delta(X^2) and delta(Y^3) vanish separately.
struct CocycleSystem {
  RelationKind group_kind = RelationKind::B3;
  Eigen::Index n_source = 0;
  Eigen::Index n_target = 0;
  Eigen::MatrixXcd constraints;  // rows: equations, cols: 2 * n_S * n_T unknowns
};

[[nodiscard]] CocycleSystem build_cocycle_system(const RepPair& source, const RepPair& target,
                                                 RelationKind group_kind);

/// Stacked commutation system F A_V = A_W F, F B_V = B_W F on F (n_W x n_V).
[[nodiscard]] Eigen::MatrixXcd intertwiner_system(const RepPair& v, const RepPair& w);

/// Inner-derivation map beta -> (tau(X) beta - beta sigma(X), tau(Y) beta - beta sigma(Y)).
[[nodiscard]] Eigen::MatrixXcd boundary_map(const RepPair& source, const RepPair& target);

[[nodiscard]] long hom_dim_numeric(const RepPair& v, const RepPair& w, RelationKind group_kind,
                                   const ToleranceConfig& tol = {});

/// Every intermediate dimension of an Ext^1 computation.
struct ExtComputation {
  long dim_z = 0;           // cocycles
  long dim_b = 0;           // n_V n_W - hom_dim
  long hom_dim = 0;
  long boundary_rank = 0;   // rank of boundary_map computed directly
  double boundary_in_cycles_residual = 0.0;  // |constraints * boundary_map| / scale
  long ext_dim = 0;         // dim_z - dim_b
};

/// dim Ext^1(V,W) = dim Z - dim B over Gamma or B3.
/// Throws ToleranceAmbiguity when a singular value lies within a factor 10 of
/// the rank threshold, std::invalid_argument when the inputs fail the relation
/// of group_kind.
[[nodiscard]] ExtComputation ext_numeric(const RepPair& v, const RepPair& w,
                                         RelationKind group_kind, const ToleranceConfig& tol = {});

[[nodiscard]] long ext_dim_numeric(const RepPair& v, const RepPair& w, RelationKind group_kind,
                                   const ToleranceConfig& tol = {});

}  // namespace b3rep::ext
