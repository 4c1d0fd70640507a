#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "b3rep/quiver/dim_vector.hpp"
#include "b3rep/rep/semisimple_spec.hpp"

namespace b3rep::geom {

using quiver::GammaDimVector;
using rep::SemisimpleSpec;
using rep::SpecEntry;

/// Label of a component: the multiset of twist-orbit classes of the simple
/// factors, one member per copy. Members are kept sorted.
class ComponentSignature {
 public:
  ComponentSignature() = default;
  /// Replaces every member by its orbit class. Throws NotSimpleDimension.
  explicit ComponentSignature(std::vector<GammaDimVector> members);

  [[nodiscard]] const std::vector<GammaDimVector>& members() const noexcept { return members_; }
  [[nodiscard]] int n() const noexcept;
  [[nodiscard]] int k() const noexcept { return static_cast<int>(members_.size()); }

  /// n^2 + sum over members of dim Ext^1_Gamma(S', S').
  [[nodiscard]] int dimension() const;

  friend auto operator<=>(const ComponentSignature&, const ComponentSignature&) = default;
  friend bool operator==(const ComponentSignature&, const ComponentSignature&) = default;

 private:
  std::vector<GammaDimVector> members_;
};

/// Ext quiver at a semisimple point. Vertex i carries multiplicity e_i;
/// arrows[i][j] = dim Ext^1_B3(S_i, S_j).
struct LocalQuiver {
  std::vector<int> multiplicities;
  std::vector<std::vector<int>> arrows;
};

/// Reason a point fails the smoothness criterion. Indices are 1-based entry
/// positions in the spec.
struct FailedCondition {
  enum class Kind { CrossExt, Multiplicity };
  Kind kind = Kind::CrossExt;
  int i = 0;
  int j = 0;      // CrossExt only
  int value = 0;  // Ext dimension (CrossExt) or multiplicity (Multiplicity)
};

struct AnalysisReport {
  int n = 0;
  ComponentSignature signature;
  int component_dim = 0;
  int tangent_dim_formula = 0;
  bool smooth = false;
  std::vector<FailedCondition> failed_conditions;
  std::vector<ComponentSignature> witnesses;
  LocalQuiver local_quiver;
  std::vector<std::string> notes;
};

/// Whether two entries denote isomorphic simple B3-modules. Entries of
/// dimension >= 2 are compared by declared data (id, alpha, lambda). A
/// one-dimensional simple is determined by its character, so (alpha1, l1) and
/// (alpha2, l2) also match when alpha1 = twist(alpha2, k) and l2 / l1 = zeta6^k.
[[nodiscard]] bool iso_spec(const SpecEntry& e1, const SpecEntry& e2);

/// dim Ext^1_B3(l1 S1, l2 S2) from the three-case formula:
/// self case ext_gamma_self + 1; ratio l2/l1 = zeta6^k gives
/// ext_gamma_pair(alpha1, twist(alpha2, k)); otherwise 0.
/// Throws IsomorphicDistinctEntries for isomorphic but unequal entries.
[[nodiscard]] int ext_b3_spec(const SpecEntry& e1, const SpecEntry& e2);

[[nodiscard]] LocalQuiver local_quiver(const SemisimpleSpec& spec);
[[nodiscard]] ComponentSignature component_signature(const SemisimpleSpec& spec);

/// n^2 + sum_i e_i ext_gamma_self(alpha_i).
[[nodiscard]] int component_dim(const SemisimpleSpec& spec);

/// n^2 + sum_i e_i^2 ext_gamma_self(alpha_i) + sum_{i<j} 2 e_i e_j ext_b3(S_i, S_j).
[[nodiscard]] int tangent_dim_formula(const SemisimpleSpec& spec);

/// Second components through a singular point. One witness per offending
/// cross pair (merging alpha_i with the aligned alpha_j) and per entry of
/// dimension >= 3 and multiplicity >= 2 (merging two copies).
/// Throws WitnessUnavailable when the only failures are 2-dimensional simples
/// with multiplicity >= 2, and Error if a merged vector is not simple.
[[nodiscard]] std::vector<ComponentSignature> intersection_witnesses(const SemisimpleSpec& spec);

/// Smooth iff no cross Ext between distinct entries and every entry with
/// dim > 1 has multiplicity 1. Validates the spec first.
[[nodiscard]] AnalysisReport analyze(const SemisimpleSpec& spec);

/// All component signatures of rep_n B3 sorted by dimension, then
/// lexicographically by members.
[[nodiscard]] std::vector<ComponentSignature> enumerate_signatures(int n);

void to_json(nlohmann::json& j, const ComponentSignature& s);
void to_json(nlohmann::json& j, const LocalQuiver& q);
void to_json(nlohmann::json& j, const FailedCondition& f);
void to_json(nlohmann::json& j, const AnalysisReport& r);

}  // namespace b3rep::geom
