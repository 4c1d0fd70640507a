#include <nlohmann/json.hpp>

#include "b3rep/geom/analyzer.hpp"

namespace b3rep::geom {

void to_json(nlohmann::json& j, const ComponentSignature& s) { j = s.members(); }

void to_json(nlohmann::json& j, const LocalQuiver& q) {
  j = nlohmann::json{{"multiplicities", q.multiplicities}, {"arrows", q.arrows}};
}

void to_json(nlohmann::json& j, const FailedCondition& f) {
  if (f.kind == FailedCondition::Kind::CrossExt) {
    j = nlohmann::json{{"kind", "cross_ext"}, {"i", f.i}, {"j", f.j}, {"ext", f.value}};
  } else {
    j = nlohmann::json{{"kind", "multiplicity"}, {"i", f.i}, {"mult", f.value}};
  }
}

void to_json(nlohmann::json& j, const AnalysisReport& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"signature", w}, {"component_dim", w.dimension()}});
  }
  j = nlohmann::json{{"n", r.n},
                     {"signature", r.signature},
                     {"component_dim", r.component_dim},
                     {"tangent_dim", r.tangent_dim_formula},
                     {"smooth", r.smooth},
                     {"failed_conditions", r.failed_conditions},
                     {"witnesses", witnesses},
                     {"local_quiver", r.local_quiver},
                     {"notes", r.notes}};
}

}  // namespace b3rep::geom
