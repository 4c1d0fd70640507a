#include "b3rep/geom/analyzer.hpp"

#include <algorithm>
#include <functional>

#include "b3rep/errors.hpp"
#include "b3rep/quiver/lattice.hpp"

namespace b3rep::geom {

namespace {

using quiver::ext_gamma_pair;
using quiver::ext_gamma_self;
using quiver::twist_gamma;

bool same_declared_simple(const SpecEntry& e1, const SpecEntry& e2) {
  return e1.instance_id == e2.instance_id && e1.alpha == e2.alpha && e1.lambda == e2.lambda;
}

// Raw alphas, one per copy, in entry order.
std::vector<GammaDimVector> expanded_members(const SemisimpleSpec& spec) {
  std::vector<GammaDimVector> out;
  for (const auto& e : spec.entries) out.insert(out.end(), static_cast<std::size_t>(e.mult), e.alpha);
  return out;
}

void erase_one(std::vector<GammaDimVector>& members, const GammaDimVector& alpha) {
  const auto it = std::find(members.begin(), members.end(), alpha);
  if (it != members.end()) members.erase(it);
}

struct WitnessScan {
  std::vector<ComponentSignature> witnesses;
  std::vector<int> unavailable;  // 1-based entries: dim 2, mult >= 2
};

WitnessScan scan_witnesses(const SemisimpleSpec& spec) {
  WitnessScan scan;
  const auto& entries = spec.entries;
  auto record = [&](std::vector<GammaDimVector> members, const GammaDimVector& merged) {
    if (!quiver::is_simple_gamma(merged)) {
      throw Error("merged dimension vector " + quiver::to_string(merged) +
                  " is not simple; intersection witness cannot be formed");
    }
    members.push_back(merged);
    ComponentSignature sig(std::move(members));
    if (std::find(scan.witnesses.begin(), scan.witnesses.end(), sig) == scan.witnesses.end()) {
      scan.witnesses.push_back(std::move(sig));
    }
  };

  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (ext_b3_spec(entries[i], entries[j]) == 0) continue;
      const int k = *(entries[j].lambda / entries[i].lambda).mu6_exponent();
      const GammaDimVector aligned = twist_gamma(entries[j].alpha, k);
      auto members = expanded_members(spec);
      erase_one(members, entries[i].alpha);
      erase_one(members, entries[j].alpha);
      record(std::move(members), entries[i].alpha + aligned);
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.mult < 2 || e.alpha.n() < 2) continue;
    if (e.alpha.n() == 2) {
      scan.unavailable.push_back(static_cast<int>(i + 1));
      continue;
    }
    auto members = expanded_members(spec);
    erase_one(members, e.alpha);
    erase_one(members, e.alpha);
    record(std::move(members), 2 * e.alpha);
  }
  return scan;
}

}  // namespace

ComponentSignature::ComponentSignature(std::vector<GammaDimVector> members) : members_(std::move(members)) {
  for (auto& m : members_) {
    if (!quiver::is_simple_gamma(m)) {
      throw NotSimpleDimension("signature member " + quiver::to_string(m) + " is not simple");
    }
    m = quiver::orbit_class(m);
  }
  std::sort(members_.begin(), members_.end());
}

int ComponentSignature::n() const noexcept {
  int total = 0;
  for (const auto& m : members_) total += m.n();
  return total;
}

int ComponentSignature::dimension() const {
  const int dim = n();
  int out = dim * dim;
  for (const auto& m : members_) out += ext_gamma_self(m);
  return out;
}

bool iso_spec(const SpecEntry& e1, const SpecEntry& e2) {
  if (same_declared_simple(e1, e2)) return true;
  if (e1.alpha.n() != 1 || e2.alpha.n() != 1) return false;
  // l2 = zeta^k l1 and l2 S2 = l1 (zeta^k S2), so S1 must equal zeta^k S2.
  const auto k = (e2.lambda / e1.lambda).mu6_exponent();
  return k && twist_gamma(e2.alpha, *k) == e1.alpha;
}

int ext_b3_spec(const SpecEntry& e1, const SpecEntry& e2) {
  if (iso_spec(e1, e2)) {
    if (!same_declared_simple(e1, e2)) {
      throw IsomorphicDistinctEntries("entries " + quiver::to_string(e1.alpha) + " and " +
                                      quiver::to_string(e2.alpha) + " denote isomorphic simples");
    }
    return ext_gamma_self(e1.alpha) + 1;
  }
  if (const auto k = (e2.lambda / e1.lambda).mu6_exponent()) {
    return ext_gamma_pair(e1.alpha, twist_gamma(e2.alpha, *k));
  }
  return 0;
}

LocalQuiver local_quiver(const SemisimpleSpec& spec) {
  rep::validate_spec(spec);
  const std::size_t k = spec.entries.size();
  LocalQuiver q;
  q.arrows.assign(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    q.multiplicities.push_back(spec.entries[i].mult);
    for (std::size_t j = 0; j < k; ++j) {
      q.arrows[i][j] = i == j ? ext_gamma_self(spec.entries[i].alpha) + 1
                              : ext_b3_spec(spec.entries[i], spec.entries[j]);
    }
  }
  return q;
}

ComponentSignature component_signature(const SemisimpleSpec& spec) {
  return ComponentSignature(expanded_members(spec));
}

int component_dim(const SemisimpleSpec& spec) {
  const int n = spec.n();
  int out = n * n;
  for (const auto& e : spec.entries) out += e.mult * ext_gamma_self(e.alpha);
  return out;
}

int tangent_dim_formula(const SemisimpleSpec& spec) {
  const int n = spec.n();
  const auto& entries = spec.entries;
  int out = n * n;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out += entries[i].mult * entries[i].mult * ext_gamma_self(entries[i].alpha);
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      out += 2 * entries[i].mult * entries[j].mult * ext_b3_spec(entries[i], entries[j]);
    }
  }
  return out;
}

std::vector<ComponentSignature> intersection_witnesses(const SemisimpleSpec& spec) {
  rep::validate_spec(spec);
  WitnessScan scan = scan_witnesses(spec);
  if (scan.witnesses.empty() && !scan.unavailable.empty()) {
    throw WitnessUnavailable(
        "singularity comes only from 2-dimensional simples with multiplicity >= 2; "
        "no second component is certified");
  }
  return std::move(scan.witnesses);
}

AnalysisReport analyze(const SemisimpleSpec& spec) {
  rep::validate_spec(spec);
  const auto& entries = spec.entries;

  AnalysisReport report;
  report.n = spec.n();
  report.signature = component_signature(spec);
  report.component_dim = component_dim(spec);
  report.tangent_dim_formula = tangent_dim_formula(spec);
  report.local_quiver = local_quiver(spec);

  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const int ext = report.local_quiver.arrows[i][j];
      if (ext != 0) {
        report.failed_conditions.push_back(
            {FailedCondition::Kind::CrossExt, static_cast<int>(i + 1), static_cast<int>(j + 1), ext});
      }
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].alpha.n() > 1 && entries[i].mult > 1) {
      report.failed_conditions.push_back(
          {FailedCondition::Kind::Multiplicity, static_cast<int>(i + 1), 0, entries[i].mult});
    }
  }
  report.smooth = report.failed_conditions.empty();
  if (report.smooth) return report;

  WitnessScan scan = scan_witnesses(spec);
  report.witnesses = std::move(scan.witnesses);
  for (int i : scan.unavailable) {
    report.notes.push_back("entry " + std::to_string(i) +
                           ": 2-dimensional simple with multiplicity >= 2; the point is singular "
                           "but need not lie on a second generically semisimple component");
  }
  if (!report.witnesses.empty()) {
    report.notes.push_back(
        "witness signatures are assumed to label components distinct from the point's own");
  }
  return report;
}

std::vector<ComponentSignature> enumerate_signatures(int n) {
  std::vector<GammaDimVector> classes;
  for (int d = 1; d <= n; ++d) {
    const auto cls = quiver::simple_orbit_classes(d);
    classes.insert(classes.end(), cls.begin(), cls.end());
  }
  std::vector<ComponentSignature> out;
  std::vector<GammaDimVector> chosen;
  // Non-decreasing index sequences enumerate each multiset once.
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      out.emplace_back(chosen);
      return;
    }
    for (std::size_t i = start; i < classes.size(); ++i) {
      if (classes[i].n() > remaining) continue;
      chosen.push_back(classes[i]);
      rec(i, remaining - classes[i].n());
      chosen.pop_back();
    }
  };
  if (n >= 1) rec(0, n);
  std::stable_sort(out.begin(), out.end(), [](const ComponentSignature& l, const ComponentSignature& r) {
    const int dl = l.dimension();
    const int dr = r.dimension();
    return dl != dr ? dl < dr : l < r;
  });
  return out;
}

}  // namespace b3rep::geom
