#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "b3rep/errors.hpp"
#include "b3rep/geom/analyzer.hpp"
#include "b3rep/geom/tangent.hpp"
#include "b3rep/quiver/lattice.hpp"
#include "b3rep/rep/factory.hpp"

namespace b3rep::cli {

namespace {

constexpr int kVerifyAttempts = 8;

std::string join(const std::vector<geom::GammaDimVector>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += quiver::to_string(members[i]);
  }
  return out + "}";
}

int cmd_simples(const CliConfig& cfg, std::ostream& out) {
  const auto simples = quiver::enumerate_simple_gamma(cfg.n);
  const auto orbits = quiver::simple_orbit_classes(cfg.n);
  if (cfg.format == Format::Json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& a : simples) {
      list.push_back({{"alpha", a}, {"orbit_class", quiver::orbit_class(a)}, {"ext_self", quiver::ext_gamma_self(a)}});
    }
    out << nlohmann::json{{"n", cfg.n}, {"simples", list}, {"orbit_classes", orbits}}.dump(2) << "\n";
    return kOk;
  }
  out << "n = " << cfg.n << ": " << simples.size() << " simple dimension vectors, " << orbits.size()
      << " orbit classes\n";
  out << std::left << std::setw(18) << "alpha" << std::setw(18) << "orbit" << "ext_self\n";
  for (const auto& a : simples) {
    out << std::setw(18) << quiver::to_string(a) << std::setw(18) << quiver::to_string(quiver::orbit_class(a))
        << quiver::ext_gamma_self(a) << "\n";
  }
  return kOk;
}

int cmd_components(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n > cfg.max_n) {
    err << "components: n = " << cfg.n << " exceeds --max-n " << cfg.max_n << "\n";
    return kInputError;
  }
  const auto sigs = geom::enumerate_signatures(cfg.n);
  if (cfg.format == Format::Json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& s : sigs) list.push_back({{"signature", s}, {"dimension", s.dimension()}});
    out << nlohmann::json{{"n", cfg.n}, {"components", list}}.dump(2) << "\n";
    return kOk;
  }
  out << "n = " << cfg.n << ": " << sigs.size() << " components\n";
  for (const auto& s : sigs) out << std::setw(6) << s.dimension() << "  " << join(s.members()) << "\n";
  return kOk;
}

void print_report_table(const geom::AnalysisReport& r, std::ostream& out) {
  out << "n               " << r.n << "\n"
      << "signature       " << join(r.signature.members()) << "\n"
      << "component dim   " << r.component_dim << "\n"
      << "tangent dim     " << r.tangent_dim_formula << "\n"
      << "verdict         " << (r.smooth ? "smooth" : "singular") << "\n";
  for (const auto& f : r.failed_conditions) {
    if (f.kind == geom::FailedCondition::Kind::CrossExt) {
      out << "  fails: Ext^1(S" << f.i << ", S" << f.j << ") = " << f.value << "\n";
    } else {
      out << "  fails: S" << f.i << " has multiplicity " << f.value << " and nonzero self-Ext\n";
    }
  }
  for (const auto& w : r.witnesses) out << "  also on " << join(w.members()) << " (dim " << w.dimension() << ")\n";
  out << "local quiver\n";
  for (std::size_t i = 0; i < r.local_quiver.arrows.size(); ++i) {
    out << "  [" << r.local_quiver.multiplicities[i] << "]";
    for (int a : r.local_quiver.arrows[i]) out << " " << a;
    out << "\n";
  }
  for (const auto& note : r.notes) out << "note: " << note << "\n";
}

int cmd_analyze(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.spec_path);
  if (!in) {
    err << "analyze: cannot open " << cfg.spec_path << "\n";
    return kInputError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  rep::SemisimpleSpec spec;
  try {
    spec = rep::parse_spec(buffer.str());
  } catch (const std::exception& e) {
    err << "analyze: " << e.what() << "\n";
    return kInputError;
  }

  const auto report = geom::analyze(spec);
  nlohmann::json j = report;

  bool mismatch = false;
  if (cfg.verify) {
    const auto tol = ext::ToleranceConfig::with_rel_tol(cfg.tol);
    std::uint64_t seed = cfg.seed;
    long numeric = -1;
    int attempts = 0;
    for (; attempts < kVerifyAttempts && numeric < 0; ++attempts) {
      try {
        numeric = geom::tangent_dim_numeric(rep::assemble(spec, seed, tol), tol);
      } catch (const ToleranceAmbiguity&) {
        seed = rep::instance_seed(seed, "retry");
      }
    }
    if (numeric < 0) {
      err << "analyze: numeric rank stayed ambiguous after " << kVerifyAttempts << " seeds\n";
      return kMismatch;
    }
    mismatch = numeric != report.tangent_dim_formula;
    j["verification"] = {{"seed", seed}, {"attempts", attempts}, {"tangent_dim_numeric", numeric},
                         {"agrees", !mismatch}};
    if (cfg.format == Format::Table) {
      print_report_table(report, out);
      out << "numeric tangent " << numeric << (mismatch ? "  MISMATCH" : "  ok") << " (seed " << seed << ")\n";
    }
  } else if (cfg.format == Format::Table) {
    print_report_table(report, out);
  }
  if (cfg.format == Format::Json) out << j.dump(2) << "\n";
  if (mismatch) {
    err << "analyze: numeric tangent disagrees with the formula\n";
    return kMismatch;
  }
  return report.smooth ? kSmooth : kSingular;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  const auto r = run_suite(cfg);
  if (cfg.format == Format::Json) {
    out << to_json(r, cfg).dump(2) << "\n";
  } else {
    out << "suite " << r.suite << ": " << r.passed << "/" << r.checks << " passed, " << r.failed() << " failed"
        << ", worst residual " << r.worst_residual << ", ambiguous retries " << r.ambiguous_retries << "\n";
    for (const auto& f : r.failures) out << "  FAIL " << f << "\n";
  }
  return r.failed() == 0 ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Smooth and singular semisimple points of rep_n B3"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto* simples = app.add_subcommand("simples", "Simple Gamma dimension vectors of total n");
  simples->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);

  auto* components = app.add_subcommand("components", "Irreducible components of rep_n B3");
  components->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  components->add_option("--max-n", cfg.max_n, "Refuse larger n")->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "Classify a semisimple point given as a JSON spec");
  analyze->add_option("--spec", cfg.spec_path)->required();
  analyze->add_flag("--verify", cfg.verify, "Check the tangent dimension numerically");
  analyze->add_option("--seed", cfg.seed);
  analyze->add_option("--tol", cfg.tol)->check(CLI::Range(1e-15, 1e-2));

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", cfg.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  verify->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--tol", cfg.tol)->check(CLI::Range(1e-15, 1e-2));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  cfg.format = format == "table" ? Format::Table : Format::Json;

  try {
    if (*simples) return cmd_simples(cfg, out);
    if (*components) return cmd_components(cfg, out, err);
    if (*analyze) return cmd_analyze(cfg, out, err);
    return cmd_verify(cfg, out);
  } catch (const InvalidSpec& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace b3rep::cli
