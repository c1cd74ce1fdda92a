//
// semistar command line tool.
//
// Subcommands: analyze, is-inverse, involutions, rees, reps, star-check,
// corpus.  Input is the .sgt table format; --json emits a deterministic
// machine-readable report (same input + same seed => byte-identical).
// Exit codes: 0 ok, 1 input error, 2 internal invariant violation.
//

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semistar/corpus.hpp"
#include "semistar/involution.hpp"
#include "semistar/report_json.hpp"
#include "semistar/rees.hpp"
#include "semistar/schutz.hpp"
#include "semistar/semigroup.hpp"
#include "semistar/sgt.hpp"

namespace {

using namespace semistar;

struct Options {
  std::string path;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  double eps = kDefaultEps;
  int max_order = 3;
  bool no_oracle = false;
};

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json report_envelope(const std::string& command, const Options& opt,
                     const std::string& digest) {
  Json report;
  report["command"] = command;
  if (!opt.path.empty()) {
    report["input"] = {{"path", opt.path}, {"digest", digest}};
  }
  report["seed"] = opt.seed;
  report["eps"] = opt.eps;
  return report;
}

struct LoadedInput {
  SgtFile file;
  std::string digest;
};

LoadedInput load(const Options& opt) {
  const std::string bytes = slurp(opt.path);
  std::istringstream stream(bytes);
  return {parse_sgt(stream), fnv1a_digest(bytes)};
}

Json cmd_analyze(const SgtFile& input) {
  const SemigroupTable& s = input.table;
  const GreenStructure green = green_structure(s);
  const PrincipalSeries series = principal_series(s, green);
  const auto brute = brute_force_is_inverse(s);

  Json verdicts;
  verdicts["order"] = s.n;
  verdicts["idempotents"] = static_cast<int>(green.idempotents.size());
  Json classes = Json::array();
  for (std::size_t j = 0; j < green.jclasses.size(); ++j) {
    Json c;
    c["size"] = static_cast<int>(green.jclasses[j].size());
    c["regular"] = static_cast<bool>(green.regular_j[j]);
    Json members = Json::array();
    for (int a : green.jclasses[j]) {
      members.push_back(s.labels[a]);
    }
    c["elements"] = std::move(members);
    classes.push_back(std::move(c));
  }
  verdicts["jclasses"] = std::move(classes);
  verdicts["lclasses"] = static_cast<int>(green.lclasses.size());
  verdicts["rclasses"] = static_cast<int>(green.rclasses.size());
  Json chain = Json::array();
  for (const auto& ideal : series.ideals) {
    chain.push_back(static_cast<int>(ideal.size()));
  }
  verdicts["principal_series_sizes"] = std::move(chain);
  verdicts["regular"] = is_regular_semigroup(s);
  verdicts["is_inverse"] = brute.is_inverse;
  verdicts["semisimple"] = is_semisimple_algebra(s);
  return verdicts;
}

Json cmd_is_inverse(const Options& opt, const SgtFile& input) {
  const SemigroupTable& s = input.table;
  const GreenStructure green = green_structure(s);
  DecisionOptions dopts;
  dopts.seed = opt.seed;
  dopts.eps = opt.eps;
  dopts.check_oracle = !opt.no_oracle;
  if (!is_regular_semigroup(s)) {
    // Not covered by the theorem; not regular already settles the answer.
    Json verdicts;
    verdicts["regular"] = false;
    verdicts["is_inverse"] = false;
    verdicts["jclasses"] = Json::array();
    verdicts["oracle_checked"] = true;
    verdicts["oracle_agrees"] = !brute_force_is_inverse(s).is_inverse;
    return verdicts;
  }
  const InverseVerdict verdict = is_inverse_via_reps(s, green, dopts);
  Json verdicts = inverse_verdict_json(verdict, s);
  verdicts["regular"] = true;
  return verdicts;
}

Json cmd_involutions(const SgtFile& input) {
  const SemigroupTable& s = input.table;
  const GreenStructure green = green_structure(s);
  const auto involutions = enumerate_involutions(s, green);
  const auto survivor = inverse_inducing_involution(s, green);
  Json verdicts;
  verdicts["count"] = static_cast<int>(involutions.size());
  Json list = Json::array();
  for (const auto& inv : involutions) {
    Json map = Json::array();
    for (int a = 0; a < s.n; ++a) {
      map.push_back(inv.map[a] + 1);
    }
    list.push_back(std::move(map));
  }
  verdicts["involutions"] = std::move(list);
  verdicts["inverse_inducing"] = survivor.has_value() ? 1 : 0;
  if (survivor) {
    Json map = Json::array();
    for (int a = 0; a < s.n; ++a) {
      map.push_back(survivor->map[a] + 1);
    }
    verdicts["inverse_map"] = std::move(map);
  } else {
    verdicts["inverse_map"] = nullptr;
  }
  return verdicts;
}

Json cmd_rees(const SgtFile& input) {
  const SemigroupTable& s = input.table;
  const GreenStructure green = green_structure(s);
  Json classes = Json::array();
  for (int j = 0; j < static_cast<int>(green.jclasses.size()); ++j) {
    if (!green.regular_j[j]) {
      Json c;
      c["jclass"] = j;
      c["regular"] = false;
      classes.push_back(std::move(c));
      continue;
    }
    ReesCoordinatization coord = coordinatize_jclass(s, green, j);
    const bool normalized = normalize_sandwich_to_identity(s, green, coord);
    Json c = coordinatization_json(s, coord, normalized);
    c["regular"] = true;
    classes.push_back(std::move(c));
  }
  Json verdicts;
  verdicts["jclasses"] = std::move(classes);
  return verdicts;
}

Json cmd_reps(const Options& opt, const SgtFile& input) {
  const SemigroupTable& s = input.table;
  const GreenStructure green = green_structure(s);
  Json classes = Json::array();
  for (int j = 0; j < static_cast<int>(green.jclasses.size()); ++j) {
    if (!green.regular_j[j]) {
      continue;
    }
    ReesCoordinatization coord = coordinatize_jclass(s, green, j);
    const bool normalized = normalize_sandwich_to_identity(s, green, coord);
    const GroupRep sigma =
        direct_sum(irreducible_unitary_reps(coord.group, opt.seed));
    const MatrixRep left =
        schutzenberger_rep(s, green, coord, sigma, Side::Left);
    const MatrixRep right =
        schutzenberger_rep(s, green, coord, sigma, Side::Right);
    Json c;
    c["jclass"] = j;
    c["normalized"] = normalized;
    c["left_dim"] = left.dim;
    c["right_dim"] = right.dim;
    Json elems = Json::array();
    for (int a = 0; a < s.n; ++a) {
      Json e;
      e["element"] = s.labels[a];
      e["left_preunitary"] = is_preunitary(left.images[a], opt.eps).all();
      e["right_preunitary"] = is_preunitary(right.images[a], opt.eps).all();
      elems.push_back(std::move(e));
    }
    c["elements"] = std::move(elems);
    classes.push_back(std::move(c));
  }
  Json verdicts;
  verdicts["jclasses"] = std::move(classes);
  return verdicts;
}

Json cmd_star_check(const Options& opt, const SgtFile& input) {
  const SemigroupTable& s = input.table;
  if (!input.involution) {
    throw ParseError("star-check needs an 'involution' line in the input");
  }
  const GreenStructure green = green_structure(s);
  DecisionOptions dopts;
  dopts.seed = opt.seed;
  dopts.eps = opt.eps;
  const StarVerdict verdict =
      star_representable_all(s, green, *input.involution, dopts);
  return star_verdict_json(verdict);
}

Json cmd_corpus(const Options& opt) {
  Json verdicts;

  // Exhaustive Rees sweep, m, n <= 2 over the trivial group and C2.
  const std::vector<GroupData> groups = {trivial_group(), cyclic_group(2)};
  int instances = 0, inverse_count = 0;
  DecisionOptions dopts;
  dopts.seed = opt.seed;
  dopts.eps = opt.eps;
  dopts.check_oracle = !opt.no_oracle;
  rees_sweep(2, groups, [&](const ReesSweepCase& c) {
    const ReesSemigroup r = build_rees(c.m, c.n, *c.group, c.sandwich);
    const GreenStructure green = green_structure(r.table);
    const InverseVerdict v = is_inverse_via_reps(r.table, green, dopts);
    ++instances;
    inverse_count += v.is_inverse;
    if (v.is_inverse != rees_is_inverse(r)) {
      throw OracleMismatch("Rees sandwich criterion disagrees");
    }
  });
  verdicts["rees_sweep"] = {{"instances", instances},
                            {"inverse", inverse_count},
                            {"oracle_mismatches", 0}};

  // All multiplication tables of small order.
  Json orders = Json::array();
  for (int n = 1; n <= opt.max_order; ++n) {
    int tables = 0, regular = 0, inverse = 0, semisimple = 0;
    for_each_semigroup(n, [&](const std::vector<std::vector<int>>& mul) {
      const SemigroupTable s = validate_table(mul);
      ++tables;
      regular += is_regular_semigroup(s);
      inverse += brute_force_is_inverse(s).is_inverse;
      semisimple += is_semisimple_algebra(s);
    });
    orders.push_back({{"order", n},
                      {"tables", tables},
                      {"regular", regular},
                      {"inverse", inverse},
                      {"semisimple", semisimple}});
  }
  verdicts["small_order"] = std::move(orders);
  return verdicts;
}

void print_text(const std::string& command, const Json& report,
                double wall_ms) {
  const Json& v = report["verdicts"];
  std::cout << "semistar " << command;
  if (report.contains("input")) {
    std::cout << " " << report["input"]["path"].get<std::string>();
  }
  std::cout << "\n";
  if (command == "analyze") {
    std::cout << "  order " << v["order"] << ", " << v["jclasses"].size()
              << " J-class(es), " << v["idempotents"] << " idempotent(s)\n";
    std::cout << "  regular: " << v["regular"] << ", inverse: "
              << v["is_inverse"] << ", semisimple: " << v["semisimple"]
              << "\n";
  } else if (command == "is-inverse") {
    std::cout << "  is_inverse: " << v["is_inverse"] << ", oracle_agrees: "
              << v["oracle_agrees"] << "\n";
    for (const auto& j : v["jclasses"]) {
      std::cout << "  class size " << j["size"] << " |G|="
                << j["group_order"] << " semiunitary: " << j["semiunitary"];
      if (!j["failing_element"].is_null()) {
        std::cout << " failing at " << j["failing_element"];
      }
      std::cout << "\n";
    }
  } else if (command == "involutions") {
    std::cout << "  " << v["count"] << " involution(s), "
              << v["inverse_inducing"] << " inverse-inducing\n";
    if (!v["inverse_map"].is_null()) {
      std::cout << "  inverse map: " << v["inverse_map"].dump() << "\n";
    }
  } else if (command == "star-check") {
    std::cout << "  semisimple: " << v["semisimple"]
              << ", star_representable: " << v["star_representable"] << "\n";
    for (const auto& r : v["irreps"]) {
      std::cout << "  irrep dim " << r["dim"] << " matches: "
                << r["contragredient_matches"] << " *-form: "
                << r["star_form_built"] << "\n";
    }
  } else {
    std::cout << v.dump(2) << "\n";
  }
  std::cout << "  wall time: " << wall_ms << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup representation analysis"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit a machine-readable report");
  app.add_option("--seed", opt.seed, "RNG seed recorded in the report");
  app.add_option("--eps", opt.eps, "numerical tolerance");
  app.add_option("--max-order", opt.max_order,
                 "largest order for corpus sweeps");
  app.add_flag("--no-oracle", opt.no_oracle,
               "skip brute-force cross-checks");

  const std::vector<std::string> file_commands = {
      "analyze", "is-inverse", "involutions", "rees", "reps", "star-check"};
  for (const auto& name : file_commands) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    sub->add_option("input", opt.path, "input .sgt file")->required();
  }
  app.add_subcommand("corpus")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    Json verdicts;
    std::string digest;
    if (command == "corpus") {
      verdicts = cmd_corpus(opt);
    } else {
      const LoadedInput loaded = load(opt);
      digest = loaded.digest;
      if (command == "analyze") {
        verdicts = cmd_analyze(loaded.file);
      } else if (command == "is-inverse") {
        verdicts = cmd_is_inverse(opt, loaded.file);
      } else if (command == "involutions") {
        verdicts = cmd_involutions(loaded.file);
      } else if (command == "rees") {
        verdicts = cmd_rees(loaded.file);
      } else if (command == "reps") {
        verdicts = cmd_reps(opt, loaded.file);
      } else if (command == "star-check") {
        verdicts = cmd_star_check(opt, loaded.file);
      }
    }
    Json report = report_envelope(command, opt, digest);
    report["verdicts"] = std::move(verdicts);
    const double wall_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
    if (opt.json) {
      std::cout << report.dump(2) << "\n";
    } else {
      print_text(command, report, wall_ms);
    }
    return 0;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
