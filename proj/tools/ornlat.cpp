// Command-line front door: fixture catalog, poset construction, property
// checks, verification suites, DOT/JSON/CSV emission.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "ornlat/enumerate.hpp"
#include "ornlat/fixtures.hpp"
#include "ornlat/intreeval.hpp"
#include "ornlat/polytope.hpp"
#include "ornlat/reorient.hpp"
#include "ornlat/sourcing.hpp"
#include "ornlat/verify.hpp"

namespace {

using namespace ornlat;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kExitBadInput = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file: " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file: " + path);
  out << text;
}

Digraph load_digraph(const std::string& path) { return digraph_from_json(slurp(path)); }

// ORNLAT_GUARD overrides the default enumeration size guards;
// ORNLAT_THREADS sets the verification worker count (default 1).
std::size_t guard_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("ORNLAT_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return std::size_t(v);
  }
  return fallback;
}

IntreevalHypergraph load_intreeval(const std::string& path) {
  auto j = nlohmann::json::parse(slurp(path));
  Digraph tree = digraph_from_json(j.at("tree").dump());
  return make_intreeval(tree, j.at("hyperedges").get<std::vector<std::vector<int>>>());
}

FinitePoset build_poset(const std::string& kind, const Digraph& d) {
  if (kind == "orn") return orn_poset(d, guard_from_env(2'000'000));
  if (kind == "areori") return areori_poset(transitive_closure(d));
  if (kind == "asour") return asour_poset(path_hypergraph(d), guard_from_env(1'000'000));
  if (kind == "aorn") return aorn_poset(d);
  if (kind == "rbi") return rbi_poset(transitive_closure(d));
  throw Error("unknown poset kind: " + kind);
}

int run(int argc, char** argv) {
  CLI::App app{"ornlat: reorientation, sourcing, and ornamentation posets of digraphs"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct a poset from a digraph");
  std::string build_kind, build_input, build_dot, build_json;
  build->add_option("kind", build_kind, "orn|areori|asour|aorn|rbi")->required();
  build->add_option("--input", build_input, "digraph JSON file")->required();
  build->add_option("--dot", build_dot, "write the Hasse diagram as DOT");
  build->add_option("--json", build_json, "write the poset as JSON");

  // check
  auto* check = app.add_subcommand("check", "decide a structural property");
  std::string check_kind, check_input, check_poset = "orn";
  check->add_option("kind", check_kind, "lattice|semidistributive|unstarred|pic|star-sparse")
      ->required();
  check->add_option("--input", check_input, "digraph or intreeval JSON file")->required();
  check->add_option("--poset", check_poset, "poset for the lattice checks (default orn)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "broom and comb counts");
  std::string enum_family;
  int enum_m = 0, enum_n = 0;
  bool enum_bijections = false, enum_table = false;
  enumerate->add_option("family", enum_family, "broom|comb")->required();
  enumerate->add_option("--m", enum_m, "broom bristle count");
  enumerate->add_option("--n", enum_n, "path length / comb size")->required();
  enumerate->add_flag("--bijections", enum_bijections, "run the three-way comb bijections");
  enumerate->add_flag("--csv", enum_table, "emit the full count table as CSV");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite, verify_json;
  int verify_n = 4;
  std::size_t verify_sample = 0;
  std::uint64_t verify_seed = 0;
  verify->add_option("suite", verify_suite, "macneille|quotient|intreeval|realization|all")
      ->required();
  verify->add_option("--n", verify_n, "largest vertex count to sweep");
  verify->add_option("--sample", verify_sample, "sample size for large intreeval sweeps");
  verify->add_option("--seed", verify_seed, "seed for sampled sweeps");
  verify->add_option("--json", verify_json, "write the machine-readable report here");

  // polytope
  auto* polytope_cmd = app.add_subcommand("polytope", "hypergraphic polytope tooling");
  std::string polytope_action, polytope_input, polytope_dot, polytope_json;
  polytope_cmd->add_option("action", polytope_action, "skeleton")->required();
  polytope_cmd->add_option("--input", polytope_input, "hypergraph JSON file")->required();
  polytope_cmd->add_option("--dot", polytope_dot, "write the oriented skeleton as DOT");
  polytope_cmd->add_option("--json", polytope_json, "write the vertex cloud as JSON");

  // fixtures
  auto* fixtures_cmd = app.add_subcommand("fixtures", "pinned instance catalog");
  std::string fixtures_action, fixtures_name;
  fixtures_cmd->add_option("action", fixtures_action, "list|emit")->required();
  fixtures_cmd->add_option("name", fixtures_name, "fixture name for emit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (build->parsed()) {
    Digraph d = load_digraph(build_input);
    FinitePoset p = build_poset(build_kind, d);
    std::cout << build_kind << ": " << p.size() << " elements, " << p.covers().size()
              << " covers, lattice=" << (p.is_lattice() ? "yes" : "no") << "\n";
    if (!build_dot.empty()) spill(build_dot, p.to_dot());
    if (!build_json.empty()) spill(build_json, p.to_json());
    return 0;
  }

  if (check->parsed()) {
    if (check_kind == "lattice" || check_kind == "semidistributive") {
      Digraph d = load_digraph(check_input);
      FinitePoset p = build_poset(check_poset, d);
      if (check_kind == "lattice") {
        auto verdict = p.lattice_check();
        std::cout << (verdict.is_lattice ? "lattice" : "not a lattice");
        if (!verdict.is_lattice)
          std::cout << " (witness pair: '" << p.key(verdict.x) << "', '" << p.key(verdict.y)
                    << "')";
        std::cout << "\n";
        return verdict.is_lattice ? 0 : kExitCheckFailed;
      }
      bool sd = p.is_join_semidistributive() && p.is_meet_semidistributive();
      std::cout << (sd ? "semidistributive" : "not semidistributive") << "\n";
      return sd ? 0 : kExitCheckFailed;
    }
    if (check_kind == "unstarred") {
      Digraph d = load_digraph(check_input);
      auto verdict = classify_tree(d);
      if (verdict.starred)
        std::cout << "starred (witness u=" << verdict.witness.first
                  << ", v=" << verdict.witness.second << ")\n";
      else
        std::cout << "unstarred\n";
      return verdict.starred ? kExitCheckFailed : 0;
    }
    if (check_kind == "pic") {
      auto ii = load_intreeval(check_input);
      auto verdict = is_path_intersection_closed(ii);
      if (verdict.ok)
        std::cout << "path intersection closed\n";
      else
        std::cout << "not path intersection closed (hyperedges " << verdict.i << ", "
                  << verdict.j << ")\n";
      return verdict.ok ? 0 : kExitCheckFailed;
    }
    if (check_kind == "star-sparse") {
      auto ii = load_intreeval(check_input);
      auto verdict = is_star_sparse(ii);
      if (verdict.ok) {
        std::cout << "star sparse\n";
      } else {
        std::cout << "not star sparse at (u,v)=(" << verdict.u << "," << verdict.v
                  << "), cycle ";
        for (std::size_t i = 0; i < verdict.cycle.size(); ++i)
          std::cout << (i ? "," : "") << verdict.cycle[i];
        std::cout << "\n";
      }
      return verdict.ok ? 0 : kExitCheckFailed;
    }
    throw Error("unknown check kind: " + check_kind);
  }

  if (enumerate->parsed()) {
    if (enum_family == "broom") {
      if (enum_table) {
        std::cout << broom_table_csv(enum_m, enum_n);
      } else {
        std::cout << broom_count(enum_m, enum_n) << "\n";
      }
      return 0;
    }
    if (enum_family == "comb") {
      std::cout << comb_count(enum_n) << "\n";
      if (enum_bijections) {
        auto bij = comb_bijections(enum_n);
        std::cout << "ornamentations=" << bij.ornamentations
                  << " dyck_paths=" << bij.dyck_paths << " matchings=" << bij.matchings
                  << " roundtrips=" << (bij.passed ? "ok" : "FAILED") << "\n";
        return bij.passed ? 0 : kExitCheckFailed;
      }
      return 0;
    }
    throw Error("unknown family: " + enum_family);
  }

  if (verify->parsed()) {
    VerificationReport report;
    if (verify_suite == "macneille")
      report = verify_macneille(verify_n);
    else if (verify_suite == "quotient")
      report = verify_quotient(verify_n);
    else if (verify_suite == "intreeval")
      report = verify_intreeval(verify_n, verify_sample, verify_seed);
    else if (verify_suite == "realization")
      report = verify_realization(verify_n);
    else if (verify_suite == "all")
      report = verify_all(verify_n, verify_seed);
    else
      throw Error("unknown suite: " + verify_suite);
    std::cerr << report.summary();
    if (!verify_json.empty()) spill(verify_json, report.to_json());
    return report.passed() ? 0 : kExitCheckFailed;
  }

  if (polytope_cmd->parsed()) {
    if (polytope_action != "skeleton") throw Error("unknown polytope action: " + polytope_action);
    Hypergraph h = hypergraph_from_json(slurp(polytope_input));
    VertexCloud cloud = hypergraphic_vertices(h, guard_from_env(1'000'000));
    auto edges = skeleton(cloud.points);
    std::cout << "skeleton: " << cloud.points.size() << " vertices, " << edges.size()
              << " edges\n";
    if (!polytope_dot.empty()) spill(polytope_dot, oriented_skeleton_to_dot(h));
    if (!polytope_json.empty()) spill(polytope_json, point_cloud_to_json(cloud));
    return 0;
  }

  if (fixtures_cmd->parsed()) {
    if (fixtures_action == "list") {
      for (const auto& name : fixtures::names()) std::cout << name << "\n";
      return 0;
    }
    if (fixtures_action == "emit") {
      if (fixtures_name.empty()) throw Error("fixtures emit: missing name");
      std::cout << digraph_to_json(fixtures::by_name(fixtures_name)) << "\n";
      return 0;
    }
    throw Error("unknown fixtures action: " + fixtures_action);
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ornlat::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
