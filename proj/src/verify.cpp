#include "ornlat/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "ornlat/fixtures.hpp"
#include "ornlat/intreeval.hpp"
#include "ornlat/polytope.hpp"
#include "ornlat/reorient.hpp"
#include "ornlat/sourcing.hpp"

namespace ornlat {

namespace {

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

std::string tree_label(const Digraph& t) {
  std::ostringstream os;
  os << "n=" << t.n() << " edges=";
  for (auto [u, v] : t.edges()) os << u << v << " ";
  return os.str();
}

int worker_count() {
  if (const char* env = std::getenv("ORNLAT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

// Per-tree checks run on a small worker pool; slots keep the output order
// independent of completion order. Every library operation is pure, so the
// workers share nothing mutable.
template <typename F>
VerificationReport sweep_trees(const std::string& suite, int max_n, bool dedup, F per_tree) {
  std::vector<Digraph> trees;
  for (int n = 1; n <= max_n; ++n)
    for (auto& t : dedup ? fixtures::increasing_trees_up_to_iso(n) : fixtures::increasing_trees(n))
      trees.push_back(t);
  std::vector<std::vector<CheckRecord>> slots(trees.size());
  int workers = std::min<int>(worker_count(), std::max<std::size_t>(trees.size(), 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < trees.size(); ++i) slots[i] = per_tree(trees[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next.fetch_add(1); i < trees.size(); i = next.fetch_add(1))
            slots[i] = per_tree(trees[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  VerificationReport report;
  report.suite = suite;
  for (auto& slot : slots)
    for (auto& rec : slot) report.add(std::move(rec));
  return report;
}

}  // namespace

VerificationReport verify_macneille(int max_n) {
  return sweep_trees("macneille", max_n, true, [](const Digraph& t) {
    std::vector<CheckRecord> out;
    Stopwatch watch;
    CheckRecord rec{"rbi_completes_areori", tree_label(t), true, "", 0};
    Digraph closure = transitive_closure(t);
    auto completion = macneille_completion(areori_poset(closure));
    if (!poset_isomorphic(completion.lattice, rbi_poset(closure))) {
      rec.passed = false;
      rec.witness = "completion of AReori is not Rbi";
    }
    rec.wall_ms = watch.ms();
    out.push_back(rec);

    Stopwatch watch2;
    CheckRecord rec2{"orn_completes_asour", tree_label(t), true, "", 0};
    auto completion2 = macneille_completion(asour_poset(path_hypergraph(t)));
    if (!poset_isomorphic(completion2.lattice, orn_poset(t))) {
      rec2.passed = false;
      rec2.witness = "completion of ASour is not Orn";
    }
    rec2.wall_ms = watch2.ms();
    out.push_back(rec2);
    return out;
  });
}

VerificationReport verify_quotient(int max_n) {
  return sweep_trees("quotient", max_n, true, [](const Digraph& t) {
    std::vector<CheckRecord> out;
    if (classify_tree(t).starred) return out;
    Stopwatch watch;
    CheckRecord rec{"orn_lattice_map", tree_label(t), true, "", 0};
    auto quotient = quotient_check_unstarred(t);
    if (!quotient.passed) {
      rec.passed = false;
      rec.witness = quotient.failure;
    }
    rec.wall_ms = watch.ms();
    out.push_back(rec);

    Stopwatch watch2;
    CheckRecord rec2{"all_ornamentations_acyclic", tree_label(t), true, "", 0};
    auto all = enumerate_ornamentations(t);
    auto acyclic = acyclic_ornamentations(t);
    if (all.size() != acyclic.size()) {
      rec2.passed = false;
      rec2.witness = std::to_string(all.size() - acyclic.size()) + " cyclic ornamentations";
    }
    // the unstarred short-circuit must agree with the permutation-image route
    Digraph closure = transitive_closure(t);
    std::set<Ornamentation> images;
    for (EdgeMask m : enumerate_acyclic_reorientations(closure))
      images.insert(orn_of_reorientation(t, {closure, m}));
    if (images.size() != acyclic.size()) {
      rec2.passed = false;
      rec2.witness = "acyclic image mismatch";
    }
    rec2.wall_ms = watch2.ms();
    out.push_back(rec2);
    return out;
  });
}

VerificationReport verify_intreeval(int max_n, std::size_t sample, std::uint64_t seed) {
  return sweep_trees("intreeval", max_n, false, [=](const Digraph& t) {
    Stopwatch watch;
    CheckRecord rec{"lattice_characterization", tree_label(t), true, "", 0};
    std::size_t effective_sample = 0;
    if (path_hypergraph(t).size() > 16) {
      if (sample == 0) throw SizeGuardError("verify_intreeval: needs a sample for this size");
      effective_sample = sample;
    }
    auto check = characterization_check(t, effective_sample, seed);
    if (!check.passed) {
      rec.passed = false;
      rec.witness = check.discrepancies.empty() ? "discrepancy" : check.discrepancies.front();
    }
    std::ostringstream os;
    os << check.hypergraphs << " hypergraphs, " << check.lattices << " lattices"
       << (check.sampled ? " (sampled)" : "");
    rec.instance = tree_label(t) + "| " + os.str();
    rec.wall_ms = watch.ms();
    return std::vector<CheckRecord>{rec};
  });
}

VerificationReport verify_realization(int max_n) {
  return sweep_trees("realization", max_n, true, [](const Digraph& t) {
    Stopwatch watch;
    CheckRecord rec{"polytopal_realization", tree_label(t), true, "", 0};
    auto check = realization_check(t);
    if (!check.passed) {
      rec.passed = false;
      rec.witness = check.failures.front();
    }
    rec.wall_ms = watch.ms();
    return std::vector<CheckRecord>{rec};
  });
}

VerificationReport verify_starred(int max_n) {
  return sweep_trees("starred", max_n, true, [](const Digraph& t) {
    Stopwatch watch;
    CheckRecord rec{"eight_equivalent_conditions", tree_label(t), true, "", 0};
    Digraph closure = transitive_closure(t);

    bool alternating = has_induced_alternating_cycle(closure);
    bool bowtie = has_bowtie_configuration(closure);
    bool starred = classify_tree(t).starred;
    bool biclosed_cyclic = false;
    for (EdgeMask m : enumerate_closure_masks(closure, true, true))
      if (!is_acyclic_reorientation({closure, m})) {
        biclosed_cyclic = true;
        break;
      }
    bool cyclic_orn = enumerate_ornamentations(t).size() != acyclic_ornamentations(t).size();
    bool areori_not_lattice = !areori_is_lattice(closure);
    bool asour_not_lattice = !asour_poset(path_hypergraph(t)).is_lattice();
    bool aorn_not_lattice = !aorn_poset(t).is_lattice();

    bool conditions[8] = {alternating,       bowtie,     starred,
                          biclosed_cyclic,   cyclic_orn, areori_not_lattice,
                          asour_not_lattice, aorn_not_lattice};
    for (int i = 1; i < 8; ++i)
      if (conditions[i] != conditions[0]) {
        rec.passed = false;
        rec.witness = "condition " + std::to_string(i + 1) + " disagrees with condition 1";
        break;
      }
    rec.wall_ms = watch.ms();
    return std::vector<CheckRecord>{rec};
  });
}

VerificationReport verify_semidistributivity(int max_n) {
  return sweep_trees("semidistributivity", max_n, true, [](const Digraph& t) {
    Stopwatch watch;
    CheckRecord rec{"orn_semidistributive_irreducibles", tree_label(t), true, "", 0};
    FinitePoset orn = orn_poset(t);
    Digraph closure = transitive_closure(t);

    if (!orn.is_join_semidistributive() || !orn.is_meet_semidistributive()) {
      rec.passed = false;
      rec.witness = "ornamentation lattice is not semidistributive";
    } else {
      // irreducibles are exactly the J_P / M_P over directed paths P
      std::set<std::string> jp_keys, mp_keys;
      for (auto [u, v] : closure.edges()) {
        auto path = tree_order(t, u, v).path;
        jp_keys.insert(orn_key(jp(t, path)));
        mp_keys.insert(orn_key(mp(t, path)));
      }
      std::set<std::string> ji, mi;
      for (int i : orn.join_irreducibles()) ji.insert(orn.key(i));
      for (int i : orn.meet_irreducibles()) mi.insert(orn.key(i));
      if (ji != jp_keys) {
        rec.passed = false;
        rec.witness = "join irreducibles differ from {J_P}";
      } else if (mi != mp_keys) {
        rec.passed = false;
        rec.witness = "meet irreducibles differ from {M_P}";
      } else {
        for (auto [u, v] : closure.edges()) {
          auto path = tree_order(t, u, v).path;
          int j = orn.index_of(orn_key(jp(t, path)));
          int m = orn.index_of(orn_key(mp(t, path)));
          if (orn.kappa_join(m) != j || orn.kappa_meet(j) != m) {
            rec.passed = false;
            rec.witness = "kappa maps are not mutually inverse on path " + std::to_string(u) +
                          "->" + std::to_string(v);
            break;
          }
        }
      }
    }
    rec.wall_ms = watch.ms();
    return std::vector<CheckRecord>{rec};
  });
}

VerificationReport verify_all(int max_n, std::uint64_t seed) {
  VerificationReport report;
  report.suite = "all";
  report.merge(verify_macneille(std::min(max_n, 5)));
  report.merge(verify_quotient(max_n));
  report.merge(verify_intreeval(std::min(max_n, 5), 0, seed));
  report.merge(verify_realization(std::min(max_n, 4)));
  return report;
}

}  // namespace ornlat
