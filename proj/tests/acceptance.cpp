// One line per acceptance criterion. Experiments are read back from their
// JSON-lines records.
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "core/bottleneck.hpp"
#include "core/error.hpp"
#include "core/experiments.hpp"
#include "core/generators.hpp"
#include "core/isomorphism.hpp"
#include "core/paths.hpp"
#include "core/persistence.hpp"

using namespace reeb;
using Json = nlohmann::json;

namespace {

int failed = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("criterion %d: %s  %s  [%s]\n", id, pass ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failed;
}

struct Tally {
  std::size_t trials = 0, passed = 0;
  Json summary;
  std::vector<Json> failures;
};

Tally run(const std::string& name, unsigned trials = 0) {
  ExperimentConfig c;
  c.trials = trials;
  std::istringstream in(format_report_records(run_experiment(name, c)));
  Tally t;
  std::string line;
  while (std::getline(in, line)) {
    Json rec = Json::parse(line);
    if (rec.value("summary", false)) {
      t.summary = rec;
      continue;
    }
    ++t.trials;
    if (rec["pass"] == true) ++t.passed;
    else t.failures.push_back(rec);
  }
  return t;
}

std::string ratio(const Tally& t) {
  std::string s = std::to_string(t.passed) + "/" + std::to_string(t.trials);
  if (!t.failures.empty()) s += "; first failure " + t.failures.front().dump();
  return s;
}

void guarded(int id, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, what, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  guarded(1, "matrix reduction equals union-find; Ext0 = (min, max); #Ext1 = E-V+1 (exact)", [] {
    std::size_t agree = 0;
    const std::size_t n = 100;
    for (std::uint64_t seed = 1; seed <= n; ++seed) {
      ReebGraph g = make_random({.seed = 1000 + seed, .critical = 3 + static_cast<unsigned>(seed % 6)});
      Diagram d = reduce_extended_filtration(g);
      auto cv = critical_values(g);
      bool ok = d.of_kind(PointKind::Ord0) == ord0_unionfind(g) && d.of_kind(PointKind::Rel1) == rel1_unionfind(g) &&
                d.of_kind(PointKind::Ext0) == std::vector{DiagramPoint{PointKind::Ext0, cv.front(), cv.back()}} &&
                d.count(PointKind::Ext1) == g.edge_count() - g.vertex_count() + 1;
      if (ok) ++agree;
    }
    report(1, agree == n, "matrix reduction equals union-find; Ext0 = (min, max); #Ext1 = E-V+1 (exact)",
           std::to_string(agree) + "/" + std::to_string(n) + " graphs");
  });

  guarded(2, "stability: d_B <= jitter bound (exact)", [] {
    Tally t = run("stability", 200);
    report(2, t.trials == 200 && t.passed == 200, "stability: d_B <= jitter bound (exact)", ratio(t));
  });

  guarded(3, "snapping: Dg(merge) = snap(Dg) (exact multiset equality)", [] {
    Tally t = run("snapping", 100);
    report(3, t.trials == 100 && t.passed == 100, "snapping: Dg(merge) = snap(Dg) (exact multiset equality)",
           ratio(t));
  });

  guarded(4, "simplification: diagonal clear of alpha/2, d_B <= 4 alpha, certificate <= 2 alpha (exact)", [] {
    Tally t = run("simplify-contract", 100);
    report(4, t.trials == 100 && t.passed == 100,
           "simplification: diagonal clear of alpha/2, d_B <= 4 alpha, certificate <= 2 alpha (exact)", ratio(t));
  });

  guarded(5, "recovery: full transform is level-isomorphic to R_f when d_B < K eps, K = 1/22", [] {
    Tally t = run("recovery", 50);
    std::string detail = ratio(t) + "; hypothesis met in " + t.summary["hypothesis_met"].dump() + " trials";
    report(5, t.trials == 50 && t.passed == 50,
           "recovery: full transform is level-isomorphic to R_f when d_B < K eps, K = 1/22", detail);
  });

  guarded(6, "figure 1: equal diagrams, d_B = 0, not isomorphic, finite positive intrinsic bound", [] {
    ReebGraph l = make_figure1_left(), r = make_figure1_right();
    bool equal = diagram_equal(extended_diagram(l), extended_diagram(r));
    Rational db = graph_bottleneck(l, r);
    bool iso = is_level_isomorphic(l, r);
    IntrinsicBound b = intrinsic_upper(l, r);
    Tally t = run("figure1");
    bool pass = equal && db == 0 && !iso && b.value > 0 && t.passed == t.trials && t.trials == 1;
    report(6, pass, "figure 1: equal diagrams, d_B = 0, not isomorphic, finite positive intrinsic bound",
           "diagrams_equal=" + std::string(equal ? "true" : "false") + " d_B=" + format_rational(db) +
               " isomorphic=" + (iso ? "true" : "false") + " intrinsic_upper=" + format_rational(b.value) + " (" +
               b.route + ")");
  });

  guarded(7, "lower bound: d_B <= 2U for every certified upper bound U (exact)", [] {
    Tally t = run("lowerbound-consistency");
    report(7, t.trials == 109 && t.passed == t.trials, "lower bound: d_B <= 2U for every certified upper bound U (exact)",
           ratio(t) + " (9 built-in pairs + 100 random)");
  });

  guarded(8, "path equivalence: summed d_B monotone under refinement, per-segment d_B <= 2 cert (exact)", [] {
    Tally t = run("path-equivalence");
    report(8, t.trials >= 2 && t.passed == t.trials,
           "path equivalence: summed d_B monotone under refinement, per-segment d_B <= 2 cert (exact)",
           ratio(t) + " paths, n in {2,4,8,16}");
  });

  guarded(9, "figure 5: n+2 critical values, d_B decreasing and bounded by feature heights", [] {
    Tally t = run("figure5");
    report(9, t.trials == 8 && t.passed == 8,
           "figure 5: n+2 critical values, d_B decreasing and bounded by feature heights", ratio(t) + " for n = 1..8");
  });

  std::printf("%s\n", failed ? "acceptance: FAILED" : "acceptance: all criteria passed");
  return failed ? 1 : 0;
}
