#include "core/experiments.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "core/bottleneck.hpp"
#include "core/distortion.hpp"
#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/isomorphism.hpp"
#include "core/operators.hpp"
#include "core/paths.hpp"
#include "core/persistence.hpp"

namespace reeb {

namespace {

using Json = nlohmann::ordered_json;

std::string str(const Rational& r) { return format_rational(r); }

std::mt19937_64 trial_rng(std::string_view name, std::uint64_t seed, std::size_t trial) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a, stable across platforms
  for (char ch : name) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

ReebGraph random_graph(std::mt19937_64& rng, const ExperimentConfig& c) {
  RandomGraphOptions opt;
  opt.critical = std::uniform_int_distribution<unsigned>(c.min_critical, c.max_critical)(rng);
  opt.lo = c.lo;
  opt.hi = c.hi;
  opt.max_extra_edges = c.max_extra_edges;
  return make_random(rng, opt);
}

std::vector<Rational> values_of(const ReebGraph& g) {
  std::vector<Rational> v;
  for (const Vertex& x : g.vertices()) v.push_back(x.value);
  return v;
}

Rational sup_shift(const ReebGraph& g, const std::vector<Rational>& values) {
  Rational d = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) d = std::max(d, abs_diff(g.value(v), values[v]));
  return d;
}

// Random positive multiple of `scale` / 64, at most `scale`.
Rational random_fraction(std::mt19937_64& rng, const Rational& scale) {
  Rational r = scale * Rational(std::uniform_int_distribution<int>(1, 64)(rng), 64);
  r.canonicalize();
  return r;
}

using TrialFn = std::function<TrialRecord(std::mt19937_64&, const ExperimentConfig&, std::size_t)>;

TrialRecord stability_trial(std::mt19937_64& rng, const ExperimentConfig& c, std::size_t) {
  ReebGraph g = random_graph(rng, c);
  Rational delta = random_fraction(rng, min_critical_gap(g) / 2);
  std::vector<Rational> moved = jitter_values(rng, g, delta);
  Rational db = graph_bottleneck(g, g.with_values(moved));
  TrialRecord t;
  t.pass = db <= delta;
  t.data = {{"vertices", g.vertex_count()}, {"delta", str(delta)}, {"shift", str(sup_shift(g, moved))}, {"d_B", str(db)}};
  return t;
}

TrialRecord snapping_trial(std::mt19937_64& rng, const ExperimentConfig& c, std::size_t) {
  ReebGraph g = random_graph(rng, c);
  auto endpoint = [&]() {
    if (std::bernoulli_distribution(1.0 / 3)(rng))
      return g.value(std::uniform_int_distribution<VertexIndex>(0, g.vertex_count() - 1)(rng));
    return random_grid_value(rng, c.lo - 1, c.hi + 1, 48);
  };
  Rational a = endpoint(), b = endpoint();
  if (a > b) std::swap(a, b);
  Diagram merged = extended_diagram(merge(g, a, b));
  Diagram snapped = snap_diagram(extended_diagram(g), a, b);
  TrialRecord t;
  t.pass = diagram_equal(merged, snapped);
  t.data = {{"vertices", g.vertex_count()}, {"a", str(a)}, {"b", str(b)}, {"points", snapped.size()}};
  if (!t.pass) t.data["merged"] = format_diagram(merged), t.data["snapped"] = format_diagram(snapped);
  return t;
}

TrialRecord simplify_trial(std::mt19937_64& rng, const ExperimentConfig& c, std::size_t) {
  ReebGraph g = random_graph(rng, c);
  Rational alpha = random_fraction(rng, (c.hi - c.lo) / 4);
  SimplifyResult s = simplify_tracked(g, alpha);
  Diagram d = extended_diagram(s.graph);
  bool clear = true;
  for (const DiagramPoint& p : d.points())
    if (p.kind != PointKind::Ext0 && diagonal_distance(p) <= alpha / 2) clear = false;
  Rational db = graph_bottleneck(g, s.graph);
  TrialRecord t;
  t.pass = clear && db <= 4 * alpha && s.certificate <= 2 * alpha;
  t.data = {{"vertices", g.vertex_count()}, {"alpha", str(alpha)}, {"moves", s.moves}, {"diagonal_clear", clear},
            {"d_B", str(db)}, {"certificate", str(s.certificate)}};
  return t;
}

TrialRecord recovery_trial(std::mt19937_64& rng, const ExperimentConfig& c, std::size_t) {
  ReebGraph f = random_graph(rng, c);
  Rational a_f = min_critical_gap(f);
  Rational eps = c.epsilon_fraction * a_f / (8 * (1 + 22 * c.K));
  Rational alpha = c.K * eps;
  // Mostly below K eps so that d_B < K eps is guaranteed; the rest probe larger jitter.
  Rational amplitude;
  if (std::bernoulli_distribution(0.75)(rng)) {
    amplitude = alpha * Rational(std::uniform_int_distribution<int>(1, 63)(rng), 64);
  } else {
    amplitude = eps / (1u << std::uniform_int_distribution<unsigned>(0, 7)(rng));
  }
  amplitude.canonicalize();
  ReebGraph g = f.with_values(jitter_values(rng, f, amplitude));
  Rational db = graph_bottleneck(f, g);
  TrialRecord t;
  t.data = {{"vertices", f.vertex_count()}, {"a_f", str(a_f)}, {"epsilon", str(eps)}, {"jitter", str(amplitude)},
            {"d_B", str(db)}, {"K_epsilon", str(alpha)}};
  if (!(db < alpha)) {
    t.pass = true;
    t.data["hypothesis"] = false;
    return t;
  }
  TransformResult r = full_transform(g, alpha, critical_values(f));
  t.pass = is_level_isomorphic(canonicalize(f), r.graph);
  t.data["hypothesis"] = true;
  t.data["recovered"] = t.pass;
  t.data["certificate"] = str(r.certificate);
  return t;
}

TrialRecord figure1_trial(std::mt19937_64&, const ExperimentConfig&, std::size_t) {
  ReebGraph left = make_figure1_left(), right = make_figure1_right();
  bool equal = diagram_equal(extended_diagram(left), extended_diagram(right));
  Rational db = graph_bottleneck(left, right);
  bool iso = is_level_isomorphic(left, right);
  IntrinsicBound bound = intrinsic_upper(left, right);
  TransformResult r = full_transform(right, Rational(1, 100), critical_values(left));
  bool transform_same_diagram = diagram_equal(extended_diagram(r.graph), extended_diagram(left));
  bool transform_iso = is_level_isomorphic(r.graph, left);
  TrialRecord t;
  t.pass = equal && db == 0 && !iso && bound.value > 0 && transform_same_diagram && !transform_iso;
  t.data = {{"diagrams_equal", equal},
            {"d_B", str(db)},
            {"isomorphic", iso},
            {"intrinsic_upper", str(bound.value)},
            {"route", bound.route},
            {"transform_diagram_equal", transform_same_diagram},
            {"transform_isomorphic", transform_iso}};
  return t;
}

TrialRecord figure5_trial(std::mt19937_64&, const ExperimentConfig&, std::size_t i) {
  unsigned n = static_cast<unsigned>(i) + 1;
  ReebGraph rn = make_figure5(n), next = make_figure5(n + 1);
  std::size_t count = critical_values(rn).size();
  Rational db = graph_bottleneck(rn, next);
  Rational height(1, mpz_class(1) << (n + 1));  // persistence of the branch R_{n+1} adds
  bool decreasing = true;
  if (n > 1) decreasing = db < graph_bottleneck(make_figure5(n - 1), rn);
  TrialRecord t;
  t.pass = count == n + 2 && db <= height && decreasing;
  t.data = {{"n", n}, {"critical_values", count}, {"d_B_next", str(db)}, {"feature_height", str(height)},
            {"decreasing", decreasing}};
  return t;
}

struct NamedPair {
  std::string name;
  ReebGraph a, b;
  std::string witness;  // natural, collapse or certify
};

std::vector<NamedPair> builtin_pairs() {
  std::vector<NamedPair> out{
      {"Y/Y-perturbed", make_y(), make_y(Rational(105, 100), Rational(195, 100)), "natural"},
      {"Y/segment", make_y(), make_segment(), "collapse"},
      {"cycle/segment", make_cycle(), make_segment(), "collapse"},
      {"Y/cycle", make_y(), make_cycle(), "certify"},
      {"figure1", make_figure1_left(), make_figure1_right(), "certify"},
  };
  for (unsigned n = 1; n <= 4; ++n)
    out.push_back({"figure5:" + std::to_string(n), make_figure5(n), make_figure5(n + 1), "certify"});
  return out;
}

TrialRecord bound_check(const ReebGraph& a, const ReebGraph& b, const std::string& witness) {
  Rational db = graph_bottleneck(a, b);
  TrialRecord t;
  Rational upper;
  if (witness == "certify") {
    upper = certify_fd(a, b);
  } else {
    Rational h = default_resolution(a, b);
    Correspondence c = witness == "natural" ? natural_correspondence(a, b, h) : collapse_correspondence(a, b, h);
    DistortionReport r = evaluate(a, b, c);
    upper = r.upper;
    t.data["sampled"] = str(r.sampled);
    t.data["remainder"] = str(r.remainder);
  }
  Rational lower = db / 2;
  t.pass = db <= 2 * upper && lower <= upper;
  t.data["witness"] = witness;
  t.data["d_B"] = str(db);
  t.data["fd_lower"] = str(lower);
  t.data["fd_upper"] = str(upper);
  return t;
}

TrialRecord lowerbound_trial(std::mt19937_64& rng, const ExperimentConfig& c, std::size_t i) {
  static const std::vector<NamedPair> builtins = builtin_pairs();
  if (i < builtins.size()) {
    TrialRecord t = bound_check(builtins[i].a, builtins[i].b, builtins[i].witness);
    t.data["pair"] = builtins[i].name;
    return t;
  }
  ReebGraph f = random_graph(rng, c);
  Rational delta = random_fraction(rng, min_critical_gap(f) / 2);
  ReebGraph g = f.with_values(jitter_values(rng, f, delta));
  TrialRecord t = bound_check(f, g, "natural");
  t.data["pair"] = "random";
  t.data["shift"] = str(sup_shift(f, values_of(g)));
  return t;
}

TrialRecord refinement_check(const std::function<GraphPath(unsigned)>& make) {
  TrialRecord t;
  t.pass = true;
  Rational previous = -1;
  Json sums = Json::array();
  for (unsigned n : {2u, 4u, 8u, 16u}) {
    GraphPath p = make(n);
    EquivalenceReport r = check_strong_equivalence(p);
    if (!r.ok) t.pass = false;
    if (r.total_bottleneck < previous) t.pass = false;
    previous = r.total_bottleneck;
    sums.push_back({{"n", n}, {"d_B_sum", str(r.total_bottleneck)}, {"fd_sum", str(r.total_certificate)},
                    {"segments_ok", r.ok}});
  }
  t.data["refinements"] = sums;
  return t;
}

TrialRecord path_trial(std::mt19937_64& rng, const ExperimentConfig& c, std::size_t i) {
  TrialRecord t;
  if (i == 0) {
    ReebGraph y = make_y();
    std::vector<Rational> target = values_of(make_y(Rational(105, 100), Rational(195, 100)));
    t = refinement_check([&](unsigned n) { return linear_path(y, target, n); });
    t.data["path"] = "linear Y";
  } else if (i == 1) {
    ReebGraph g = make_figure1_left();
    t = refinement_check([&](unsigned n) { return contraction_path(g, n); });
    t.data["path"] = "contraction figure1_left";
  } else if (i % 2 == 0) {
    ReebGraph g = random_graph(rng, c);
    Rational delta = random_fraction(rng, min_critical_gap(g) / 2);
    std::vector<Rational> target = jitter_values(rng, g, delta);
    t = refinement_check([&](unsigned n) { return linear_path(g, target, n); });
    t.data["path"] = "linear random";
  } else {
    ReebGraph g = random_graph(rng, c);
    t = refinement_check([&](unsigned n) { return contraction_path(g, n); });
    t.data["path"] = "contraction random";
  }
  return t;
}

struct Experiment {
  std::string name;
  unsigned default_trials;
  TrialFn trial;
};

const std::vector<Experiment>& experiments() {
  static const std::vector<Experiment> list{
      {"stability", 200, stability_trial},
      {"snapping", 100, snapping_trial},
      {"simplify-contract", 100, simplify_trial},
      {"recovery", 50, recovery_trial},
      {"figure1", 1, figure1_trial},
      {"figure5", 8, figure5_trial},
      {"lowerbound-consistency", static_cast<unsigned>(builtin_pairs().size()) + 100, lowerbound_trial},
      {"path-equivalence", 12, path_trial},
  };
  return list;
}

}  // namespace

void check_config(const ExperimentConfig& c) {
  if (!(c.K > 0 && c.K <= Rational(1, 22))) throw InvalidArgument("K must lie in (0, 1/22]");
  if (!(c.epsilon_fraction > 0 && c.epsilon_fraction < 1)) throw InvalidArgument("epsilon fraction must lie in (0, 1)");
  if (c.min_critical < 2 || c.min_critical > c.max_critical) throw InvalidArgument("bad critical value bounds");
  if (!(c.lo < c.hi)) throw InvalidArgument("value range needs lo < hi");
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const Experiment& e : experiments()) n.push_back(e.name);
    return n;
  }();
  return names;
}

ExperimentReport run_experiment(std::string_view name, const ExperimentConfig& config) {
  check_config(config);
  const Experiment* exp = nullptr;
  for (const Experiment& e : experiments())
    if (e.name == name) exp = &e;
  if (!exp) throw InvalidArgument("unknown experiment '" + std::string(name) + "'");

  ExperimentReport report;
  report.name = exp->name;
  unsigned trials = config.trials ? config.trials : exp->default_trials;
  // The fixed-size experiments cover their whole sequence regardless of --trials.
  if (name == "figure1" || name == "figure5") trials = exp->default_trials;
  std::size_t hypothesis = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng = trial_rng(name, config.seed, i);
    TrialRecord t;
    try {
      t = exp->trial(rng, config, i);
    } catch (const Error& e) {
      t.pass = false;
      t.data = {{"error", e.what()}};
    }
    t.index = i;
    if (t.pass) ++report.passed;
    if (t.data.contains("hypothesis") && t.data["hypothesis"] == true) ++hypothesis;
    report.trials.push_back(std::move(t));
  }
  report.summary = {{"seed", config.seed}, {"trials", report.trials.size()}, {"passed", report.passed}};
  if (name == "recovery") {
    report.summary["K"] = str(config.K);
    report.summary["epsilon_fraction"] = str(config.epsilon_fraction);
    report.summary["hypothesis_met"] = hypothesis;
  }
  return report;
}

std::string format_report_text(const ExperimentReport& r) {
  std::ostringstream out;
  for (const TrialRecord& t : r.trials) {
    out << r.name << " trial " << t.index << ": " << (t.pass ? "pass" : "FAIL");
    for (const auto& [key, value] : t.data.items()) {
      if (value.is_structured()) continue;
      out << ' ' << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    out << '\n';
  }
  out << r.name << ": " << r.passed << '/' << r.trials.size() << " passed";
  if (r.summary.contains("hypothesis_met"))
    out << " (" << r.summary["hypothesis_met"].get<std::size_t>() << " with d_B < K eps)";
  out << '\n';
  return out.str();
}

std::string format_report_records(const ExperimentReport& r) {
  std::ostringstream out;
  for (const TrialRecord& t : r.trials) {
    Json rec = {{"experiment", r.name}, {"trial", t.index}, {"pass", t.pass}};
    for (const auto& [key, value] : t.data.items()) rec[key] = value;
    out << rec.dump() << '\n';
  }
  Json summary = {{"experiment", r.name}, {"summary", true}, {"ok", r.ok()}};
  for (const auto& [key, value] : r.summary.items()) summary[key] = value;
  out << summary.dump() << '\n';
  return out.str();
}

}  // namespace reeb
