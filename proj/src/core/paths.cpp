#include "core/paths.hpp"

#include <sstream>

#include "core/bottleneck.hpp"
#include "core/error.hpp"
#include "core/graph_io.hpp"
#include "core/isomorphism.hpp"
#include "core/leveled_space.hpp"
#include "core/operators.hpp"
#include "core/persistence.hpp"

namespace reeb {

void check_path(const GraphPath& p) {
  if (p.graphs.empty()) throw InvalidArgument("empty path");
  if (p.times.size() != p.graphs.size() || p.step_upper.size() + 1 != p.graphs.size())
    throw InvalidArgument("path arrays have inconsistent sizes");
  if (p.graphs.size() == 1) return;
  if (p.times.front() != 0 || p.times.back() != 1) throw InvalidArgument("path times must run from 0 to 1");
  for (std::size_t i = 1; i < p.times.size(); ++i)
    if (!(p.times[i - 1] < p.times[i])) throw InvalidArgument("path times must increase strictly");
}

PathLength path_length(const GraphPath& p, PathMetric metric) {
  check_path(p);
  PathLength out;
  out.total = 0;
  for (std::size_t i = 0; i + 1 < p.graphs.size(); ++i) {
    Rational d = metric == PathMetric::Bottleneck ? graph_bottleneck(p.graphs[i], p.graphs[i + 1]) : p.step_upper[i];
    out.total += d;
    out.steps.push_back(std::move(d));
  }
  return out;
}

namespace {

std::vector<Rational> lerp(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& t) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + t * (b[i] - a[i]);
    out[i].canonicalize();
  }
  return out;
}

Rational sup_distance(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, abs_diff(a[i], b[i]));
  return d;
}

void stamp_times(GraphPath& p) {
  const std::size_t steps = p.graphs.size() - 1;
  p.times.clear();
  for (std::size_t i = 0; i <= steps; ++i) {
    Rational t = steps == 0 ? Rational(0) : Rational(i, steps);
    t.canonicalize();
    p.times.push_back(t);
  }
}

// Splits the move from the snapshot `from` to the current function of `space`
// into n equal steps appended to `p`.
void append_deformation(GraphPath& p, const LeveledSpace& space, std::size_t from, unsigned n) {
  const std::vector<Rational>& start = space.snapshot_values(from);
  Rational step = sup_distance(start, space.current()) / n;
  for (unsigned i = 1; i <= n; ++i) {
    Rational t(i, n);
    t.canonicalize();
    p.graphs.push_back(space.quotient_of(lerp(start, space.current(), t)).graph);
    p.step_upper.push_back(step);
  }
}

}  // namespace

GraphPath linear_path(const ReebGraph& g, const std::vector<Rational>& target, unsigned n) {
  require_valid(g);
  if (n == 0) throw InvalidArgument("linear path needs n >= 1");
  if (target.size() != g.vertex_count()) throw InvalidArgument("target values do not match the vertex count");
  std::vector<Rational> start(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) start[v] = g.value(v);

  GraphPath p;
  p.graphs.push_back(g);
  Rational step = sup_distance(start, target) / n;
  for (unsigned i = 1; i <= n; ++i) {
    Rational t(i, n);
    t.canonicalize();
    std::vector<Rational> values = lerp(start, target, t);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      if (cmp(values[edge.a], values[edge.b]) != cmp(start[edge.a], start[edge.b])) {
        throw PreconditionFailed("linear path: edge " + g.vertex(edge.a).id + "-" + g.vertex(edge.b).id +
                                 " is no longer monotone at step " + std::to_string(i) + " of " + std::to_string(n));
      }
    }
    p.graphs.push_back(g.with_values(std::move(values)));
    p.step_upper.push_back(step);
  }
  stamp_times(p);
  return p;
}

namespace {

// Runs the contraction stages on `space`; each stage is reported to `stage`
// with the snapshot taken before it.
template <class StageFn>
std::size_t contract_stages(LeveledSpace& space, StageFn stage) {
  std::size_t stages = 0;
  while (true) {
    std::optional<Rational> alpha = smallest_feature(extended_diagram(space.graph()));
    if (!alpha) return stages;
    std::size_t snap = space.snapshot();
    if (simplify_space(space, *alpha) == 0) throw Error(ErrorCode::Internal, "contraction stage made no progress");
    ++stages;
    stage(snap);
  }
}

std::pair<Rational, Rational> value_range(const std::vector<Rational>& values) {
  Rational lo = values.front(), hi = values.front();
  for (const Rational& v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

}  // namespace

GraphPath contraction_path(const ReebGraph& g, unsigned n) {
  if (n == 0) throw InvalidArgument("contraction path needs n >= 1");
  LeveledSpace space(g);
  GraphPath p;
  p.graphs.push_back(space.graph());
  contract_stages(space, [&](std::size_t snap) { append_deformation(p, space, snap, n); });

  auto [lo, hi] = value_range(space.current());
  std::size_t snap = space.snapshot();
  space.set_current(std::vector<Rational>(space.vertex_count(), midpoint(lo, hi)));
  append_deformation(p, space, snap, n);
  stamp_times(p);
  return p;
}

ContractionSummary contract_to_segment(const ReebGraph& g) {
  LeveledSpace space(g);
  ContractionSummary s;
  s.length = 0;
  s.stages = contract_stages(space, [&](std::size_t snap) {
    s.length += sup_distance(space.snapshot_values(snap), space.current());
  });
  std::tie(s.lo, s.hi) = value_range(space.current());
  return s;
}

IntrinsicBound intrinsic_upper(const ReebGraph& g1, const ReebGraph& g2) {
  require_valid(g1);
  require_valid(g2);
  ReebGraph c1 = canonicalize(g1), c2 = canonicalize(g2);
  if (is_level_isomorphic(c1, c2)) return {Rational(0), "isomorphic"};

  ContractionSummary s1 = contract_to_segment(c1), s2 = contract_to_segment(c2);
  IntrinsicBound best{s1.length + std::max(abs_diff(s1.lo, s2.lo), abs_diff(s1.hi, s2.hi)) + s2.length, "join"};
  if (auto m = best_oriented_isomorphism(c1, c2); m && m->shift < best.value) best = {m->shift, "linear"};
  return best;
}

Rational certify_fd(const ReebGraph& g1, const ReebGraph& g2) { return intrinsic_upper(g1, g2).value; }

EquivalenceReport check_strong_equivalence(const GraphPath& p) {
  check_path(p);
  EquivalenceReport r;
  r.total_bottleneck = 0;
  r.total_certificate = 0;
  for (std::size_t i = 0; i + 1 < p.graphs.size(); ++i) {
    SegmentCheck s{graph_bottleneck(p.graphs[i], p.graphs[i + 1]), p.step_upper[i], false};
    s.ok = s.bottleneck <= 2 * s.certificate;
    r.ok = r.ok && s.ok;
    r.total_bottleneck += s.bottleneck;
    r.total_certificate += s.certificate;
    r.segments.push_back(std::move(s));
  }
  r.ok = r.ok && r.total_bottleneck <= 2 * r.total_certificate;
  return r;
}

GraphPath load_path_manifest(std::string_view text, const std::string& base_dir) {
  GraphPath p;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string t, file, extra;
    if (!(words >> t)) continue;
    if (!(words >> file) || (words >> extra)) throw ParseError(line_no, "expected '<t> <graph-file>'");
    try {
      p.times.push_back(parse_rational(t));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
    std::string path = !file.empty() && file[0] == '/' ? file : base_dir + "/" + file;
    p.graphs.push_back(load_graph(path));
  }
  for (std::size_t i = 0; i + 1 < p.graphs.size(); ++i) p.step_upper.push_back(certify_fd(p.graphs[i], p.graphs[i + 1]));
  check_path(p);
  return p;
}

}  // namespace reeb
