#include "core/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "core/error.hpp"

namespace reeb {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::size_t> component_labels(const ReebGraph& g, std::size_t& count) {
  DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) sets.unite(e.a, e.b);
  std::vector<std::size_t> label(g.vertex_count());
  std::unordered_map<std::size_t, std::size_t> root_label;
  count = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto [it, inserted] = root_label.emplace(sets.find(v), count);
    if (inserted) ++count;
    label[v] = it->second;
  }
  return label;
}

}  // namespace

ReebGraph::ReebGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, std::string name)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), name_(std::move(name)) {
  std::unordered_map<std::string_view, VertexIndex> seen;
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].id.empty()) throw InvalidGraph("vertex " + std::to_string(v) + " has an empty id");
    if (!seen.emplace(vertices_[v].id, v).second)
      throw InvalidGraph("duplicate vertex id '" + vertices_[v].id + "'");
  }
  incident_.resize(vertices_.size());
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.a >= vertices_.size() || edge.b >= vertices_.size())
      throw InvalidGraph("edge " + std::to_string(e) + " references a missing vertex");
    incident_[edge.a].push_back(e);
    if (edge.b != edge.a) incident_[edge.b].push_back(e);
  }
}

std::optional<VertexIndex> ReebGraph::find(std::string_view id) const {
  for (VertexIndex v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].id == id) return v;
  return std::nullopt;
}

VertexIndex ReebGraph::lower(EdgeIndex e) const {
  const Edge& edge = edges_[e];
  if (value(edge.a) < value(edge.b)) return edge.a;
  if (value(edge.b) < value(edge.a)) return edge.b;
  return std::min(edge.a, edge.b);
}

VertexIndex ReebGraph::upper(EdgeIndex e) const {
  const Edge& edge = edges_[e];
  return lower(e) == edge.a ? edge.b : edge.a;
}

std::size_t ReebGraph::down_degree(VertexIndex v) const {
  std::size_t n = 0;
  for (EdgeIndex e : incident_[v])
    if (value(other(e, v)) < value(v)) ++n;
  return n;
}

std::size_t ReebGraph::up_degree(VertexIndex v) const {
  std::size_t n = 0;
  for (EdgeIndex e : incident_[v])
    if (value(other(e, v)) > value(v)) ++n;
  return n;
}

bool ReebGraph::is_pass_through(VertexIndex v) const {
  return incident_[v].size() == 2 && down_degree(v) == 1 && up_degree(v) == 1;
}

bool ReebGraph::is_connected() const {
  if (vertices_.empty()) return false;
  std::size_t count = 0;
  component_labels(*this, count);
  return count == 1;
}

ReebGraph ReebGraph::with_values(std::vector<Rational> values) const {
  if (values.size() != vertices_.size()) throw InvalidArgument("value vector has the wrong size");
  std::vector<Vertex> vs = vertices_;
  for (VertexIndex v = 0; v < vs.size(); ++v) vs[v].value = std::move(values[v]);
  return ReebGraph(std::move(vs), edges_, name_);
}

ReebGraph ReebGraph::with_name(std::string name) const { return ReebGraph(vertices_, edges_, std::move(name)); }

Rational point_value(const ReebGraph& g, const GraphPoint& p) {
  if (p.is_vertex()) {
    if (p.index >= g.vertex_count()) throw InvalidArgument("point references a missing vertex");
    return g.value(p.index);
  }
  if (p.index >= g.edge_count()) throw InvalidArgument("point references a missing edge");
  const Rational& lo = g.value(g.lower(p.index));
  const Rational& hi = g.value(g.upper(p.index));
  if (p.value < lo || p.value > hi)
    throw InvalidArgument("point value " + format_rational(p.value) + " is outside its edge");
  return p.value;
}

GraphPoint normalize_point(const ReebGraph& g, const GraphPoint& p) {
  Rational v = point_value(g, p);
  if (p.is_vertex()) return p;
  if (v == g.value(g.lower(p.index))) return GraphPoint::at_vertex(g.lower(p.index));
  if (v == g.value(g.upper(p.index))) return GraphPoint::at_vertex(g.upper(p.index));
  return p;
}

std::string describe_point(const ReebGraph& g, const GraphPoint& p) {
  if (p.is_vertex()) return g.vertex(p.index).id;
  const Edge& e = g.edge(p.index);
  return g.vertex(e.a).id + "~" + g.vertex(e.b).id + "@" + format_rational(p.value);
}

std::string Violation::message() const {
  switch (kind) {
    case ViolationKind::Empty: return "empty graph";
    case ViolationKind::LevelEdge: return "level edge at " + location;
    case ViolationKind::PassThrough: return "pass-through vertex " + location;
    case ViolationKind::Disconnected: return "disconnected (" + location + ")";
  }
  return "unknown violation";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate(const ReebGraph& g) {
  ValidationReport report;
  if (g.empty()) {
    report.violations.push_back({ViolationKind::Empty, ""});
    return report;
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (g.value(edge.a) == g.value(edge.b))
      report.violations.push_back(
          {ViolationKind::LevelEdge, g.vertex(edge.a).id + "-" + g.vertex(edge.b).id});
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.is_pass_through(v)) report.violations.push_back({ViolationKind::PassThrough, g.vertex(v).id});
  std::size_t count = 0;
  component_labels(g, count);
  if (count > 1)
    report.violations.push_back({ViolationKind::Disconnected, std::to_string(count) + " components"});
  return report;
}

void require_valid(const ReebGraph& g, Requirements req) {
  for (const Violation& v : validate(g).violations) {
    if (v.kind == ViolationKind::PassThrough && req.allow_pass_through) continue;
    if (v.kind == ViolationKind::Disconnected && req.allow_disconnected) continue;
    throw InvalidGraph(v.message());
  }
}

CanonicalForm canonicalize_tracked(const ReebGraph& g) {
  {
    ValidationReport report = validate(g);
    for (const Violation& v : report.violations)
      if (v.kind == ViolationKind::Empty || v.kind == ViolationKind::LevelEdge) throw InvalidGraph(v.message());
  }
  const std::size_t n = g.vertex_count();
  std::vector<bool> removable(n);
  for (VertexIndex v = 0; v < n; ++v) removable[v] = g.is_pass_through(v);

  std::vector<VertexIndex> new_index(n, 0);
  std::vector<Vertex> vertices;
  for (VertexIndex v = 0; v < n; ++v) {
    if (removable[v]) continue;
    new_index[v] = vertices.size();
    vertices.push_back(g.vertex(v));
  }

  constexpr EdgeIndex unassigned = static_cast<EdgeIndex>(-1);
  std::vector<EdgeIndex> edge_image(g.edge_count(), unassigned);
  std::vector<Edge> edges;
  std::vector<std::vector<VertexIndex>> chain_vertices;  // removed vertices on each new edge

  // Walks from `v` away through edge `e` until a kept vertex is reached.
  auto walk = [&](EdgeIndex e, VertexIndex v, EdgeIndex target, std::vector<VertexIndex>& removed) {
    VertexIndex cur = g.other(e, v);
    while (removable[cur]) {
      removed.push_back(cur);
      auto inc = g.incident(cur);
      e = inc[0] == e ? inc[1] : inc[0];
      edge_image[e] = target;
      cur = g.other(e, cur);
    }
    return cur;
  };

  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (edge_image[e] != unassigned) continue;
    EdgeIndex target = edges.size();
    edge_image[e] = target;
    chain_vertices.emplace_back();
    const Edge& edge = g.edge(e);
    VertexIndex end_a = removable[edge.a] ? walk(e, edge.b, target, chain_vertices.back()) : edge.a;
    VertexIndex end_b = removable[edge.b] ? walk(e, edge.a, target, chain_vertices.back()) : edge.b;
    edges.push_back({new_index[end_a], new_index[end_b]});
  }

  CanonicalForm out;
  out.graph = ReebGraph(std::move(vertices), std::move(edges), g.name());
  out.vertex_image.resize(n);
  for (VertexIndex v = 0; v < n; ++v)
    if (!removable[v]) out.vertex_image[v] = GraphPoint::at_vertex(new_index[v]);
  for (EdgeIndex e = 0; e < chain_vertices.size(); ++e)
    for (VertexIndex v : chain_vertices[e]) out.vertex_image[v] = GraphPoint::on_edge(e, g.value(v));
  out.edge_image = std::move(edge_image);
  return out;
}

ReebGraph canonicalize(const ReebGraph& g) { return canonicalize_tracked(g).graph; }

std::vector<ReebGraph> split_components(const ReebGraph& g) {
  std::size_t count = 0;
  std::vector<std::size_t> label = component_labels(g, count);
  std::vector<std::vector<Vertex>> vertices(count);
  std::vector<std::vector<Edge>> edges(count);
  std::vector<VertexIndex> local(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    local[v] = vertices[label[v]].size();
    vertices[label[v]].push_back(g.vertex(v));
  }
  for (const Edge& e : g.edges()) edges[label[e.a]].push_back({local[e.a], local[e.b]});
  std::vector<ReebGraph> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::string name = g.name().empty() ? std::string{} : g.name() + "#" + std::to_string(c);
    out.emplace_back(std::move(vertices[c]), std::move(edges[c]), std::move(name));
  }
  return out;
}

std::vector<Rational> critical_values(const ReebGraph& g) {
  std::vector<Rational> values;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (!g.is_pass_through(v)) values.push_back(g.value(v));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

Rational min_critical_gap(const ReebGraph& g) {
  std::vector<Rational> values = critical_values(g);
  if (values.size() < 2) throw PreconditionFailed("minimal critical gap needs at least two critical values");
  Rational gap = values[1] - values[0];
  for (std::size_t i = 2; i < values.size(); ++i) gap = std::min<Rational>(gap, values[i] - values[i - 1]);
  return gap;
}

std::vector<ArcDescriptor> arcs_in_interval(const ReebGraph& g, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InvalidArgument("arcs_in_interval needs lo < hi");
  for (const Rational& c : critical_values(g))
    if (lo < c && c < hi)
      throw PreconditionFailed("interval (" + format_rational(lo) + ", " + format_rational(hi) +
                               ") contains critical value " + format_rational(c));
  // Every arc crosses the middle level exactly once.
  Rational mid = midpoint(lo, hi);
  std::vector<ArcDescriptor> arcs;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    VertexIndex l = g.lower(e);
    VertexIndex u = g.upper(e);
    if (g.value(l) < mid && mid < g.value(u)) arcs.push_back({e, l, u});
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.value(v) != mid) continue;
    for (EdgeIndex e : g.incident(v))
      if (g.lower(e) == v) {
        arcs.push_back({e, v, g.upper(e)});
        break;
      }
  }
  return arcs;
}

bool identical(const ReebGraph& a, const ReebGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (VertexIndex v = 0; v < a.vertex_count(); ++v)
    if (a.vertex(v).id != b.vertex(v).id || a.value(v) != b.value(v)) return false;
  for (EdgeIndex e = 0; e < a.edge_count(); ++e)
    if (a.edge(e).a != b.edge(e).a || a.edge(e).b != b.edge(e).b) return false;
  return true;
}

std::size_t first_betti_number(const ReebGraph& g) {
  std::size_t count = 0;
  component_labels(g, count);
  return g.edge_count() + count - g.vertex_count();
}

}  // namespace reeb
