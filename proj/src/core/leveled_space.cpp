#include "core/leveled_space.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace reeb {

LeveledSpace::LeveledSpace(const ReebGraph& g) : name_(g.name()) {
  require_valid(g);
  for (const Vertex& v : g.vertices()) {
    ids_.push_back(v.id);
    id_set_.insert(v.id);
    original_.push_back(v.value);
  }
  current_ = original_;
  edges_.assign(g.edges().begin(), g.edges().end());
  incident_.resize(ids_.size());
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    incident_[edges_[e].a].push_back(e);
    incident_[edges_[e].b].push_back(e);
  }
}

void LeveledSpace::subdivide_at(Rational level) {
  const std::size_t count = edges_.size();
  for (EdgeIndex e = 0; e < count; ++e) {
    VertexIndex a = edges_[e].a, b = edges_[e].b;
    const Rational& ca = current_[a];
    const Rational& cb = current_[b];
    if (!((ca < level && level < cb) || (cb < level && level < ca))) continue;
    Rational t = (level - ca) / (cb - ca);
    Rational orig = original_[a] + t * (original_[b] - original_[a]);
    orig.canonicalize();
    for (auto& snap : snapshots_) {
      Rational w = snap[a] + t * (snap[b] - snap[a]);
      w.canonicalize();
      snap.push_back(std::move(w));
    }

    std::string id;
    do id = "_s" + std::to_string(fresh_++);
    while (id_set_.count(id));
    id_set_.insert(id);
    VertexIndex m = ids_.size();
    ids_.push_back(id);
    original_.push_back(orig);
    current_.push_back(level);
    incident_.emplace_back();

    // e becomes a-m, a new edge m-b.
    EdgeIndex f = edges_.size();
    edges_[e].b = m;
    edges_.push_back({m, b});
    auto& inc_b = incident_[b];
    *std::find(inc_b.begin(), inc_b.end(), e) = f;
    incident_[m] = {e, f};
  }
}

std::vector<VertexIndex> LeveledSpace::band_component(VertexIndex v, const Rational& lo, const Rational& hi) const {
  auto inside = [&](VertexIndex u) { return lo <= current_[u] && current_[u] <= hi; };
  if (!inside(v)) throw InvalidArgument("band component seed lies outside the band");
  std::vector<char> seen(ids_.size());
  std::vector<VertexIndex> out{v};
  seen[v] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    VertexIndex u = out[head];
    for (EdgeIndex e : incident_[u]) {
      VertexIndex w = edges_[e].a == u ? edges_[e].b : edges_[e].a;
      if (!seen[w] && inside(w)) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  return out;
}

void LeveledSpace::collapse_component(VertexIndex v, Rational lo, Rational hi) {
  if (lo > hi) throw InvalidArgument("band needs lo <= hi");
  subdivide_at(lo);
  subdivide_at(hi);
  Rational mid = midpoint(lo, hi);
  for (VertexIndex u : band_component(v, lo, hi)) current_[u] = mid;
}

void LeveledSpace::collapse_band(Rational lo, Rational hi) {
  if (lo > hi) throw InvalidArgument("band needs lo <= hi");
  subdivide_at(lo);
  subdivide_at(hi);
  Rational mid = midpoint(lo, hi);
  for (Rational& c : current_)
    if (lo <= c && c <= hi) c = mid;
}

void LeveledSpace::set_current(std::vector<Rational> values) {
  if (values.size() != current_.size()) throw InvalidArgument("value vector has the wrong size");
  for (const Edge& e : edges_) {
    int before = cmp(current_[e.a], current_[e.b]);
    int after = cmp(values[e.a], values[e.b]);
    if ((before < 0 && after > 0) || (before > 0 && after < 0))
      throw InvalidArgument("new values reverse the edge " + ids_[e.a] + "-" + ids_[e.b]);
  }
  current_ = std::move(values);
}

Rational LeveledSpace::certificate() const { return distance_to(original_); }

Rational LeveledSpace::distance_to(const std::vector<Rational>& reference) const {
  Rational d = 0;
  for (std::size_t v = 0; v < current_.size(); ++v) d = std::max(d, abs_diff(current_[v], reference[v]));
  return d;
}

std::size_t LeveledSpace::snapshot() {
  snapshots_.push_back(current_);
  return snapshots_.size() - 1;
}

LeveledSpace::Quotient LeveledSpace::quotient_of(const std::vector<Rational>& values) const {
  const std::size_t n = ids_.size();
  if (values.size() != n) throw InvalidArgument("value vector has the wrong size");
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges_) {
    if (values[e.a] != values[e.b]) continue;
    std::size_t ra = find(e.a), rb = find(e.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  // Roots are the smallest index of their class, so input vertices win.
  std::vector<std::size_t> node(n);
  std::vector<Vertex> vertices;
  std::vector<VertexIndex> root_of_node;
  for (VertexIndex v = 0; v < n; ++v) {
    if (find(v) != v) continue;
    node[v] = vertices.size();
    vertices.push_back({ids_[v], values[v]});
    root_of_node.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : edges_)
    if (values[e.a] != values[e.b]) edges.push_back({node[find(e.a)], node[find(e.b)]});

  CanonicalForm canon = canonicalize_tracked(ReebGraph(std::move(vertices), std::move(edges), name_));
  Quotient q;
  q.image.resize(n);
  for (VertexIndex v = 0; v < n; ++v) q.image[v] = canon.vertex_image[node[find(v)]];
  q.representative.resize(canon.graph.vertex_count());
  for (std::size_t k = 0; k < root_of_node.size(); ++k) {
    const GraphPoint& p = canon.vertex_image[k];
    if (p.is_vertex()) q.representative[p.index] = root_of_node[k];
  }
  q.graph = std::move(canon.graph);
  return q;
}

}  // namespace reeb
