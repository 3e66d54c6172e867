#include "core/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace reeb {

namespace {

// Multiplicity of edges between two vertices, keyed by the sorted pair.
using Multiplicity = std::map<std::pair<VertexIndex, VertexIndex>, std::size_t>;

Multiplicity multiplicities(const ReebGraph& g) {
  Multiplicity m;
  for (const Edge& e : g.edges()) ++m[{std::min(e.a, e.b), std::max(e.a, e.b)}];
  return m;
}

std::size_t lookup(const Multiplicity& m, VertexIndex a, VertexIndex b) {
  auto it = m.find({std::min(a, b), std::max(a, b)});
  return it == m.end() ? 0 : it->second;
}

// Vertex visiting order: breadth first, so every vertex after the first has an
// already-mapped neighbour and adjacency checks prune early.
std::vector<VertexIndex> search_order(const ReebGraph& g) {
  std::vector<VertexIndex> order;
  std::vector<bool> seen(g.vertex_count());
  for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    order.push_back(s);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      VertexIndex v = order[head];
      for (EdgeIndex e : g.incident(v)) {
        VertexIndex u = g.other(e, v);
        if (!seen[u]) {
          seen[u] = true;
          order.push_back(u);
        }
      }
    }
  }
  return order;
}

class Matcher {
 public:
  Matcher(const ReebGraph& g1, const ReebGraph& g2, bool match_values)
      : g1_(g1), g2_(g2), match_values_(match_values), m1_(multiplicities(g1)), m2_(multiplicities(g2)),
        order_(search_order(g1)), map_(g1.vertex_count()), used_(g2.vertex_count()),
        mapped_(g1.vertex_count()) {
    for (VertexIndex v = 0; v < g1.vertex_count(); ++v) {
      std::vector<VertexIndex> c;
      for (VertexIndex w = 0; w < g2.vertex_count(); ++w)
        if (compatible(v, w)) c.push_back(w);
      if (!match_values) {
        std::stable_sort(c.begin(), c.end(), [&](VertexIndex a, VertexIndex b) {
          return abs_diff(g1.value(v), g2.value(a)) < abs_diff(g1.value(v), g2.value(b));
        });
      }
      candidates_.push_back(std::move(c));
    }
  }

  bool sizes_match() const {
    return g1_.vertex_count() == g2_.vertex_count() && g1_.edge_count() == g2_.edge_count();
  }

  // Level isomorphism: first success wins.
  std::optional<VertexMap> first() {
    if (!sizes_match()) return std::nullopt;
    stop_at_first_ = true;
    search(0, Rational(0));
    if (!found_) return std::nullopt;
    return best_map_;
  }

  std::optional<OrientedMatch> best(std::size_t node_limit) {
    if (!sizes_match()) return std::nullopt;
    node_limit_ = node_limit;
    search(0, Rational(0));
    if (!found_) return std::nullopt;
    return OrientedMatch{best_map_, best_shift_};
  }

 private:
  bool compatible(VertexIndex v, VertexIndex w) const {
    if (match_values_ && g1_.value(v) != g2_.value(w)) return false;
    return g1_.incident(v).size() == g2_.incident(w).size() && g1_.up_degree(v) == g2_.up_degree(w) &&
           g1_.down_degree(v) == g2_.down_degree(w);
  }

  bool consistent(VertexIndex v, VertexIndex w) const {
    if (lookup(m1_, v, v) != lookup(m2_, w, w)) return false;
    for (EdgeIndex e : g1_.incident(v)) {
      VertexIndex u = g1_.other(e, v);
      if (!mapped_[u] || u == v) continue;
      VertexIndex x = map_[u];
      if (lookup(m1_, v, u) != lookup(m2_, w, x)) return false;
      // Edge orientation must agree.
      if ((g1_.value(u) < g1_.value(v)) != (g2_.value(x) < g2_.value(w))) return false;
    }
    return true;
  }

  void search(std::size_t depth, const Rational& shift) {
    if (stop_ || (stop_at_first_ && found_)) return;
    if (node_limit_ && ++nodes_ > node_limit_) {
      stop_ = true;
      return;
    }
    if (depth == order_.size()) {
      if (!found_ || shift < best_shift_) {
        found_ = true;
        best_map_ = map_;
        best_shift_ = shift;
      }
      return;
    }
    VertexIndex v = order_[depth];
    for (VertexIndex w : candidates_[v]) {
      if (used_[w]) continue;
      Rational s = std::max<Rational>(shift, abs_diff(g1_.value(v), g2_.value(w)));
      if (found_ && !stop_at_first_ && s >= best_shift_) continue;
      if (!consistent(v, w)) continue;
      map_[v] = w;
      used_[w] = true;
      mapped_[v] = true;
      search(depth + 1, s);
      used_[w] = false;
      mapped_[v] = false;
      if (stop_ || (stop_at_first_ && found_)) return;
    }
  }

  const ReebGraph& g1_;
  const ReebGraph& g2_;
  bool match_values_;
  Multiplicity m1_, m2_;
  std::vector<VertexIndex> order_;
  std::vector<std::vector<VertexIndex>> candidates_;
  VertexMap map_;
  std::vector<bool> used_;
  std::vector<bool> mapped_;
  bool stop_at_first_ = false;
  bool stop_ = false;
  bool found_ = false;
  std::size_t node_limit_ = 0;
  std::size_t nodes_ = 0;
  VertexMap best_map_;
  Rational best_shift_;
};

}  // namespace

std::optional<VertexMap> level_isomorphism(const ReebGraph& g1, const ReebGraph& g2) {
  return Matcher(g1, g2, true).first();
}

bool is_level_isomorphic(const ReebGraph& g1, const ReebGraph& g2) { return level_isomorphism(g1, g2).has_value(); }

std::optional<OrientedMatch> best_oriented_isomorphism(const ReebGraph& g1, const ReebGraph& g2,
                                                       std::size_t node_limit) {
  return Matcher(g1, g2, false).best(node_limit);
}

}  // namespace reeb
