#include "core/bottleneck.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "core/error.hpp"
#include "core/persistence.hpp"

namespace reeb {

Rational matching_cost(const Diagram& d1, const Diagram& d2, const PartialMatching& m) {
  const auto& p = d1.points();
  const auto& q = d2.points();
  std::vector<int> left(p.size()), right(q.size());
  Rational cost = 0;
  for (const auto& [i, j] : m.pairs) {
    if (i >= p.size() || j >= q.size()) throw InvalidArgument("matching index out of range");
    if (p[i].kind != q[j].kind) throw InvalidArgument("matching pairs points of different kinds");
    ++left[i];
    ++right[j];
    cost = std::max(cost, linf_distance(p[i], q[j]));
  }
  for (std::size_t i : m.unmatched_left) {
    if (i >= p.size()) throw InvalidArgument("matching index out of range");
    ++left[i];
    cost = std::max(cost, diagonal_distance(p[i]));
  }
  for (std::size_t j : m.unmatched_right) {
    if (j >= q.size()) throw InvalidArgument("matching index out of range");
    ++right[j];
    cost = std::max(cost, diagonal_distance(q[j]));
  }
  auto once = [](int c) { return c == 1; };
  if (!std::all_of(left.begin(), left.end(), once) || !std::all_of(right.begin(), right.end(), once))
    throw InvalidArgument("every point must be matched or unmatched exactly once");
  return cost;
}

namespace {

// Points of one kind, with their indices in the full diagram.
struct KindSlice {
  std::vector<DiagramPoint> left, right;
  std::vector<std::size_t> left_index, right_index;
};

KindSlice slice(const Diagram& d1, const Diagram& d2, PointKind kind) {
  KindSlice s;
  for (std::size_t i = 0; i < d1.size(); ++i)
    if (d1.points()[i].kind == kind) {
      s.left.push_back(d1.points()[i]);
      s.left_index.push_back(i);
    }
  for (std::size_t j = 0; j < d2.size(); ++j)
    if (d2.points()[j].kind == kind) {
      s.right.push_back(d2.points()[j]);
      s.right_index.push_back(j);
    }
  return s;
}

// Perfect matching on the doubled bipartite graph. Left nodes are the n left
// points then the m diagonal copies of right points; right nodes are the m right
// points then the n diagonal copies of left points. Returns, for each left node,
// its right partner, or nullopt if no perfect matching exists.
std::optional<std::vector<std::size_t>> threshold_matching(const KindSlice& s, const Rational& delta) {
  const std::size_t n = s.left.size(), m = s.right.size(), total = n + m;
  std::vector<std::vector<std::size_t>> adj(total);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      if (linf_distance(s.left[i], s.right[j]) <= delta) adj[i].push_back(j);
    if (diagonal_distance(s.left[i]) <= delta) adj[i].push_back(m + i);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (diagonal_distance(s.right[j]) <= delta) adj[n + j].push_back(j);
    for (std::size_t i = 0; i < n; ++i) adj[n + j].push_back(m + i);
  }
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_right(total, none);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (std::size_t v : adj[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] == none || augment(match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < total; ++u) {
    visited.assign(total, 0);
    if (!augment(u)) return std::nullopt;
  }
  std::vector<std::size_t> partner(total);
  for (std::size_t v = 0; v < total; ++v) partner[match_right[v]] = v;
  return partner;
}

std::vector<Rational> candidates(const KindSlice& s) {
  std::vector<Rational> c{Rational(0)};
  for (const auto& p : s.left) c.push_back(diagonal_distance(p));
  for (const auto& q : s.right) c.push_back(diagonal_distance(q));
  for (const auto& p : s.left)
    for (const auto& q : s.right) c.push_back(linf_distance(p, q));
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

}  // namespace

BottleneckResult bottleneck(const Diagram& d1, const Diagram& d2) {
  BottleneckResult result;
  result.value = 0;
  for (PointKind kind : kAllKinds) {
    KindSlice s = slice(d1, d2, kind);
    if (s.left.empty() && s.right.empty()) continue;
    std::vector<Rational> c = candidates(s);
    // The largest candidate is always feasible: everything can go to the diagonal.
    std::size_t lo = 0, hi = c.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (threshold_matching(s, c[mid]))
        hi = mid;
      else
        lo = mid + 1;
    }
    result.value = std::max(result.value, c[lo]);
    std::vector<std::size_t> partner = *threshold_matching(s, c[lo]);
    const std::size_t n = s.left.size(), m = s.right.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (partner[i] < m)
        result.witness.pairs.emplace_back(s.left_index[i], s.right_index[partner[i]]);
      else
        result.witness.unmatched_left.push_back(s.left_index[i]);
    }
    for (std::size_t j = 0; j < m; ++j)
      if (partner[n + j] == j) result.witness.unmatched_right.push_back(s.right_index[j]);
  }
  return result;
}

bool feasible(const Diagram& d1, const Diagram& d2, const Rational& delta) {
  if (delta < 0) throw InvalidArgument("feasibility threshold must be non-negative");
  for (PointKind kind : kAllKinds) {
    KindSlice s = slice(d1, d2, kind);
    if (!s.left.empty() || !s.right.empty())
      if (!threshold_matching(s, delta)) return false;
  }
  return true;
}

Rational graph_bottleneck(const ReebGraph& g1, const ReebGraph& g2) {
  return bottleneck(extended_diagram(g1), extended_diagram(g2)).value;
}

}  // namespace reeb
