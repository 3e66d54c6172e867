#include "core/travel.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "core/error.hpp"

namespace reeb {

TravelOracle::TravelOracle(const ReebGraph& g) : g_(g), n_(g.vertex_count()) {
  if (!g.is_connected()) throw InvalidGraph("travel distance needs a connected graph");
  for (const Vertex& v : g.vertices()) levels_.push_back(v.value);
  std::sort(levels_.begin(), levels_.end());
  levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
  std::vector<std::size_t> rank(n_);
  for (VertexIndex v = 0; v < n_; ++v)
    rank[v] = std::lower_bound(levels_.begin(), levels_.end(), g.value(v)) - levels_.begin();
  std::vector<VertexIndex> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) { return rank[a] < rank[b]; });

  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  frontier_.assign(n_ * n_, {});
  std::vector<std::size_t> ceiling(n_ * n_);
  std::vector<std::size_t> comp(n_);
  std::vector<std::vector<VertexIndex>> members(n_);
  std::vector<bool> active(n_);

  for (std::size_t floor = levels_.size(); floor-- > 0;) {
    std::fill(ceiling.begin(), ceiling.end(), none);
    std::fill(active.begin(), active.end(), false);
    for (VertexIndex v : order) {
      if (rank[v] < floor) continue;
      active[v] = true;
      comp[v] = v;
      members[v].assign(1, v);
      ceiling[v * n_ + v] = rank[v];
      for (EdgeIndex e : g.incident(v)) {
        VertexIndex u = g.other(e, v);
        if (!active[u]) continue;
        std::size_t cu = comp[u], cv = comp[v];
        if (cu == cv) continue;
        if (members[cu].size() < members[cv].size()) std::swap(cu, cv);
        for (VertexIndex a : members[cv]) {
          for (VertexIndex b : members[cu]) ceiling[a * n_ + b] = ceiling[b * n_ + a] = rank[v];
        }
        for (VertexIndex a : members[cv]) comp[a] = cu;
        members[cu].insert(members[cu].end(), members[cv].begin(), members[cv].end());
        members[cv].clear();
      }
    }
    for (std::size_t i = 0; i < n_ * n_; ++i) {
      if (ceiling[i] == none) continue;
      auto& f = frontier_[i];
      if (f.empty() || ceiling[i] < f.back().ceiling) f.push_back({floor, ceiling[i]});
    }
  }
}

namespace {

// A query point reduced to what the distance formula needs.
template <class T>
struct Anchor {
  T value;
  VertexIndex exits[2];
  std::size_t exit_count;
  std::size_t edge;  // edge index, or npos for vertices
  VertexIndex vertex;
};

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

template <class T>
Anchor<T> make_anchor(const ReebGraph& g, const GraphPoint& raw, T value) {
  GraphPoint p = normalize_point(g, raw);
  Anchor<T> a{std::move(value), {0, 0}, 1, npos, npos};
  if (p.is_vertex()) {
    a.exits[0] = p.index;
    a.vertex = p.index;
  } else {
    a.exits[0] = g.lower(p.index);
    a.exits[1] = g.upper(p.index);
    a.exit_count = 2;
    a.edge = p.index;
  }
  return a;
}

template <class T>
bool share_edge(const ReebGraph& g, const Anchor<T>& x, const Anchor<T>& y) {
  if (x.edge != npos && y.edge != npos) return x.edge == y.edge;
  if (x.edge == npos && y.edge == npos) return x.vertex == y.vertex;
  const Anchor<T>& on_edge = x.edge != npos ? x : y;
  const Anchor<T>& vert = x.edge != npos ? y : x;
  const Edge& e = g.edge(on_edge.edge);
  return e.a == vert.vertex || e.b == vert.vertex;
}

template <class T>
T kernel(const TravelOracle& o, const std::vector<T>& levels, const Anchor<T>& x, const Anchor<T>& y) {
  const T& lo_xy = x.value < y.value ? x.value : y.value;
  const T& hi_xy = x.value < y.value ? y.value : x.value;
  bool found = false;
  T best{};
  if (share_edge(o.graph(), x, y)) {
    best = hi_xy - lo_xy;
    found = true;
  }
  for (std::size_t i = 0; i < x.exit_count; ++i) {
    for (std::size_t j = 0; j < y.exit_count; ++j) {
      for (const TravelOracle::Level& lv : o.frontier(x.exits[i], y.exits[j])) {
        const T& L = levels[lv.floor];
        const T& H = levels[lv.ceiling];
        T cand = (H > hi_xy ? H : hi_xy) - (L < lo_xy ? L : lo_xy);
        if (!found || cand < best) {
          best = cand;
          found = true;
        }
      }
    }
  }
  if (!found) throw Error(ErrorCode::Internal, "travel distance: points are not connected");
  return best;
}

// Common denominator scaling into int64 when every number fits comfortably.
struct Scaler {
  mpz_class denominator = 1;
  bool fits = true;

  void include(const Rational& r) { mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), r.get_den_mpz_t()); }
  void check(const Rational& r) {
    mpz_class scaled = r.get_num() * (denominator / r.get_den());
    if (abs(scaled) > mpz_class(1) << 60) fits = false;
  }
  std::int64_t scale(const Rational& r) const {
    mpz_class scaled = r.get_num() * (denominator / r.get_den());
    return scaled.get_si();
  }
};

template <class T, class Conv>
Discrepancy discrepancy_with(const TravelOracle& f, const std::vector<GraphPoint>& p, const TravelOracle& g,
                             const std::vector<GraphPoint>& q, Conv conv) {
  std::vector<T> lf, lg;
  for (const Rational& r : f.levels()) lf.push_back(conv(r));
  for (const Rational& r : g.levels()) lg.push_back(conv(r));
  std::vector<Anchor<T>> ap, aq;
  for (const GraphPoint& x : p) ap.push_back(make_anchor<T>(f.graph(), x, conv(point_value(f.graph(), x))));
  for (const GraphPoint& y : q) aq.push_back(make_anchor<T>(g.graph(), y, conv(point_value(g.graph(), y))));
  T best{};
  Discrepancy out;
  out.value = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      T d = kernel(f, lf, ap[i], ap[j]) - kernel(g, lg, aq[i], aq[j]);
      if (d < 0) d = -d;
      if (d > best) {
        best = d;
        out.i = i;
        out.j = j;
      }
    }
  }
  if constexpr (std::is_same_v<T, Rational>) {
    out.value = best;
  }
  return out;
}

}  // namespace

Rational TravelOracle::distance(const GraphPoint& x, const GraphPoint& y) const {
  Anchor<Rational> ax = make_anchor<Rational>(g_, x, point_value(g_, x));
  Anchor<Rational> ay = make_anchor<Rational>(g_, y, point_value(g_, y));
  return kernel(*this, levels_, ax, ay);
}

Rational travel_distance(const ReebGraph& g, const GraphPoint& x, const GraphPoint& y) {
  return TravelOracle(g).distance(x, y);
}

Discrepancy max_travel_discrepancy(const TravelOracle& f, const std::vector<GraphPoint>& p, const TravelOracle& g,
                                   const std::vector<GraphPoint>& q) {
  if (p.size() != q.size()) throw InvalidArgument("paired point lists differ in length");
  Scaler s;
  std::vector<Rational> all;
  for (const Rational& r : f.levels()) all.push_back(r);
  for (const Rational& r : g.levels()) all.push_back(r);
  for (const GraphPoint& x : p) all.push_back(point_value(f.graph(), x));
  for (const GraphPoint& y : q) all.push_back(point_value(g.graph(), y));
  for (const Rational& r : all) s.include(r);
  for (const Rational& r : all) s.check(r);
  if (!s.fits) return discrepancy_with<Rational>(f, p, g, q, [](const Rational& r) { return r; });
  Discrepancy out = discrepancy_with<std::int64_t>(f, p, g, q, [&](const Rational& r) { return s.scale(r); });
  // Recompute the winning pair exactly.
  if (!p.empty()) {
    out.value = abs(f.distance(p[out.i], p[out.j]) - g.distance(q[out.i], q[out.j]));
  }
  return out;
}

}  // namespace reeb
