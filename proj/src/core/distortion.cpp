#include "core/distortion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "core/bottleneck.hpp"
#include "core/error.hpp"
#include "core/travel.hpp"

namespace reeb {

namespace {

GraphPoint point_at(const ReebGraph& g, EdgeIndex e, const Rational& value) {
  return normalize_point(g, GraphPoint::on_edge(e, value));
}

Rational clamp(const Rational& x, const Rational& lo, const Rational& hi) {
  if (x < lo) return lo;
  if (x > hi) return hi;
  return x;
}

bool is_segment(const ReebGraph& g) {
  return g.vertex_count() == 2 && g.edge_count() == 1 && g.value(0) != g.value(1);
}

// Position of a point on g as (edge, parameter from edge.a), vertices excluded.
Rational parameter(const ReebGraph& g, EdgeIndex e, const Rational& value) {
  const Edge& edge = g.edge(e);
  Rational t = (value - g.value(edge.a)) / (g.value(edge.b) - g.value(edge.a));
  t.canonicalize();
  return t;
}

}  // namespace

std::vector<GraphPoint> sample_net(const ReebGraph& g, const Rational& h) {
  if (h <= 0) throw InvalidArgument("sample resolution must be positive");
  std::vector<GraphPoint> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out.push_back(GraphPoint::at_vertex(v));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Rational& lo = g.value(g.lower(e));
    const Rational& hi = g.value(g.upper(e));
    Rational pieces = (hi - lo) / h;
    mpz_class k = pieces.get_num() / pieces.get_den();
    if (k * pieces.get_den() != pieces.get_num()) ++k;
    for (mpz_class i = 1; i < k; ++i) {
      Rational v = lo + (hi - lo) * Rational(i, k);
      v.canonicalize();
      out.push_back(GraphPoint::on_edge(e, v));
    }
  }
  return out;
}

Rational sample_spacing(const ReebGraph& g, const std::vector<GraphPoint>& samples) {
  std::vector<bool> vertex_seen(g.vertex_count());
  std::vector<std::vector<Rational>> along(g.edge_count());
  for (const GraphPoint& raw : samples) {
    GraphPoint p = normalize_point(g, raw);
    if (p.is_vertex())
      vertex_seen[p.index] = true;
    else
      along[p.index].push_back(p.value);
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (!vertex_seen[v]) throw InvalidArgument("samples must include vertex " + g.vertex(v).id);
  Rational h = 0;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    auto& vals = along[e];
    vals.push_back(g.value(g.lower(e)));
    vals.push_back(g.value(g.upper(e)));
    std::sort(vals.begin(), vals.end());
    for (std::size_t i = 1; i < vals.size(); ++i) h = std::max<Rational>(h, vals[i] - vals[i - 1]);
  }
  return h;
}

Rational default_resolution(const ReebGraph& g1, const ReebGraph& g2) {
  auto scale = [](const ReebGraph& g) -> Rational {
    std::vector<Rational> c = critical_values(g);
    if (c.size() >= 2) return min_critical_gap(g);
    return 1;
  };
  Rational h = std::min(scale(g1), scale(g2)) / 8;
  h.canonicalize();
  return h;
}

Correspondence natural_correspondence(const ReebGraph& g1, const ReebGraph& g2, const Rational& h) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    throw PreconditionFailed("natural witness needs graphs with the same vertices and edges");
  std::vector<VertexIndex> to2(g1.vertex_count()), to1(g2.vertex_count());
  for (VertexIndex v = 0; v < g1.vertex_count(); ++v) {
    auto w = g2.find(g1.vertex(v).id);
    if (!w) throw PreconditionFailed("natural witness: vertex " + g1.vertex(v).id + " missing in the second graph");
    to2[v] = *w;
    to1[*w] = v;
  }
  std::vector<EdgeIndex> edge12(g1.edge_count()), edge21(g2.edge_count());
  std::vector<bool> used(g2.edge_count());
  for (EdgeIndex e = 0; e < g1.edge_count(); ++e) {
    VertexIndex a = to2[g1.edge(e).a], b = to2[g1.edge(e).b];
    bool found = false;
    for (EdgeIndex f : g2.incident(a)) {
      if (used[f] || g2.other(f, a) != b) continue;
      used[f] = true;
      edge12[e] = f;
      edge21[f] = e;
      found = true;
      break;
    }
    if (!found) throw PreconditionFailed("natural witness: edge " + g1.vertex(g1.edge(e).a).id + "-" +
                                         g1.vertex(g1.edge(e).b).id + " missing in the second graph");
  }

  // Moves a point to the other graph keeping its parameter along the edge.
  auto transfer = [](const ReebGraph& from, const ReebGraph& to, const std::vector<VertexIndex>& vmap,
                     const std::vector<EdgeIndex>& emap, const GraphPoint& p) {
    if (p.is_vertex()) return GraphPoint::at_vertex(vmap[p.index]);
    Rational t = parameter(from, p.index, p.value);
    EdgeIndex f = emap[p.index];
    // The matched edge may list its endpoints the other way round.
    VertexIndex a = vmap[from.edge(p.index).a];
    VertexIndex b = to.other(f, a);
    Rational v = to.value(a) + t * (to.value(b) - to.value(a));
    v.canonicalize();
    return point_at(to, f, v);
  };

  Correspondence c;
  c.description = "natural";
  c.samples1 = sample_net(g1, h);
  c.samples2 = sample_net(g2, h);
  for (const GraphPoint& p : c.samples1) c.phi.push_back(transfer(g1, g2, to2, edge12, p));
  for (const GraphPoint& p : c.samples2) c.psi.push_back(transfer(g2, g1, to1, edge21, p));
  return c;
}

namespace {

// Edges of a monotone path from a global minimum to a global maximum.
std::vector<EdgeIndex> monotone_spine(const ReebGraph& g) {
  Rational lo = g.value(0), hi = g.value(0);
  for (const Vertex& v : g.vertices()) {
    lo = std::min(lo, v.value);
    hi = std::max(hi, v.value);
  }
  constexpr EdgeIndex none = static_cast<EdgeIndex>(-1);
  for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
    if (g.value(s) != lo) continue;
    std::vector<EdgeIndex> via(g.vertex_count(), none);
    std::vector<bool> seen(g.vertex_count());
    std::vector<VertexIndex> queue{s};
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexIndex v = queue[head];
      if (g.value(v) == hi) {
        std::vector<EdgeIndex> path;
        while (v != s) {
          path.push_back(via[v]);
          v = g.other(via[v], v);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      for (EdgeIndex e : g.incident(v)) {
        VertexIndex u = g.other(e, v);
        if (seen[u] || !(g.value(u) > g.value(v))) continue;
        seen[u] = true;
        via[u] = e;
        queue.push_back(u);
      }
    }
  }
  throw PreconditionFailed("collapse witness needs a monotone path from a global minimum to a global maximum");
}

}  // namespace

Correspondence collapse_correspondence(const ReebGraph& g1, const ReebGraph& g2, const Rational& h) {
  bool seg2 = is_segment(g2);
  if (!seg2 && !is_segment(g1)) throw PreconditionFailed("collapse witness needs one side to be a segment");
  const ReebGraph& big = seg2 ? g1 : g2;
  const ReebGraph& seg = seg2 ? g2 : g1;
  const Rational& s_lo = seg.value(seg.lower(0));
  const Rational& s_hi = seg.value(seg.upper(0));

  auto onto_segment = [&](const GraphPoint& p) { return point_at(seg, 0, clamp(point_value(big, p), s_lo, s_hi)); };
  std::vector<EdgeIndex> spine = monotone_spine(big);
  const Rational& b_lo = big.value(big.lower(spine.front()));
  const Rational& b_hi = big.value(big.upper(spine.back()));
  auto onto_spine = [&](const GraphPoint& p) {
    Rational v = clamp(point_value(seg, p), b_lo, b_hi);
    for (EdgeIndex e : spine)
      if (v <= big.value(big.upper(e))) return point_at(big, e, v);
    return point_at(big, spine.back(), v);
  };

  Correspondence c;
  c.description = "collapse";
  c.samples1 = sample_net(g1, h);
  c.samples2 = sample_net(g2, h);
  for (const GraphPoint& p : c.samples1) c.phi.push_back(seg2 ? onto_segment(p) : onto_spine(p));
  for (const GraphPoint& p : c.samples2) c.psi.push_back(seg2 ? onto_spine(p) : onto_segment(p));
  return c;
}

GraphPoint parse_point(const ReebGraph& g, std::string_view text) {
  auto tilde = text.find('~');
  if (tilde == std::string_view::npos) {
    auto v = g.find(text);
    if (!v) throw ParseError("unknown vertex '" + std::string(text) + "'");
    return GraphPoint::at_vertex(*v);
  }
  auto at = text.find('@', tilde);
  if (at == std::string_view::npos) throw ParseError("edge point needs '@<value>': '" + std::string(text) + "'");
  std::string_view first = text.substr(0, tilde);
  std::string_view second = text.substr(tilde + 1, at - tilde - 1);
  std::size_t which = 0;
  if (auto hash = second.find('#'); hash != std::string_view::npos) {
    std::string k(second.substr(hash + 1));
    if (k.empty() || !std::all_of(k.begin(), k.end(), ::isdigit)) throw ParseError("bad edge index in '" + std::string(text) + "'");
    which = std::stoul(k);
    second = second.substr(0, hash);
  }
  auto a = g.find(first), b = g.find(second);
  if (!a || !b) throw ParseError("unknown vertex in '" + std::string(text) + "'");
  Rational value = parse_rational(text.substr(at + 1));
  for (EdgeIndex e : g.incident(*a)) {
    if (g.other(e, *a) != *b) continue;
    if (which-- == 0) {
      try {
        return normalize_point(g, GraphPoint::on_edge(e, value));
      } catch (const InvalidArgument& err) {
        throw ParseError(err.what());
      }
    }
  }
  throw ParseError("no such edge in '" + std::string(text) + "'");
}

Correspondence parse_correspondence(const ReebGraph& g1, const ReebGraph& g2, std::string_view text) {
  Correspondence c;
  c.description = "file";
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos && (hash == 0 || line[hash - 1] == ' ')) line.erase(hash);
    std::istringstream words(line);
    std::string tag, from, to, extra;
    if (!(words >> tag)) continue;
    if (!(words >> from >> to) || (words >> extra)) throw ParseError(line_no, "expected '<phi|psi> <point> <point>'");
    try {
      if (tag == "phi") {
        c.samples1.push_back(parse_point(g1, from));
        c.phi.push_back(parse_point(g2, to));
      } else if (tag == "psi") {
        c.samples2.push_back(parse_point(g2, from));
        c.psi.push_back(parse_point(g1, to));
      } else {
        throw ParseError("unknown record '" + tag + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return c;
}

DistortionReport evaluate(const ReebGraph& g1, const ReebGraph& g2, const Correspondence& c) {
  if (c.samples1.size() != c.phi.size() || c.samples2.size() != c.psi.size())
    throw InvalidArgument("correspondence maps must be defined on every sample");
  DistortionReport r;
  r.resolution = std::max(sample_spacing(g1, c.samples1), sample_spacing(g2, c.samples2));
  r.remainder = 2 * r.resolution;

  std::vector<GraphPoint> first = c.samples1, second = c.phi;
  first.insert(first.end(), c.psi.begin(), c.psi.end());
  second.insert(second.end(), c.samples2.begin(), c.samples2.end());
  r.defect_phi = 0;
  r.defect_psi = 0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    Rational d = abs_diff(point_value(g1, first[i]), point_value(g2, second[i]));
    Rational& slot = i < c.samples1.size() ? r.defect_phi : r.defect_psi;
    slot = std::max(slot, d);
  }
  TravelOracle o1(g1), o2(g2);
  Discrepancy worst = max_travel_discrepancy(o1, first, o2, second);
  r.distortion = worst.value;
  if (first.size() >= 2) {
    r.worst_pair = "(" + describe_point(g1, first[worst.i]) + ", " + describe_point(g2, second[worst.i]) + ") vs (" +
                   describe_point(g1, first[worst.j]) + ", " + describe_point(g2, second[worst.j]) + ")";
  }
  r.sampled = std::max({Rational(r.distortion / 2), r.defect_phi, r.defect_psi});
  r.upper = r.sampled + r.remainder;
  return r;
}

Rational distortion(const ReebGraph& g1, const ReebGraph& g2, const Correspondence& c) {
  return evaluate(g1, g2, c).distortion;
}

Rational fd_upper(const ReebGraph& g1, const ReebGraph& g2, const Correspondence& c) {
  return evaluate(g1, g2, c).sampled;
}

Rational fd_lower(const ReebGraph& g1, const ReebGraph& g2) { return graph_bottleneck(g1, g2) / 2; }

}  // namespace reeb
