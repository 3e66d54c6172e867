#include "core/persistence.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace reeb {

namespace {

enum class CellType { Apex, Vertex, Edge, ConeVertex, ConeEdge };

struct Cell {
  CellType type;
  std::size_t index;
  Rational value;
  int dim;
};

using Column = std::vector<std::size_t>;  // sorted row positions

void add_into(Column& target, const Column& source) {
  Column out;
  out.reserve(target.size() + source.size());
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(), std::back_inserter(out));
  target.swap(out);
}

}  // namespace

std::vector<ExtendedPair> extended_pairs(const ReebGraph& g) {
  require_valid(g, {.allow_pass_through = true, .allow_disconnected = true});
  const std::size_t nv = g.vertex_count(), ne = g.edge_count();
  auto edge_max = [&](EdgeIndex e) { return g.value(g.upper(e)); };
  auto edge_min = [&](EdgeIndex e) { return g.value(g.lower(e)); };

  std::vector<Cell> ordinary, relative;
  for (VertexIndex v = 0; v < nv; ++v) {
    ordinary.push_back({CellType::Vertex, v, g.value(v), 0});
    relative.push_back({CellType::ConeVertex, v, g.value(v), 1});
  }
  for (EdgeIndex e = 0; e < ne; ++e) {
    ordinary.push_back({CellType::Edge, e, edge_max(e), 1});
    relative.push_back({CellType::ConeEdge, e, edge_min(e), 2});
  }
  std::stable_sort(ordinary.begin(), ordinary.end(), [](const Cell& a, const Cell& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.index < b.index;
  });
  std::stable_sort(relative.begin(), relative.end(), [](const Cell& a, const Cell& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.index < b.index;
  });

  std::vector<Cell> cells{{CellType::Apex, 0, Rational(0), 0}};
  cells.insert(cells.end(), ordinary.begin(), ordinary.end());
  cells.insert(cells.end(), relative.begin(), relative.end());

  std::vector<std::size_t> pos_vertex(nv), pos_edge(ne), pos_cone_vertex(nv);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    switch (cells[i].type) {
      case CellType::Vertex: pos_vertex[cells[i].index] = i; break;
      case CellType::Edge: pos_edge[cells[i].index] = i; break;
      case CellType::ConeVertex: pos_cone_vertex[cells[i].index] = i; break;
      default: break;
    }
  }

  std::vector<Column> columns(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Column& c = columns[i];
    const Cell& cell = cells[i];
    switch (cell.type) {
      case CellType::Apex:
      case CellType::Vertex: break;
      case CellType::Edge: {
        const Edge& e = g.edge(cell.index);
        c = {pos_vertex[e.a], pos_vertex[e.b]};
        break;
      }
      case CellType::ConeVertex: c = {0, pos_vertex[cell.index]}; break;
      case CellType::ConeEdge: {
        const Edge& e = g.edge(cell.index);
        c = {pos_edge[cell.index], pos_cone_vertex[e.a], pos_cone_vertex[e.b]};
        break;
      }
    }
    std::sort(c.begin(), c.end());
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> column_with_low(cells.size(), none);
  std::vector<ExtendedPair> pairs;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    Column& c = columns[j];
    while (!c.empty() && column_with_low[c.back()] != none) add_into(c, columns[column_with_low[c.back()]]);
    if (c.empty()) continue;
    std::size_t i = c.back();
    column_with_low[i] = j;

    const Cell& birth = cells[i];
    const Cell& death = cells[j];
    ExtendedPair pair{{PointKind::Ord0, birth.value, death.value}, 0, std::nullopt};
    if (birth.type == CellType::Vertex && death.type == CellType::Edge) {
      pair.point.kind = PointKind::Ord0;
      pair.representative = birth.index;
      if (birth.value == death.value) continue;
    } else if (birth.type == CellType::Vertex && death.type == CellType::ConeVertex) {
      pair.point.kind = PointKind::Ext0;
      pair.representative = birth.index;
    } else if (birth.type == CellType::Edge && death.type == CellType::ConeEdge) {
      pair.point.kind = PointKind::Ext1;
      pair.representative = g.upper(birth.index);
      pair.cycle_edge = birth.index;
    } else if (birth.type == CellType::ConeVertex && death.type == CellType::ConeEdge) {
      pair.point.kind = PointKind::Rel1;
      pair.representative = birth.index;
      if (birth.value == death.value) continue;
    } else {
      throw Error(ErrorCode::Internal, "unexpected pair in the extended filtration");
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

Diagram reduce_extended_filtration(const ReebGraph& g) {
  std::vector<DiagramPoint> points;
  for (ExtendedPair& p : extended_pairs(g)) points.push_back(std::move(p.point));
  return Diagram(std::move(points));
}

Diagram extended_diagram(const ReebGraph& g) {
  require_valid(g);
  return reduce_extended_filtration(g);
}

namespace {

std::vector<std::pair<Rational, Rational>> elder_rule(const ReebGraph& g, const std::vector<Rational>& value) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) { return value[a] < value[b]; });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  std::vector<std::size_t> parent(n), oldest(n);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i < n; ++i) {
    VertexIndex v = order[i];
    parent[v] = v;
    oldest[v] = v;
    for (EdgeIndex e : g.incident(v)) {
      VertexIndex u = g.other(e, v);
      if (position[u] > i) continue;
      std::size_t ru = find(u), rv = find(v);
      if (ru == rv) continue;
      VertexIndex elder = position[oldest[ru]] < position[oldest[rv]] ? oldest[ru] : oldest[rv];
      VertexIndex younger = elder == oldest[ru] ? oldest[rv] : oldest[ru];
      if (value[younger] != value[v]) out.emplace_back(value[younger], value[v]);
      parent[ru] = rv;
      oldest[rv] = elder;
    }
  }
  return out;
}

}  // namespace

std::vector<DiagramPoint> ord0_unionfind(const ReebGraph& g) {
  require_valid(g);
  std::vector<Rational> values(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) values[v] = g.value(v);
  std::vector<DiagramPoint> out;
  for (auto& [b, d] : elder_rule(g, values)) out.push_back({PointKind::Ord0, b, d});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DiagramPoint> rel1_unionfind(const ReebGraph& g) {
  require_valid(g);
  std::vector<Rational> values(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) values[v] = -g.value(v);
  std::vector<DiagramPoint> out;
  for (auto& [b, d] : elder_rule(g, values)) out.push_back({PointKind::Rel1, -b, -d});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace reeb
