#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/rational.hpp"

namespace reeb {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Vertex {
  std::string id;
  Rational value;
};

/// Unordered pair of vertex indices; parallel edges are allowed.
struct Edge {
  VertexIndex a = 0;
  VertexIndex b = 0;
};

/// Level-labeled multigraph. Vertices carry function values and every edge is a
/// monotone arc between its endpoints. Immutable once constructed.
///
/// The constructor only enforces structural sanity (unique ids, edge endpoints
/// in range). Semantic invariants (no level edges, connectivity, no
/// pass-through vertices) are checked by validate().
class ReebGraph {
 public:
  ReebGraph() = default;
  ReebGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, std::string name = {});

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  const Vertex& vertex(VertexIndex v) const { return vertices_[v]; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  const Rational& value(VertexIndex v) const { return vertices_[v].value; }
  const std::string& name() const { return name_; }

  std::optional<VertexIndex> find(std::string_view id) const;
  std::span<const EdgeIndex> incident(VertexIndex v) const { return incident_[v]; }
  VertexIndex other(EdgeIndex e, VertexIndex v) const {
    return edges_[e].a == v ? edges_[e].b : edges_[e].a;
  }

  // Endpoints ordered by value (ties by index; ties only occur on level edges).
  VertexIndex lower(EdgeIndex e) const;
  VertexIndex upper(EdgeIndex e) const;

  std::size_t down_degree(VertexIndex v) const;
  std::size_t up_degree(VertexIndex v) const;
  // Exactly one edge going down and one going up: removable by canonicalize.
  bool is_pass_through(VertexIndex v) const;
  bool is_connected() const;

  ReebGraph with_values(std::vector<Rational> values) const;
  ReebGraph with_name(std::string name) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incident_;
  std::string name_;
};

/// A vertex, or an interior point of an edge identified by its value. The
/// parameterisation along an edge is linear in value.
struct GraphPoint {
  enum class Kind { Vertex, Edge };

  Kind kind = Kind::Vertex;
  std::size_t index = 0;
  Rational value;  // used for edge points only

  static GraphPoint at_vertex(VertexIndex v) { return {Kind::Vertex, v, Rational(0)}; }
  static GraphPoint on_edge(EdgeIndex e, Rational value) { return {Kind::Edge, e, std::move(value)}; }
  bool is_vertex() const { return kind == Kind::Vertex; }
};

/// Value of the induced map at `p`. Throws InvalidArgument if `p` is not on `g`.
Rational point_value(const ReebGraph& g, const GraphPoint& p);
/// Throws InvalidArgument unless `p` lies on `g`; edge points at an endpoint's
/// value are turned into vertex points.
GraphPoint normalize_point(const ReebGraph& g, const GraphPoint& p);
std::string describe_point(const ReebGraph& g, const GraphPoint& p);

enum class ViolationKind { Empty, LevelEdge, PassThrough, Disconnected };

struct Violation {
  ViolationKind kind;
  std::string location;
  std::string message() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

ValidationReport validate(const ReebGraph& g);

struct Requirements {
  bool allow_pass_through = true;
  bool allow_disconnected = false;
};

/// Throws InvalidGraph describing the first violation not permitted by `req`.
void require_valid(const ReebGraph& g, Requirements req = {});

/// Canonical graph plus where every input vertex and edge ended up.
struct CanonicalForm {
  ReebGraph graph;
  std::vector<GraphPoint> vertex_image;  // removed vertices become edge points
  std::vector<EdgeIndex> edge_image;
};

CanonicalForm canonicalize_tracked(const ReebGraph& g);
ReebGraph canonicalize(const ReebGraph& g);

/// Connected components as separate graphs, in order of their first vertex.
std::vector<ReebGraph> split_components(const ReebGraph& g);

/// Sorted distinct values of the critical (non pass-through) vertices.
std::vector<Rational> critical_values(const ReebGraph& g);

/// Smallest gap between consecutive critical values. Throws PreconditionFailed
/// when there is a single critical value.
Rational min_critical_gap(const ReebGraph& g);

struct ArcDescriptor {
  EdgeIndex edge;
  VertexIndex lower;
  VertexIndex upper;
};

/// Connected components of the preimage of the open interval (lo, hi); each is a
/// topological arc, reported by the edge carrying its midpoint level.
std::vector<ArcDescriptor> arcs_in_interval(const ReebGraph& g, const Rational& lo, const Rational& hi);

/// Same vertices (ids and values, in order) and same edge list. Names are ignored.
bool identical(const ReebGraph& a, const ReebGraph& b);

/// E - V + C.
std::size_t first_betti_number(const ReebGraph& g);

}  // namespace reeb
