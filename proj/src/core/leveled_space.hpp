#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "core/graph.hpp"

namespace reeb {

/// A graph X (a subdivision of some input Reeb graph) with two PL functions on
/// it: the input function and the current one. Operators only ever change the
/// current function, and only in ways that keep the weak order of values along
/// every edge. The Reeb graph of the current function is quotient().
///
/// Both functions live on the same space, so sup |current - original| over the
/// vertices of X bounds the functional distortion distance between the two
/// Reeb graphs (take both maps to be the identity of X).
class LeveledSpace {
 public:
  explicit LeveledSpace(const ReebGraph& g);

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  const std::vector<Rational>& original() const { return original_; }
  const std::vector<Rational>& current() const { return current_; }
  const std::string& id(VertexIndex v) const { return ids_[v]; }

  /// Splits every edge whose current values strictly straddle `level`.
  void subdivide_at(Rational level);

  /// Vertices reachable from `v` through edges lying inside [lo, hi]. Assumes
  /// the space is subdivided at lo and hi.
  std::vector<VertexIndex> band_component(VertexIndex v, const Rational& lo, const Rational& hi) const;

  /// Subdivides at lo and hi, then moves the band component of `v` to (lo+hi)/2.
  void collapse_component(VertexIndex v, Rational lo, Rational hi);

  /// Subdivides at lo and hi, then moves every vertex with value in [lo, hi] to (lo+hi)/2.
  void collapse_band(Rational lo, Rational hi);

  /// Replaces the current function. Throws InvalidArgument if some edge would be
  /// reversed relative to the current function.
  void set_current(std::vector<Rational> values);

  /// Stores a copy of the current function. Snapshots are PL functions on the
  /// same space and stay correct under later subdivision.
  std::size_t snapshot();
  const std::vector<Rational>& snapshot_values(std::size_t k) const { return snapshots_[k]; }

  /// max over vertices of |current - original|.
  Rational certificate() const;
  /// max over vertices of |current - reference|.
  Rational distance_to(const std::vector<Rational>& reference) const;

  struct Quotient {
    ReebGraph graph;
    std::vector<GraphPoint> image;           // per space vertex
    std::vector<VertexIndex> representative;  // per quotient vertex, a space vertex mapping to it
  };
  /// Contracts level edges and removes pass-through vertices.
  Quotient quotient() const { return quotient_of(current_); }
  /// Reeb graph of another function on the same space.
  Quotient quotient_of(const std::vector<Rational>& values) const;
  ReebGraph graph() const { return quotient().graph; }

  /// Space vertex of the input graph's vertex `v`.
  VertexIndex input_vertex(VertexIndex v) const { return v; }

 private:
  std::vector<std::string> ids_;
  std::unordered_set<std::string> id_set_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incident_;
  std::vector<Rational> original_;
  std::vector<Rational> current_;
  std::vector<std::vector<Rational>> snapshots_;
  std::string name_;
  std::size_t fresh_ = 0;
};

}  // namespace reeb
