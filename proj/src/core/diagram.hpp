#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/rational.hpp"

namespace reeb {

/// Declaration order is the canonical sort order.
enum class PointKind { Ord0, Rel1, Ext0, Ext1 };

inline constexpr std::array<PointKind, 4> kAllKinds{PointKind::Ord0, PointKind::Rel1, PointKind::Ext0,
                                                    PointKind::Ext1};

std::string_view kind_name(PointKind kind);
std::optional<PointKind> parse_kind(std::string_view name);

struct DiagramPoint {
  PointKind kind;
  Rational birth;
  Rational death;

  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

bool operator<(const DiagramPoint& a, const DiagramPoint& b);

/// |birth - death|.
Rational persistence(const DiagramPoint& p);
/// l-infinity distance to the diagonal: |birth - death| / 2.
Rational diagonal_distance(const DiagramPoint& p);
/// l-infinity distance between two points (kinds are ignored).
Rational linf_distance(const DiagramPoint& p, const DiagramPoint& q);

/// Multiset of typed points, kept in canonical order.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<DiagramPoint> points);

  const std::vector<DiagramPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::size_t count(PointKind kind) const;
  std::vector<DiagramPoint> of_kind(PointKind kind) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<DiagramPoint> points_;
};

bool diagram_equal(const Diagram& a, const Diagram& b);

/// One line per point, `<kind> <birth> <death>`, canonical order.
std::string format_diagram(const Diagram& d);
Diagram parse_diagram(std::string_view text);

/// True when the text looks like a diagram file rather than a graph file.
bool looks_like_diagram(std::string_view text);

}  // namespace reeb
