#include "core/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"

namespace reeb {

std::string_view kind_name(PointKind kind) {
  switch (kind) {
    case PointKind::Ord0: return "Ord0";
    case PointKind::Rel1: return "Rel1";
    case PointKind::Ext0: return "Ext0";
    case PointKind::Ext1: return "Ext1";
  }
  return "?";
}

std::optional<PointKind> parse_kind(std::string_view name) {
  for (PointKind k : kAllKinds)
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

bool operator<(const DiagramPoint& a, const DiagramPoint& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.birth != b.birth) return a.birth < b.birth;
  return a.death < b.death;
}

Rational persistence(const DiagramPoint& p) { return abs_diff(p.birth, p.death); }

Rational diagonal_distance(const DiagramPoint& p) { return persistence(p) / 2; }

Rational linf_distance(const DiagramPoint& p, const DiagramPoint& q) {
  return std::max<Rational>(abs_diff(p.birth, q.birth), abs_diff(p.death, q.death));
}

Diagram::Diagram(std::vector<DiagramPoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
}

std::size_t Diagram::count(PointKind kind) const {
  return std::count_if(points_.begin(), points_.end(), [&](const DiagramPoint& p) { return p.kind == kind; });
}

std::vector<DiagramPoint> Diagram::of_kind(PointKind kind) const {
  std::vector<DiagramPoint> out;
  for (const DiagramPoint& p : points_)
    if (p.kind == kind) out.push_back(p);
  return out;
}

bool diagram_equal(const Diagram& a, const Diagram& b) { return a == b; }

std::string format_diagram(const Diagram& d) {
  std::ostringstream out;
  for (const DiagramPoint& p : d.points())
    out << kind_name(p.kind) << ' ' << format_rational(p.birth) << ' ' << format_rational(p.death) << '\n';
  return out.str();
}

Diagram parse_diagram(std::string_view text) {
  std::vector<DiagramPoint> points;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string kind, birth, death, extra;
    if (!(words >> kind)) continue;
    if (!(words >> birth >> death) || (words >> extra)) throw ParseError(line_no, "expected '<kind> <birth> <death>'");
    auto k = parse_kind(kind);
    if (!k) throw ParseError(line_no, "unknown point kind '" + kind + "'");
    try {
      points.push_back({*k, parse_rational(birth), parse_rational(death)});
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return Diagram(std::move(points));
}

bool looks_like_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    if (word[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return parse_kind(word).has_value();
  }
  return false;
}

}  // namespace reeb
