#pragma once

// Lattice figures whose pairwise distances are all integers ("Diophantine
// figures"): verification, closed paths, triangle classification by the
// enveloping rectangle, the type-4 construction, third-vertex completion,
// extension search and common-cathetus fans.

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zi/census.hpp"
#include "zi/integer.hpp"

namespace zi {

struct LatticePoint {
  Int x = 0;
  Int y = 0;
  friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// (y, x) order, the deterministic order of every search result.
inline bool row_major_less(const LatticePoint& a, const LatticePoint& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

struct LatticeVector {
  Int dx = 0;
  Int dy = 0;
  friend constexpr bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

inline std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

inline Int dist2(const LatticePoint& a, const LatticePoint& b) {
  return checked_add(square(checked_sub(a.x, b.x)), square(checked_sub(a.y, b.y)));
}

inline std::optional<Int> integer_distance(const LatticePoint& a, const LatticePoint& b) {
  const Int d2 = dist2(a, b);
  if (!is_perfect_square(d2)) return std::nullopt;
  return isqrt(d2);
}

// Twice the signed area of (a, b, c).
inline Int cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return checked_sub(checked_mul(checked_sub(b.x, a.x), checked_sub(c.y, a.y)),
                     checked_mul(checked_sub(b.y, a.y), checked_sub(c.x, a.x)));
}

/// An ordered list of distinct lattice points.
struct Figure {
  std::vector<LatticePoint> vertices;

  Figure() = default;
  explicit Figure(std::vector<LatticePoint> v) : vertices(std::move(v)) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (vertices[i] == vertices[j]) throw DomainError("duplicate vertex " + to_string(vertices[i]));
  }

  [[nodiscard]] std::size_t size() const { return vertices.size(); }
};

struct DiophantineCheck {
  bool diophantine = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // first non-integral pair
};

inline DiophantineCheck is_diophantine(const Figure& f) {
  if (f.size() < 2) throw DomainError("a figure needs at least two vertices");
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!integer_distance(f.vertices[i], f.vertices[j])) return {false, std::pair{i, j}};
  return {};
}

/// Total length of a closed path given as vertex indices with path.front() ==
/// path.back(). In a Diophantine figure the result is always even.
inline Int closed_path_length(const Figure& f, const std::vector<std::size_t>& path) {
  if (path.size() < 3 || path.front() != path.back()) throw DomainError("path must be closed");
  if (!is_diophantine(f).diophantine) throw DomainError("figure is not Diophantine");
  Int total = 0;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (path[k] >= f.size() || path[k + 1] >= f.size()) throw DomainError("path index out of range");
    if (path[k] == path[k + 1]) throw DomainError("consecutive path vertices must differ");
    total = checked_add(total, *integer_distance(f.vertices[path[k]], f.vertices[path[k + 1]]));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Triangle classification by the enveloping (bounding) rectangle.
//
//   Type1     all three vertices are rectangle corners (a Pythagorean triangle)
//   Type2     two corners on one side, third inside the opposite side
//   Type3     two diagonal corners, third inside a side
//   Type4     one corner, the other two inside the two far sides
//   Anomalous anything else, e.g. a vertex strictly inside the rectangle
//
// The rectangle minus the triangle is tiled by 1, 2 or 3 axis-aligned right
// triangles, one per non-axis-parallel side of the triangle.

enum class TriangleType { Type1, Type2, Type3, Type4, Anomalous };

inline const char* to_string(TriangleType t) {
  switch (t) {
    case TriangleType::Type1: return "type1";
    case TriangleType::Type2: return "type2";
    case TriangleType::Type3: return "type3";
    case TriangleType::Type4: return "type4";
    case TriangleType::Anomalous: return "anomalous";
  }
  return "?";
}

/// Axis-aligned right triangle with hypotenuse pq and right angle at corner.
struct RightTriangle {
  LatticePoint corner;
  LatticePoint p;
  LatticePoint q;
  Int leg_x = 0;
  Int leg_y = 0;
  Int hypotenuse = 0;
};

struct TriangleClass {
  TriangleType type = TriangleType::Anomalous;
  std::vector<RightTriangle> complements;
  bool right_angled = false;
  LatticePoint box_min;
  LatticePoint box_max;
};

enum class BoxPosition { Corner, Edge, Inside };

inline BoxPosition box_position(const LatticePoint& p, const LatticePoint& lo, const LatticePoint& hi) {
  const bool on_x = p.x == lo.x || p.x == hi.x;
  const bool on_y = p.y == lo.y || p.y == hi.y;
  if (on_x && on_y) return BoxPosition::Corner;
  if (on_x || on_y) return BoxPosition::Edge;
  return BoxPosition::Inside;
}

namespace detail {

inline int sign(Int v) { return (v > 0) - (v < 0); }

inline bool right_angle_at(const LatticePoint& v, const LatticePoint& a, const LatticePoint& b) {
  return checked_add(checked_mul(a.x - v.x, b.x - v.x), checked_mul(a.y - v.y, b.y - v.y)) == 0;
}

}  // namespace detail

inline TriangleClass classify_triangle(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  if (cross(a, b, c) == 0) throw DomainError("collinear triangle");
  const std::array<LatticePoint, 3> v{a, b, c};
  for (std::size_t k = 0; k < 3; ++k)
    if (!integer_distance(v[k], v[(k + 1) % 3])) throw DomainError("triangle side is not an integer");

  TriangleClass out;
  out.box_min = {std::min({a.x, b.x, c.x}), std::min({a.y, b.y, c.y})};
  out.box_max = {std::max({a.x, b.x, c.x}), std::max({a.y, b.y, c.y})};
  out.right_angled = detail::right_angle_at(a, b, c) || detail::right_angle_at(b, c, a) ||
                     detail::right_angle_at(c, a, b);

  std::vector<LatticePoint> corners;
  int edges = 0;
  for (const auto& p : v) {
    switch (box_position(p, out.box_min, out.box_max)) {
      case BoxPosition::Corner: corners.push_back(p); break;
      case BoxPosition::Edge: ++edges; break;
      case BoxPosition::Inside: break;
    }
  }
  if (corners.size() == 3) {
    out.type = TriangleType::Type1;
  } else if (corners.size() == 2 && edges == 1) {
    const bool same_side = corners[0].x == corners[1].x || corners[0].y == corners[1].y;
    out.type = same_side ? TriangleType::Type2 : TriangleType::Type3;
  } else if (corners.size() == 1 && edges == 2) {
    out.type = TriangleType::Type4;
  } else {
    out.type = TriangleType::Anomalous;
    return out;
  }

  for (std::size_t k = 0; k < 3; ++k) {
    const LatticePoint& p = v[k];
    const LatticePoint& q = v[(k + 1) % 3];
    const LatticePoint& third = v[(k + 2) % 3];
    if (p.x == q.x || p.y == q.y) continue;
    // Of the two right-angle corners over pq, take the one across pq from the triangle.
    LatticePoint corner{p.x, q.y};
    if (detail::sign(cross(p, q, corner)) == detail::sign(cross(p, q, third))) corner = {q.x, p.y};
    out.complements.push_back(
        {corner, p, q, checked_abs(q.x - p.x), checked_abs(q.y - p.y), *integer_distance(p, q)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Type-4 triangles from four integer parameters. With
//   x + y i = (a + b i)^2 + (c + d i)^2,
//   u + v i = (a + b i)^2 - (c + d i)^2,
//   q + p i = 2 (a + b i)(c + d i),
// (x + y i)^2 = (q + p i)^2 + (u + v i)^2 and the triangle
// (0,0), (u^2 - v^2, 2uv), (x^2 - y^2, 2xy) has sides u^2 + v^2, p^2 + q^2, x^2 + y^2.

struct Type4Triangle {
  Int x = 0, y = 0, u = 0, v = 0, p = 0, q = 0;
  LatticePoint a;
  LatticePoint b;
  LatticePoint c;
  Int ab = 0;
  Int bc = 0;
  Int ac = 0;
};

inline Type4Triangle type4_construct(Int a, Int b, Int c, Int d) {
  Type4Triangle t;
  const Int a2b2 = checked_sub(square(a), square(b));
  const Int c2d2 = checked_sub(square(c), square(d));
  t.x = checked_add(a2b2, c2d2);
  t.y = checked_mul(2, checked_add(checked_mul(a, b), checked_mul(c, d)));
  t.u = checked_sub(a2b2, c2d2);
  t.v = checked_mul(2, checked_sub(checked_mul(a, b), checked_mul(c, d)));
  t.p = checked_mul(2, checked_add(checked_mul(a, d), checked_mul(b, c)));
  t.q = checked_mul(2, checked_sub(checked_mul(a, c), checked_mul(b, d)));
  if (!(t.x > t.y && t.y > 0 && t.u > t.v && t.v > 0 && t.p > t.q && t.q > 0))
    throw DomainError("degenerate type-4 parameters: need x > y > 0, u > v > 0, p > q > 0");

  t.a = {0, 0};
  t.b = {checked_sub(square(t.u), square(t.v)), checked_mul(2, checked_mul(t.u, t.v))};
  t.c = {checked_sub(square(t.x), square(t.y)), checked_mul(2, checked_mul(t.x, t.y))};
  t.ab = checked_add(square(t.u), square(t.v));
  t.bc = checked_add(square(t.p), square(t.q));
  t.ac = checked_add(square(t.x), square(t.y));
  return t;
}

// ---------------------------------------------------------------------------
// Completing a triangle A = (0,0), B, X with |AB| = c, |BX| = a, |AX| = b.
// X satisfies the linear equation 2 b1 x1 + 2 b2 x2 = b^2 + c^2 - a^2, whose
// integer solutions form a line perpendicular to AB.

struct CompletionLine {
  bool solvable = false;
  Int rhs = 0;                          // b^2 + c^2 - a^2
  std::optional<LatticePoint> base;     // the solution closest to the origin
  std::optional<LatticeVector> direction;  // (b2/g, -b1/g), g = gcd(b1, b2)
};

inline CompletionLine completion_line(const LatticePoint& bpt, Int a, Int b, Int c) {
  if (a <= 0 || b <= 0 || c <= 0) throw DomainError("side lengths must be positive");
  if (bpt.x == 0 && bpt.y == 0) throw DomainError("B must differ from A = (0,0)");
  if (square(c) != dist2({0, 0}, bpt)) throw DomainError("c^2 must equal b1^2 + b2^2");

  CompletionLine line;
  line.rhs = checked_sub(checked_add(square(b), square(c)), square(a));
  const auto eg = extended_gcd(bpt.x, bpt.y);
  const Int g = eg.g;
  if (line.rhs % (2 * g) != 0) return line;
  line.solvable = true;
  const Int k = line.rhs / (2 * g);
  LatticePoint base{checked_mul(k, eg.s), checked_mul(k, eg.t)};
  const LatticeVector dir{bpt.y / g, -bpt.x / g};

  // Slide along the line to the integer parameter nearest the orthogonal foot.
  const Int len2 = dir.dx * dir.dx + dir.dy * dir.dy;
  const Int dot = checked_add(checked_mul(base.x, dir.dx), checked_mul(base.y, dir.dy));
  const Int shift = floor_div(checked_add(checked_mul(-2, dot), len2), 2 * len2);
  base = {checked_add(base.x, checked_mul(shift, dir.dx)), checked_add(base.y, checked_mul(shift, dir.dy))};
  line.base = base;
  line.direction = dir;
  return line;
}

/// Every lattice X on the completion line with |AX| = b (then |BX| = a), in (y, x) order.
inline std::vector<LatticePoint> complete_triangle(const LatticePoint& bpt, Int a, Int b, Int c) {
  const CompletionLine line = completion_line(bpt, a, b, c);
  std::vector<LatticePoint> out;
  if (!line.solvable) return out;
  const LatticePoint p = *line.base;
  const LatticeVector d = *line.direction;
  // |p + t d|^2 = b^2  <=>  A t^2 + 2 B t + C = 0.
  const Int qa = d.dx * d.dx + d.dy * d.dy;
  const Int qb = checked_add(checked_mul(p.x, d.dx), checked_mul(p.y, d.dy));
  const Int qc = checked_sub(checked_add(square(p.x), square(p.y)), square(b));
  const Int disc = checked_sub(square(qb), checked_mul(qa, qc));
  if (!is_perfect_square(disc)) return out;
  const Int s = isqrt(disc);
  for (Int num : {-qb - s, -qb + s}) {
    if (num % qa != 0) continue;
    const Int t = num / qa;
    LatticePoint x{checked_add(p.x, checked_mul(t, d.dx)), checked_add(p.y, checked_mul(t, d.dy))};
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), row_major_less);
  return out;
}

// ---------------------------------------------------------------------------

/// Lattice points within Chebyshev distance `radius` of the figure's bounding
/// box, not already vertices, at integer distance from every vertex. An empty
/// result only means no extension exists within the radius.
inline std::vector<LatticePoint> erdos_extend(const Figure& f, Int radius) {
  if (radius < 1) throw DomainError("radius must be positive");
  if (f.size() == 0) throw DomainError("empty figure");
  Int lo_x = f.vertices[0].x, hi_x = lo_x, lo_y = f.vertices[0].y, hi_y = lo_y;
  for (const auto& p : f.vertices) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  std::vector<LatticePoint> out;
  for (Int y = checked_sub(lo_y, radius); y <= checked_add(hi_y, radius); ++y) {
    for (Int x = checked_sub(lo_x, radius); x <= checked_add(hi_x, radius); ++x) {
      const LatticePoint d{x, y};
      bool ok = true;
      for (const auto& p : f.vertices) {
        if (p == d || !integer_distance(p, d)) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(d);
    }
  }
  return out;
}

/// (0,0), (0,n) and (x,0) for every Pythagorean leg x paired with n.
inline Figure cathetus_fan(Int n) {
  if (n < 1) throw DomainError("cathetus_fan needs n >= 1");
  std::vector<LatticePoint> v{{0, 0}, {0, n}};
  for (const auto& lp : legs_with_cathetus(n)) v.push_back({lp.other_leg, 0});
  return Figure(std::move(v));
}

// ---------------------------------------------------------------------------
// Exhaustive triangle scan with one vertex pinned at the origin.

struct TriangleScan {
  Int coord_bound = 0;
  std::size_t triangles = 0;
  std::size_t odd_perimeters = 0;
  std::map<TriangleType, std::size_t> by_type;
  std::vector<std::array<LatticePoint, 3>> anomalous;
};

/// Every Diophantine triangle (0,0), B, C with B, C in [-bound, bound]^2,
/// counted once per unordered {B, C}.
inline TriangleScan scan_triangles_at_origin(Int bound) {
  TriangleScan scan;
  scan.coord_bound = bound;
  const LatticePoint origin{0, 0};
  std::vector<LatticePoint> ring;
  for (Int y = -bound; y <= bound; ++y)
    for (Int x = -bound; x <= bound; ++x)
      if ((x != 0 || y != 0) && is_perfect_square(x * x + y * y)) ring.push_back({x, y});

  for (std::size_t i = 0; i < ring.size(); ++i) {
    for (std::size_t j = i + 1; j < ring.size(); ++j) {
      const auto& b = ring[i];
      const auto& c = ring[j];
      if (cross(origin, b, c) == 0) continue;
      const auto bc = integer_distance(b, c);
      if (!bc) continue;
      ++scan.triangles;
      const Int perimeter = *integer_distance(origin, b) + *integer_distance(origin, c) + *bc;
      if (perimeter % 2 != 0) ++scan.odd_perimeters;
      const auto cls = classify_triangle(origin, b, c);
      ++scan.by_type[cls.type];
      if (cls.type == TriangleType::Anomalous) scan.anomalous.push_back({origin, b, c});
    }
  }
  return scan;
}

}  // namespace zi
