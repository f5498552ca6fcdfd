#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "zi/figure_json.hpp"
#include "zi/figures.hpp"

using namespace zi;

namespace {

bool contains(const std::vector<LatticePoint>& v, const LatticePoint& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

Int twice_area(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return std::abs(cross(a, b, c));
}

}  // namespace

TEST(IsDiophantine, Examples) {
  EXPECT_TRUE(is_diophantine(Figure({{0, 0}, {3, 0}, {0, 4}})).diophantine);

  auto r = is_diophantine(Figure({{0, 0}, {1, 1}}));
  EXPECT_FALSE(r.diophantine);
  ASSERT_TRUE(r.violation);
  EXPECT_EQ(*r.violation, (std::pair<std::size_t, std::size_t>(0, 1)));

  EXPECT_TRUE(is_diophantine(Figure({{0, 0}, {0, 12}, {5, 0}, {9, 0}, {16, 0}, {35, 0}})).diophantine);
}

TEST(IsDiophantine, Errors) {
  EXPECT_THROW(Figure({{1, 1}, {2, 2}, {1, 1}}), DomainError);
  EXPECT_THROW(is_diophantine(Figure({{0, 0}})), DomainError);
}

TEST(ClosedPath, Examples) {
  Figure tri({{0, 0}, {3, 0}, {0, 4}});
  EXPECT_EQ(closed_path_length(tri, {0, 1, 2, 0}), 12);
  EXPECT_EQ(closed_path_length(tri, {1, 2, 1}), 10);

  Figure fan({{0, 0}, {0, 12}, {5, 0}, {9, 0}, {16, 0}, {35, 0}});
  EXPECT_EQ(closed_path_length(fan, {0, 1, 2, 0}), 30);
  EXPECT_EQ(closed_path_length(fan, {0, 5, 1, 3, 2, 1, 0}) % 2, 0);

  EXPECT_THROW(closed_path_length(tri, {0, 1, 2}), DomainError);
  EXPECT_THROW(closed_path_length(tri, {0, 0, 1, 0}), DomainError);
  EXPECT_THROW(closed_path_length(Figure({{0, 0}, {1, 1}, {2, 0}}), {0, 1, 0}), DomainError);
}

TEST(ClassifyTriangle, Examples) {
  auto c = classify_triangle({0, 0}, {4, 0}, {4, 3});
  EXPECT_EQ(c.type, TriangleType::Type1);
  EXPECT_EQ(c.complements.size(), 1u);
  EXPECT_TRUE(c.right_angled);

  c = classify_triangle({0, 0}, {14, 0}, {5, 12});
  EXPECT_EQ(c.type, TriangleType::Type2);
  ASSERT_EQ(c.complements.size(), 2u);
  std::vector<Int> hyps{c.complements[0].hypotenuse, c.complements[1].hypotenuse};
  std::sort(hyps.begin(), hyps.end());
  EXPECT_EQ(hyps, (std::vector<Int>{13, 15}));

  c = classify_triangle({0, 0}, {189, 180}, {125, 300});
  EXPECT_EQ(c.type, TriangleType::Type4);
  ASSERT_EQ(c.complements.size(), 3u);
  std::vector<std::pair<Int, Int>> legs;
  for (const auto& rt : c.complements) legs.emplace_back(rt.leg_x, rt.leg_y);
  std::sort(legs.begin(), legs.end());
  EXPECT_EQ(legs, (std::vector<std::pair<Int, Int>>{{64, 120}, {125, 300}, {189, 180}}));
}

TEST(ClassifyTriangle, Type3) {
  // Diagonal corners (0,0), (16,12); third vertex inside the top side.
  auto c = classify_triangle({0, 0}, {5, 12}, {16, 12});
  EXPECT_EQ(c.type, TriangleType::Type3);
  ASSERT_EQ(c.complements.size(), 2u);
  EXPECT_FALSE(c.right_angled);
  std::vector<Int> hyps{c.complements[0].hypotenuse, c.complements[1].hypotenuse};
  std::sort(hyps.begin(), hyps.end());
  EXPECT_EQ(hyps, (std::vector<Int>{13, 20}));
}

TEST(ClassifyTriangle, Errors) {
  EXPECT_THROW(classify_triangle({0, 0}, {3, 4}, {6, 8}), DomainError);
  EXPECT_THROW(classify_triangle({0, 0}, {1, 1}, {0, 1}), DomainError);
}

TEST(ClassifyTriangle, TiltedRightAngle) {
  auto c = classify_triangle({0, 0}, {12, 9}, {-12, 16});
  EXPECT_EQ(c.type, TriangleType::Type4);
  EXPECT_TRUE(c.right_angled);
}

TEST(ClassifyTriangle, ComplementsTileTheBox) {
  for (Int bx = -25; bx <= 25; ++bx) {
    for (Int by = -25; by <= 25; ++by) {
      for (Int cx = -25; cx <= 25; ++cx) {
        for (Int cy = -25; cy <= 25; ++cy) {
          LatticePoint o{0, 0}, b{bx, by}, c{cx, cy};
          if (cross(o, b, c) == 0 || !integer_distance(o, b) || !integer_distance(o, c) ||
              !integer_distance(b, c))
            continue;
          auto cls = classify_triangle(o, b, c);
          ASSERT_NE(cls.type, TriangleType::Anomalous);
          const std::size_t want = cls.type == TriangleType::Type1 ? 1 : cls.type == TriangleType::Type4 ? 3 : 2;
          ASSERT_EQ(cls.complements.size(), want);
          Int sum = twice_area(o, b, c);
          for (const auto& rt : cls.complements) {
            sum += rt.leg_x * rt.leg_y;
            ASSERT_EQ(rt.leg_x * rt.leg_x + rt.leg_y * rt.leg_y, rt.hypotenuse * rt.hypotenuse);
          }
          const Int box = (cls.box_max.x - cls.box_min.x) * (cls.box_max.y - cls.box_min.y);
          ASSERT_EQ(sum, 2 * box);
        }
      }
    }
  }
}

TEST(Type4, Examples) {
  auto t = type4_construct(4, 1, 1, 1);
  EXPECT_EQ(t.ab, 261);
  EXPECT_EQ(t.bc, 136);
  EXPECT_EQ(t.ac, 325);
  EXPECT_EQ(t.b, (LatticePoint{189, 180}));
  EXPECT_EQ(t.c, (LatticePoint{125, 300}));

  t = type4_construct(5, 1, 1, 1);
  EXPECT_EQ(t.ab, 640);
  EXPECT_EQ(t.bc, 208);
  EXPECT_EQ(t.ac, 720);

  t = type4_construct(6, 1, 1, 1);
  EXPECT_EQ(t.ab, 1325);
  EXPECT_EQ(t.bc, 296);
  EXPECT_EQ(t.ac, 1421);
}

TEST(Type4, SidesMatchDistancesAndClassify) {
  for (Int a = 1; a <= 12; ++a)
    for (Int b = 0; b <= 4; ++b)
      for (Int c = 0; c <= 4; ++c)
        for (Int d = 0; d <= 4; ++d) {
          Type4Triangle t;
          try {
            t = type4_construct(a, b, c, d);
          } catch (const DomainError&) {
            continue;
          }
          ASSERT_EQ(integer_distance(t.a, t.b), t.ab);
          ASSERT_EQ(integer_distance(t.b, t.c), t.bc);
          ASSERT_EQ(integer_distance(t.a, t.c), t.ac);
          ASSERT_EQ(classify_triangle(t.a, t.b, t.c).type, TriangleType::Type4);
        }
  EXPECT_THROW(type4_construct(1, 1, 1, 1), DomainError);
  EXPECT_THROW(type4_construct(0, 0, 0, 0), DomainError);
}

TEST(Completion, LineExamples) {
  auto line = completion_line({0, 3}, 5, 4, 3);
  ASSERT_TRUE(line.solvable);
  EXPECT_EQ(line.rhs, 0);
  EXPECT_EQ(line.direction->dy, 0);  // the line x2 = 0
  EXPECT_EQ(line.base->y, 0);

  line = completion_line({3, 4}, 8, 5, 5);
  ASSERT_TRUE(line.solvable);
  EXPECT_EQ(3 * line.base->x + 4 * line.base->y, -7);
  EXPECT_EQ(3 * line.direction->dx + 4 * line.direction->dy, 0);

  line = completion_line({0, 3}, 3, 1, 3);
  EXPECT_FALSE(line.solvable);

  EXPECT_THROW(completion_line({1, 1}, 1, 1, 1), DomainError);
  EXPECT_THROW(completion_line({0, 0}, 1, 1, 0), DomainError);
}

TEST(Completion, TriangleExamples) {
  auto pts = complete_triangle({0, 3}, 5, 4, 3);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_TRUE(contains(pts, {4, 0}));
  EXPECT_TRUE(contains(pts, {-4, 0}));

  pts = complete_triangle({3, 4}, 8, 5, 5);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0], (LatticePoint{3, -4}));

  EXPECT_TRUE(complete_triangle({0, 3}, 3, 1, 3).empty());
}

TEST(Completion, EvenSumIsNotNecessary) {
  // b^2 + c^2 = 25 is odd, yet X = (4,0) completes the triangle.
  EXPECT_EQ((4 * 4 + 3 * 3) % 2, 1);
  EXPECT_TRUE(contains(complete_triangle({0, 3}, 5, 4, 3), {4, 0}));
}

TEST(Completion, PointsSatisfyDistancesAndLine) {
  for (Int b1 = -12; b1 <= 12; ++b1) {
    for (Int b2 = -12; b2 <= 12; ++b2) {
      auto c = integer_distance({0, 0}, {b1, b2});
      if (!c || *c == 0) continue;
      for (Int a = 1; a <= 20; ++a) {
        for (Int b = 1; b <= 20; ++b) {
          const LatticePoint bp{b1, b2};
          auto line = completion_line(bp, a, b, *c);
          ASSERT_EQ(line.solvable, line.rhs % (2 * gcd(b1, b2)) == 0);
          for (const auto& x : complete_triangle(bp, a, b, *c)) {
            ASSERT_EQ(dist2({0, 0}, x), b * b);
            ASSERT_EQ(dist2(bp, x), a * a);
            ASSERT_EQ(2 * b1 * x.x + 2 * b2 * x.y, line.rhs);
          }
          // Completeness against a box scan.
          std::size_t brute = 0;
          for (Int x = -b; x <= b; ++x)
            for (Int y = -b; y <= b; ++y)
              if (x * x + y * y == b * b && dist2(bp, {x, y}) == a * a) ++brute;
          ASSERT_EQ(brute, complete_triangle(bp, a, b, *c).size());
        }
      }
    }
  }
}

TEST(ErdosExtend, Examples) {
  auto pts = erdos_extend(Figure({{0, 0}, {3, 0}, {0, 4}}), 10);
  EXPECT_TRUE(contains(pts, {-3, 0}));
  EXPECT_TRUE(contains(pts, {0, -4}));
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end(), row_major_less));

  pts = erdos_extend(Figure({{0, 0}, {3, 0}}), 2);
  EXPECT_TRUE(contains(pts, {-1, 0}));
  EXPECT_TRUE(contains(pts, {4, 0}));
  EXPECT_FALSE(contains(pts, {0, 0}));
}

TEST(ErdosExtend, SymmetricUnderLatticeSymmetries) {
  const Figure f({{0, 0}, {3, 0}, {0, 4}});
  const auto base = erdos_extend(f, 12);
  // Reflection x -> -x maps f to another figure; results must map the same way.
  auto reflect = [](LatticePoint p) { return LatticePoint{-p.x, p.y}; };
  auto swap_xy = [](LatticePoint p) { return LatticePoint{p.y, p.x}; };
  for (auto map : {+reflect, +swap_xy}) {
    std::vector<LatticePoint> verts;
    for (const auto& p : f.vertices) verts.push_back(map(p));
    auto mapped = erdos_extend(Figure(verts), 12);
    std::vector<LatticePoint> expected;
    for (const auto& p : base) expected.push_back(map(p));
    std::sort(expected.begin(), expected.end(), row_major_less);
    EXPECT_EQ(mapped, expected);
  }
}

TEST(CathetusFan, Examples) {
  EXPECT_EQ(cathetus_fan(12).vertices,
            (std::vector<LatticePoint>{{0, 0}, {0, 12}, {5, 0}, {9, 0}, {16, 0}, {35, 0}}));
  EXPECT_EQ(cathetus_fan(3).vertices, (std::vector<LatticePoint>{{0, 0}, {0, 3}, {4, 0}}));
  EXPECT_EQ(cathetus_fan(1).vertices, (std::vector<LatticePoint>{{0, 0}, {0, 1}}));
  for (Int n = 1; n <= 60; ++n) {
    Figure f = cathetus_fan(n);
    EXPECT_EQ(static_cast<Int>(f.size()), kappa_bruteforce(n) + 2);
    // Only the triangles at (0,0)-(0,n) are guaranteed; check those edges.
    for (std::size_t k = 2; k < f.size(); ++k) EXPECT_TRUE(integer_distance(f.vertices[1], f.vertices[k]));
  }
}

TEST(TriangleScan, EvenPerimetersAndNoAnomalies) {
  auto scan = scan_triangles_at_origin(25);
  EXPECT_EQ(scan.triangles, 936u);
  EXPECT_EQ(scan.odd_perimeters, 0u);
  EXPECT_TRUE(scan.anomalous.empty());
}

TEST(FigureJson, ReadWrite) {
  Figure f({{0, 0}, {-3, 0}, {0, 4}});
  EXPECT_EQ(figure_to_json(f).dump(), R"({"vertices":[[0,0],[-3,0],[0,4]]})");
  auto back = parse_figure(figure_to_json(f).dump());
  EXPECT_EQ(back.vertices, f.vertices);

  auto path = std::filesystem::temp_directory_path() / "zi_fig_test.json";
  write_figure_file(path.string(), f);
  EXPECT_EQ(read_figure_file(path.string()).vertices, f.vertices);
  std::filesystem::remove(path);

  EXPECT_THROW(parse_figure(R"({"vertices":[[0,0],[0,0]]})"), DomainError);
  EXPECT_THROW(parse_figure(R"({"vertices":[[0,0.5]]})"), DomainError);
  EXPECT_THROW(parse_figure(R"({"vertices":[[0,0,1]]})"), DomainError);
  EXPECT_THROW(parse_figure(R"({"points":[]})"), DomainError);
  EXPECT_THROW(parse_figure("{"), DomainError);
}
