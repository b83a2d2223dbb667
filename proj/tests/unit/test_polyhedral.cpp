#include <gtest/gtest.h>

#include <random>

#include "builders.hpp"
#include "phasetrop/trop_complex.hpp"

using namespace phasetrop;
using namespace build;

namespace {

std::vector<IntVec> ray_directions(const TropComplex& c) {
  std::vector<IntVec> out;
  for (const auto& f : c.faces()) {
    if (auto d = f.poly.ray_direction()) out.push_back(*d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Polyhedron, Canonicalization) {
  // 2x + 2y = 2 written twice, x >= 0 twice, and a redundant x >= -1
  const Polyhedron p(2, {{{2, 2}, Rat(2)}, {{1, 1}, Rat(1)}}, {{{1, 0}, Rat(0)}, {{2, 0}, Rat(0)}, {{1, 0}, Rat(-1)}});
  EXPECT_EQ(p.equalities(), (std::vector<LinearCondition>{{{1, 1}, Rat(1)}}));
  ASSERT_EQ(p.inequalities().size(), 1u);
  EXPECT_EQ(p.dimension(), 1);
  // the same ray described differently
  const Polyhedron q(2, {{{-3, -3}, Rat(-3)}}, {{{0, -1}, Rat(-1)}});
  EXPECT_EQ(p, q);
  EXPECT_EQ(p.ray_direction(), (IntVec{1, -1}));
}

TEST(Polyhedron, ImplicitEqualities) {
  const Polyhedron p(2, {}, {{{1, 0}, Rat(1)}, {{-1, 0}, Rat(-1)}, {{0, 1}, Rat(0)}});
  EXPECT_EQ(p.equalities().size(), 1u);
  EXPECT_EQ(p.dimension(), 1);
  EXPECT_TRUE(p.in_relint(rv({1, 5})));
  EXPECT_FALSE(p.in_relint(rv({1, 0})));
  EXPECT_TRUE(p.contains(rv({1, 0})));
  const Polyhedron empty(1, {}, {{{1}, Rat(1)}, {{-1}, Rat(0)}});
  EXPECT_TRUE(empty.is_empty());
  EXPECT_EQ(empty.dimension(), -1);
}

TEST(Polyhedron, RandomRelintPointsStayInside) {
  std::mt19937_64 rng(17);
  const Polyhedron tri(2, {}, {{{1, 0}, Rat(0)}, {{0, 1}, Rat(0)}, {{-1, -1}, Rat(-1)}});
  EXPECT_TRUE(tri.is_bounded());
  for (int i = 0; i < 200; ++i) EXPECT_TRUE(tri.in_relint(tri.random_relint_point(rng)));
  const Polyhedron ray(2, {{{1, -1}, Rat(0)}}, {{{1, 0}, Rat(1)}});
  EXPECT_FALSE(ray.is_bounded());
  for (int i = 0; i < 200; ++i) EXPECT_TRUE(ray.in_relint(ray.random_relint_point(rng)));
}

TEST(TropComplex, PlaneLine) {
  const TropComplex c = trop_complex(plane_line());
  ASSERT_EQ(c.size(), 4u);
  const auto vertices = c.faces_of_dimension(0);
  ASSERT_EQ(vertices.size(), 1u);
  EXPECT_EQ(c.face(vertices[0]).poly.relint_point(), rv({1, 1}));
  EXPECT_EQ(ray_directions(c), (std::vector<IntVec>{{-1, -1}, {0, 1}, {1, 0}}));
  EXPECT_TRUE(c.is_pure());
  EXPECT_TRUE(c.is_connected());
  EXPECT_EQ(c.minimal_faces(), vertices);
}

TEST(TropComplex, ConstantLine) {
  const TropComplex c = trop_complex(standard_hyperplane(2).to_kpoly());
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c.face(c.faces_of_dimension(0)[0]).poly.relint_point(), rv({0, 0}));
  EXPECT_EQ(ray_directions(c), (std::vector<IntVec>{{-1, -1}, {0, 1}, {1, 0}}));
}

TEST(TropComplex, Binomial) {
  const KPoly b = kpoly(2, {{{1, 0}, konst(PolarC::one())}, {{0, 1}, konst(PolarC::one())}});
  const TropComplex c = trop_complex(b);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.face(0).poly, Polyhedron(2, {{{1, -1}, Rat(0)}}, {}));
  EXPECT_EQ(c.minimal_faces(), (std::vector<std::size_t>{0}));
  EXPECT_THROW(trop_complex(kpoly(2, {{{1, 0}, konst(PolarC::one())}})), Error);
}

TEST(TropComplex, DualityOnSamples) {
  // argmin at random relative-interior points equals the stored set
  std::mt19937_64 rng(4);
  const KPoly f = kpoly(2, {{{0, 0}, tpow(Rat(2))},
                            {{1, 0}, konst(PolarC::one())},
                            {{0, 1}, tpow(Rat(1))},
                            {{1, 1}, tpow(Rat(1, 2))},
                            {{2, 0}, tpow(Rat(3))}});
  const TropComplex c = trop_complex(f);
  for (const auto& face : c.faces()) {
    EXPECT_EQ(static_cast<int>(face.lattice.size()), face.dim);
    for (int k = 0; k < 5; ++k) {
      const RatVec w = face.poly.random_relint_point(rng);
      EXPECT_EQ(argmin_support(f, w), face.argmin[0]);
    }
  }
  EXPECT_TRUE(c.is_connected());
}

TEST(LocalFan, AtVertexAndOnRay) {
  const TropComplex c = trop_complex(plane_line());
  const TropComplex at_vertex = local_fan(c, rv({1, 1}));
  EXPECT_EQ(at_vertex.cells(), trop_complex(standard_hyperplane(2).to_kpoly()).cells());
  const TropComplex on_ray = local_fan(c, rv({1, Rat(3, 2)}));
  ASSERT_EQ(on_ray.size(), 1u);
  EXPECT_EQ(on_ray.face(0).poly, Polyhedron(2, {{{1, 0}, Rat(0)}}, {}));
  EXPECT_TRUE(local_fan(c, rv({5, 0})).empty());
}

TEST(FaceLocate, Examples) {
  const TropComplex c = trop_complex(plane_line());
  const auto v = face_locate(c, rv({1, 1}));
  ASSERT_TRUE(v);
  EXPECT_EQ(c.face(*v).dim, 0);
  const auto r = face_locate(c, rv({Rat(1, 2), Rat(1, 2)}));
  ASSERT_TRUE(r);
  EXPECT_EQ(c.face(*r).poly.ray_direction(), (IntVec{-1, -1}));
  EXPECT_FALSE(face_locate(c, rv({5, 0})));
}

TEST(NormalFan, Skeletons) {
  const TropComplex tri = normal_fan_skeleton({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(ray_directions(tri), (std::vector<IntVec>{{-1, -1}, {0, 1}, {1, 0}}));
  const TropComplex seg = normal_fan_skeleton({{0, 0}, {1, 0}});
  ASSERT_EQ(seg.size(), 1u);
  EXPECT_EQ(seg.face(0).poly, Polyhedron(2, {{{1, 0}, Rat(0)}}, {}));
  const TropComplex tet = normal_fan_skeleton({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(tet.faces_of_dimension(0).size(), 1u);
  EXPECT_EQ(tet.faces_of_dimension(1).size(), 4u);
  EXPECT_EQ(tet.faces_of_dimension(2).size(), 6u);
  EXPECT_EQ(tet.size(), 11u);
}
