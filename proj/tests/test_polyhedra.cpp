#include <doctest.h>

#include <random>

#include "intclos/error.hpp"
#include "intclos/polyhedra.hpp"

using namespace intclos;

namespace {

using Pts = std::vector<ExponentVector>;

NewtonPolyhedron gamma2(const Pts& pts) { return newton_polyhedron(2, pts); }

// k in Γ₊(A) iff <w,k> >= min_A <w,.> for all small nonnegative weights
bool weight_oracle(const Pts& support, const ExponentVector& k, int grid) {
  const std::size_t n = k.size();
  std::vector<int> w(n, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < n) {
      if (++w[i] <= grid) break;
      w[i] = 0;
      ++i;
    }
    if (i == n) return true;
    long mn = -1;
    for (const auto& a : support) {
      long d = 0;
      for (std::size_t j = 0; j < n; ++j) d += static_cast<long>(w[j]) * a[j];
      if (mn < 0 || d < mn) mn = d;
    }
    long dk = 0;
    for (std::size_t j = 0; j < n; ++j) dk += static_cast<long>(w[j]) * k[j];
    if (dk < mn) return false;
  }
}

// area under the staircase boundary by trapezoids
Rational trapezoid_area(Pts v) {
  std::sort(v.begin(), v.end());
  Rational a = 0;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    a += Rational(v[j + 1][0] - v[j][0]) * Rational(v[j][1] + v[j + 1][1]) / 2;
  }
  return a;
}

}  // namespace

TEST_CASE("Polyhedra.TrapezoidExample") {
  auto p = gamma2({{2, 1}, {1, 3}, {2, 0}, {0, 5}});
  CHECK_EQ(p.vertices(), (Pts{{0, 5}, {2, 0}}));
  int edges = 0;
  for (const auto& f : p.compact_faces()) edges += f.dim == 1;
  CHECK_EQ(edges, 1);
  CHECK_EQ(*covolume(p), 5);
  CHECK(contains_point(p, {1, 3}));
  CHECK_FALSE(contains_point(p, {1, 1}));
}

TEST_CASE("Polyhedra.StaircaseVerticesAndTermIdeal") {
  auto p = gamma2({{6, 0}, {5, 1}, {3, 2}, {1, 3}, {0, 6}, {4, 4}});
  CHECK_EQ(p.vertices(), (Pts{{0, 6}, {1, 3}, {6, 0}}));
  CHECK_EQ(term_ideal(p).generators(), (Pts{{6, 0}, {5, 1}, {3, 2}, {1, 3}, {0, 6}}));
  CHECK_EQ(compact_faces_max_dim(p), 1);
}

TEST_CASE("Polyhedra.TermIdealOfCube") {
  auto p = gamma2({{3, 0}, {2, 2}, {0, 3}});
  CHECK_EQ(term_ideal(p).generators(), (Pts{{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
  CHECK(polyhedra_equal(p, gamma2({{3, 0}, {0, 3}})));
}

TEST_CASE("Polyhedra.MinkowskiSums") {
  auto a = gamma2({{5, 0}, {1, 1}, {0, 5}});
  auto b = gamma2({{1, 0}, {0, 1}});
  CHECK_EQ(minkowski_sum(a, b).vertices(), (Pts{{0, 6}, {1, 2}, {2, 1}, {6, 0}}));
  auto c = gamma2({{2, 0}, {0, 1}});
  auto d = gamma2({{1, 0}, {0, 2}});
  CHECK_EQ(minkowski_sum(c, d).vertices(), (Pts{{0, 3}, {1, 1}, {3, 0}}));
  auto zero = gamma2({{0, 0}});
  CHECK(polyhedra_equal(minkowski_sum(a, zero), a));
  CHECK(polyhedra_equal(minkowski_sum(a, b), minkowski_sum(b, a)));
}

TEST_CASE("Polyhedra.Covolumes") {
  CHECK_EQ(*covolume(gamma2({{1, 0}, {0, 1}})), Rational(1, 2));
  CHECK_EQ(*covolume(gamma2({{5, 0}, {1, 1}, {0, 5}})), 5);
  CHECK_FALSE(covolume(gamma2({{2, 0}, {1, 1}})).has_value());
  CHECK_EQ(*covolume(newton_polyhedron(1, {{4}, {7}})), 4);
  CHECK_EQ(*covolume(newton_polyhedron(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})), 5);
  CHECK_EQ(*covolume(newton_polyhedron(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), Rational(1, 6));
}

TEST_CASE("Polyhedra.SingleVertex") {
  auto p = gamma2({{2, 3}});
  CHECK_EQ(p.vertices().size(), 1u);
  CHECK_EQ(compact_faces_max_dim(p), 0);
  CHECK_EQ(term_ideal(p).generators(), (Pts{{2, 3}}));
}

TEST_CASE("Polyhedra.WitnessWeightsSelectTheirFaces") {
  auto p = newton_polyhedron(3, {{4, 0, 0}, {0, 3, 0}, {0, 0, 5}, {1, 1, 1}, {2, 0, 1}});
  REQUIRE_FALSE(p.compact_faces().empty());
  for (const auto& f : p.compact_faces()) {
    REQUIRE(f.witness.strictly_positive());
    std::int64_t mn = -1;
    for (const auto& v : p.vertices()) {
      auto d = f.witness.dot(v);
      if (mn < 0 || d < mn) mn = d;
    }
    Pts attained;
    for (const auto& v : p.vertices()) {
      if (f.witness.dot(v) == mn) attained.push_back(v);
    }
    CHECK_EQ(attained, f.vertices);
  }
}

TEST_CASE("Polyhedra.Errors") {
  CHECK_THROWS_AS(newton_polyhedron(2, {}), InvalidArgument);
  CHECK_THROWS_AS(newton_polyhedron(4, {{1, 1, 1, 1}}), UnsupportedDimension);
  CHECK_THROWS_AS(minkowski_sum(gamma2({{1, 0}}), newton_polyhedron(3, {{1, 0, 0}})), DimensionError);
  CHECK_THROWS_AS(contains_point(gamma2({{1, 0}}), {1, 1, 1}), DimensionError);
}

TEST_CASE("PolyhedraProperty.RandomPointSets") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {2u, 3u}) {
    std::uniform_int_distribution<int> coord(0, n == 2 ? 9 : 3), count(1, 7);
    for (int trial = 0; trial < 40; ++trial) {
      Pts pts;
      int c = count(rng);
      for (int i = 0; i < c; ++i) {
        ExponentVector k(n);
        for (auto& x : k) x = coord(rng);
        pts.push_back(k);
      }
      auto p = newton_polyhedron(n, pts);
      for (const auto& v : p.vertices()) CHECK(contains_point(p, v));
      // membership agrees with the weight oracle on the bounding box
      ExponentVector k(n, 0);
      for (;;) {
        // facet normals are bounded by 9 in the plane and 2*3*3 in space
        INFO(trial);
        CHECK_EQ(contains_point(p, k), weight_oracle(pts, k, n == 2 ? 12 : 18));
        std::size_t i = 0;
        while (i < n) {
          if (++k[i] <= (n == 2 ? 9 : 4)) break;
          k[i] = 0;
          ++i;
        }
        if (i == n) break;
      }
      // term ideal: antichain of points of P, re-hull gives P back
      auto t = term_ideal(p);
      for (const auto& g : t.generators()) CHECK(contains_point(p, g));
      CHECK(polyhedra_equal(newton_polyhedron(n, t.generators()), p));
      if (n == 2) {
        auto cv = covolume(p);
        if (cv) CHECK_EQ(*cv, trapezoid_area(p.vertices()));
        auto sum = minkowski_sum(p, p);
        auto cs = covolume(sum);
        if (cv) CHECK_EQ(*cs, 4 * *cv);
      }
    }
  }
}

TEST_CASE("PolyhedraProperty.MixedCovolumeExpansion") {
  auto a = gamma2({{5, 0}, {1, 1}, {0, 5}});
  auto b = gamma2({{1, 0}, {0, 1}});
  // e(M1, M2) = 2 mixed covolume = 2 for the pair above
  CHECK_EQ(*mixed_covolume(a, b), 1);
  CHECK_EQ(*covolume(minkowski_sum(a, b)), *covolume(a) + 2 * *mixed_covolume(a, b) + *covolume(b));
  CHECK_EQ(*mixed_covolume(a, a), *covolume(a));
}
