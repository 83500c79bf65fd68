#include <doctest.h>

#include <random>

#include "intclos/error.hpp"
#include "intclos/grobner.hpp"
#include "oracle.hpp"

using namespace intclos;

namespace {

RingPtr xy() { return make_ring({"x", "y"}); }

Ideal ideal(std::vector<std::string> g, const RingPtr& r) { return Ideal::parse(g, r); }

}  // namespace

TEST_CASE("Groebner.CyclicThreeIsKnownBasisSize") {
  auto r = make_ring({"a", "b", "c"});
  Ideal i = ideal({"a+b+c", "a*b+b*c+c*a", "a*b*c-1"}, r);
  auto gb = GroebnerBasis::compute(i);
  CHECK_EQ(gb.size(), 3u);
  CHECK_EQ(gb.colength().value(), 6u);
  for (const auto& g : i.gens()) CHECK(gb.contains(g));
}

TEST_CASE("Groebner.ColengthMatchesTruncatedLinearAlgebra") {
  auto r = xy();
  std::vector<std::vector<std::string>> cases{
      {"x^2", "y^3"},
      {"x^2*y", "x*y^3", "x^2+y^5"},
      {"x^6", "x^5*y", "x^3*y^2", "x*y^3", "y^6"},
      {"(x+y-y^3)^2", "y*(x+y-y^3)", "y^6"},
      {"x^2 + y^3", "x*y"},
  };
  for (const auto& c : cases) {
    Ideal i = ideal(c, r);
    auto value = colength(i).value();
    INFO(c[0]);
    CHECK_EQ(value, oracle::truncated_colength(i, 14));
    INFO(c[0]);
    CHECK_EQ(local_colength(i).value(), value);
  }
}

TEST_CASE("Groebner.LocalColengthIgnoresPointsAwayFromOrigin") {
  auto r = xy();
  // (x(x-1), y): two points, one at the origin
  Ideal i = ideal({"x^2 - x", "y"}, r);
  CHECK_EQ(colength(i).value(), 2u);
  CHECK_EQ(local_colength(i).value(), 1u);
  CHECK_EQ(oracle::truncated_colength(i, 10), 1u);
}

TEST_CASE("Groebner.InfiniteColength") {
  auto r = xy();
  auto c = colength(ideal({"x^2", "x*y"}, r));
  CHECK_FALSE(c.is_finite());
  CHECK_THROWS_AS(c.value(), InfiniteColength);
  CHECK_THROWS_AS(local_colength(ideal({"x"}, r), LocalColengthOptions{8}), NoStabilization);
}

TEST_CASE("Groebner.ModuleColength") {
  auto r = xy();
  // remark example matrix, expected length 7
  Submodule m = PolyMatrix::parse({{"x+y", "x^3", "y^3"}, {"x", "y", "x"}}, r);
  CHECK_EQ(local_colength(m).value(), oracle::truncated_colength(m, 12));
  CHECK_EQ(local_colength(m).value(), 7u);
  Submodule mh = m.with_column({parse_poly("x^3", r), parse_poly("x", r)});
  CHECK_EQ(local_colength(mh).value(), oracle::truncated_colength(mh, 12));
}

TEST_CASE("Groebner.ModuleOrdersAgreeOnMembership") {
  auto r = xy();
  Submodule m = PolyMatrix::parse({{"x^2", "y", "0"}, {"0", "x", "y^2"}}, r);
  Vector in{parse_poly("x^3 + x*y", r), parse_poly("x^2 + x*y^2", r)};
  Vector out{parse_poly("x", r), parse_poly("0", r)};
  for (bool pot : {false, true}) {
    for (auto base : {BaseOrder::GrevLex, BaseOrder::Lex}) {
      auto gb = GroebnerBasis::compute(m, {base, pot});
      CHECK(gb.contains(in));
      CHECK_FALSE(gb.contains(out));
      CHECK(gb.contains_all(m));
    }
  }
}

TEST_CASE("Groebner.SyzygiesAnnihilate") {
  auto r = xy();
  PolyMatrix a = PolyMatrix::parse({{"x^2*y", "x*y^3", "x^2+y^5"}}, r);
  PolyMatrix k = syzygy_kernel(a);
  REQUIRE_GT(k.cols(), 0u);
  CHECK((a * k).is_zero());
  // Koszul syzygies lie in the kernel module
  Vector kos{parse_poly("x*y^3", r), parse_poly("-x^2*y", r), parse_poly("0", r)};
  CHECK(membership(kos, k));
  PolyMatrix z = PolyMatrix(r, 2, 3);
  CHECK_EQ(syzygy_kernel(z), PolyMatrix::identity(r, 3));
}

TEST_CASE("Groebner.SyzygiesOfRankOneMatrix") {
  auto r = xy();
  PolyMatrix a = PolyMatrix::parse({{"x^3", "x^2*y"}, {"x*(x+y)", "y*(x+y)"}}, r);
  PolyMatrix k = syzygy_kernel(a);
  CHECK((a * k).is_zero());
  Vector v{parse_poly("y", r), parse_poly("-x", r)};
  CHECK(membership(v, k));
}

TEST_CASE("Groebner.IntersectionMatchesTruncatedDimensions") {
  auto r = xy();
  Ideal a = ideal({"x^3", "x*y", "y^4"}, r);
  Ideal b = ideal({"x^2 + y^2", "y^3"}, r);
  Ideal c = intersect(a, b);
  const int d = 12;
  auto sa = oracle::truncated_span(a.as_submodule(), d);
  auto sb = oracle::truncated_span(b.as_submodule(), d);
  auto sab = oracle::truncated_span((a + b).as_submodule(), d);
  std::size_t expect = sa.dim() + sb.dim() - sab.dim();
  std::size_t total = oracle::monomials_below(2, d).size();
  CHECK_EQ(oracle::truncated_colength(c, d), total - expect);
  CHECK(contained(c, a));
  CHECK(contained(c, b));
}

TEST_CASE("Groebner.ModuleIntersection") {
  auto r = xy();
  Submodule a = PolyMatrix::parse({{"1", "0"}, {"1", "x"}}, r);
  Submodule b = PolyMatrix::parse({{"x", "y"}, {"0", "0"}}, r);
  Submodule c = intersect(a, b);
  // a ∩ b = {(f, 0) : f in (x)}
  CHECK(module_equal(c, PolyMatrix::parse({{"x"}, {"0"}}, r)));
}

TEST_CASE("Groebner.ColonAndSaturation") {
  auto r = xy();
  Ideal i = ideal({"x^2*y", "x*y^2"}, r);
  CHECK(ideal_equal(colon(i, parse_poly("x*y", r)), ideal({"x", "y"}, r)));
  Ideal j = ideal({"x^3*(y-1)", "x^2*(y-1)^2"}, r);
  CHECK(ideal_equal(saturate(j, parse_poly("x", r)), ideal({"y - 1"}, r)));
  CHECK(is_unit_ideal(saturate(ideal({"x^3", "y^2", "x*y"}, r), parse_poly("x*y", r))));
  CHECK_THROWS_AS(colon(i, Polynomial(r)), InvalidArgument);
}

TEST_CASE("Groebner.MinimalGenerators") {
  auto r = xy();
  Ideal i = ideal({"x^2+y^5", "x*y^3", "x^2*y", "x^3", "y^6"}, r);
  Ideal m = minimal_generators(i);
  CHECK(ideal_equal(i, m));
  CHECK_LE(m.gens().size(), 4u);
}

TEST_CASE("Groebner.RandomMembershipAgreesWithOracle") {
  auto r = xy();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), ex(0, 4);
  auto random_poly = [&](int terms) {
    Polynomial p(r);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> e{ex(rng), ex(rng)};
      p += Polynomial::monomial(r, Monomial(e), coef(rng));
    }
    return p;
  };
  for (int trial = 0; trial < 15; ++trial) {
    Ideal i(r, {random_poly(3), random_poly(3), parse_poly("x^5", r), parse_poly("y^5", r)});
    Polynomial f = random_poly(4);
    const int d = 14;
    // (x,y)^10 lies in the ideal, so truncation is exact
    INFO(trial);
    CHECK_EQ(membership(f, i), oracle::truncated_member({f}, i.as_submodule(), d));
    INFO(trial);
    CHECK_EQ(colength(i).value(), oracle::truncated_colength(i, d));
  }
}

TEST_CASE("Groebner.RingMismatchThrows") {
  Ideal a = ideal({"x"}, xy());
  Ideal b = ideal({"x"}, make_ring({"x", "z"}));
  CHECK_THROWS_AS(contained(a, b), DimensionError);
}

TEST_CASE("Local.MembershipDiscardsOffOriginComponents") {
  auto r = make_ring({"x", "y"});
  // the line y = 1 is a second component
  auto i = Ideal::parse({"x - x*y", "y^3 - y^2"}, r);
  CHECK_FALSE(membership(parse_poly("x", r), i));
  CHECK(local_membership(parse_poly("x", r), i));
  CHECK_FALSE(local_membership(parse_poly("y", r), i));
  CHECK(local_ideal_equal(i, Ideal::parse({"x", "y^2"}, r)));
  CHECK_FALSE(ideal_equal(i, Ideal::parse({"x", "y^2"}, r)));
  // (x - 1) * x is locally the principal ideal (x)
  CHECK(local_ideal_equal(Ideal::parse({"x^2 - x"}, r), Ideal::parse({"x"}, r)));
}

TEST_CASE("Local.ModuleMembership") {
  auto r = make_ring({"x", "y"});
  auto n = PolyMatrix::parse({{"x*(1 + y)", "0"}, {"0", "y^2"}}, r);
  Vector h{parse_poly("x", r), parse_poly("y^2", r)};
  CHECK_FALSE(membership(h, n));
  CHECK(local_membership(h, n));
  Vector g{parse_poly("y", r), parse_poly("0", r)};
  CHECK_FALSE(local_membership(g, n));
  CHECK(local_module_equal(n, PolyMatrix::parse({{"x", "0"}, {"0", "y^2"}}, r)));
}
