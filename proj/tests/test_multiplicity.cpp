#include <doctest.h>

#include <random>

#include "intclos/catalog.hpp"
#include "intclos/error.hpp"
#include "intclos/grobner.hpp"
#include "intclos/modtools.hpp"
#include "intclos/multiplicity.hpp"
#include "intclos/polyhedra.hpp"
#include "oracle.hpp"

using namespace intclos;

namespace {

Submodule rows(const Submodule& m, RowSelection sel) { return project_rows(m, sel); }

Rational q(long a, long b = 1) { return Rational(a, b); }

MonomialIdeal random_staircase(std::mt19937_64& rng, int steps, int maxexp) {
  // corners (x_i, y_i) with x increasing from 0 and y decreasing to 0
  std::uniform_int_distribution<int> d(1, maxexp);
  std::vector<int> xs, ys;
  for (int i = 0; i < steps; ++i) {
    xs.push_back(d(rng));
    ys.push_back(d(rng));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::size_t k = std::min(xs.size(), ys.size());
  std::vector<ExponentVector> gens{{0, ys[0]}};
  for (std::size_t i = 1; i < k; ++i) gens.push_back({xs[i - 1], ys[i]});
  gens.push_back({xs[k - 1], 0});
  return MonomialIdeal(2, gens);
}

}  // namespace

TEST_CASE("HilbertSamuel.ExamplesFromCatalog") {
  auto ex = find_example("exidcd");
  auto r = ex.ring();
  CHECK_EQ(hs_multiplicity(ex.ideal("I", r)).value, q(11));

  auto b = find_example("basics");
  auto rb = b.ring();
  auto m = b.module(rb);
  CHECK_EQ(hs_multiplicity(fitting_ideal(m, 2)).value, q(8));
  auto mh = m.with_column(b.vector("h", rb));
  CHECK_EQ(hs_multiplicity(fitting_ideal(mh, 2)).value, q(6));
}

TEST_CASE("HilbertSamuel.DirectOnParameterIdeal") {
  auto r = make_ring({"x", "y"});
  auto v = hs_multiplicity(Ideal::parse({"y^2", "x + y"}, r));
  CHECK_EQ(v.value, q(2));
  CHECK_EQ(v.method, MultiplicityMethod::ColengthDirect);
  CHECK_FALSE(v.seed.has_value());
}

TEST_CASE("HilbertSamuel.GenericReductionIsReproducible") {
  auto r = make_ring({"x", "y"});
  auto i = Ideal::parse({"x^5", "x*y", "y^5"}, r);
  auto a = hs_multiplicity(i);
  auto b = hs_multiplicity(i);
  CHECK_EQ(a.value, q(10));
  CHECK_EQ(a.method, MultiplicityMethod::GenericReduction);
  CHECK_EQ(a.per_trial, b.per_trial);
  CHECK_EQ(a.per_trial.size(), 5u);
  CHECK_EQ(a.seed, std::optional<std::uint64_t>(42));
}

TEST_CASE("HilbertSamuel.InfiniteLocalLengthThrows") {
  auto r = make_ring({"x", "y"});
  CHECK_THROWS_AS(hs_multiplicity(Ideal::parse({"x^2", "x*y"}, r)), NoStabilization);
}

TEST_CASE("Mixed.SmallCases") {
  auto r = make_ring({"x", "y"});
  auto m = maximal_ideal_power(r, 1);
  CHECK_EQ(mixed_multiplicity({m, m}).value, q(1));
  auto a = Ideal::parse({"x^2", "y"}, r);
  auto b = Ideal::parse({"x", "y^2"}, r);
  CHECK_EQ(mixed_multiplicity({a, b}).value, q(1));
  CHECK_EQ(mixed_multiplicity({b, a}).value, q(1));
  CHECK_THROWS_AS(mixed_multiplicity({a}), DimensionError);
}

TEST_CASE("Mixed.DeKodRows") {
  auto ex = find_example("deKod");
  auto r = ex.ring();
  auto m = ex.module(r);
  auto m1 = row_ideal(m, 0), m2 = row_ideal(m, 1);
  CHECK_EQ(hs_multiplicity(m1).value, q(10));
  CHECK_EQ(hs_multiplicity(m2).value, q(2));
  CHECK_EQ(mixed_multiplicity({m1, m2}).value, q(2));
  CHECK_EQ(delta(m).value, q(14));
  CHECK_EQ(buchsbaum_rim(m).value, q(22));
}

TEST_CASE("BuchsbaumRim.Basics") {
  auto b = find_example("basics");
  auto r = b.ring();
  auto m = b.module(r);
  auto v = buchsbaum_rim(m);
  CHECK_EQ(v.value, q(7));
  CHECK_EQ(v.method, MultiplicityMethod::ColengthDirect);
  CHECK_EQ(buchsbaum_rim(m.with_column(b.vector("h", r))).value, q(5));
}

TEST_CASE("BuchsbaumRim.TooFewColumns") {
  auto r = make_ring({"x", "y"});
  auto m = PolyMatrix::parse({{"x", "y"}, {"y", "x"}}, r);
  CHECK_THROWS_AS(buchsbaum_rim(m), InfiniteColength);
}

TEST_CASE("BuchsbaumRim.CMnotIDAndExidcdProjections") {
  auto c = find_example("CMnotID");
  auto rc = c.ring();
  auto mc = c.module(rc);
  for (const auto& sel : lambda_set(mc)) {
    auto ml = rows(mc, sel);
    CHECK_EQ(delta(ml).value, q(5));
    CHECK_EQ(buchsbaum_rim(ml).value, q(8));
  }
  auto e = find_example("exidcd");
  auto re = e.ring();
  auto me = e.module(re);
  for (const auto& sel : lambda_set(me)) {
    auto ml = rows(me, sel);
    CHECK_EQ(delta(ml).value, q(33));
    CHECK_EQ(buchsbaum_rim(ml).value, q(33));
  }
}

TEST_CASE("BuchsbaumRim.DirectSumEqualsDelta") {
  auto r = make_ring({"x", "y"});
  auto a = Ideal::parse({"x^3", "x*y", "y^2"}, r);
  auto b = Ideal::parse({"x^2", "y^3"}, r);
  auto m = direct_sum({a, b});
  CHECK_EQ(buchsbaum_rim(m).value, delta(m).value);
}

TEST_CASE("BuchsbaumRim.MonotoneUnderInclusion") {
  auto r = make_ring({"x", "y"});
  auto big = direct_sum({Ideal::parse({"x^2", "x*y", "y^2"}, r), Ideal::parse({"x", "y^2"}, r)});
  auto small = direct_sum({Ideal::parse({"x^2", "y^2"}, r), Ideal::parse({"x", "y^2"}, r)});
  CHECK_GE(buchsbaum_rim(small).value, buchsbaum_rim(big).value);
  // A^p reduction of (x^2, xy, y^2) has the same multiplicity as its p-fold sum
  auto gens = Ideal::parse({"x^2", "y^2"}, r).gens();
  auto ap = reduction_matrix_Ap(gens, 2);
  auto full = direct_sum({Ideal::parse({"x^2", "x*y", "y^2"}, r), Ideal::parse({"x^2", "x*y", "y^2"}, r)});
  CHECK_EQ(buchsbaum_rim(ap).value, buchsbaum_rim(full).value);
}

TEST_CASE("Monomial.VolumeFormula") {
  CHECK_EQ(monomial_multiplicity(MonomialIdeal(2, {{5, 0}, {1, 1}, {0, 5}})).value, q(10));
  CHECK_EQ(monomial_multiplicity(MonomialIdeal(2, {{2, 0}, {0, 5}})).value, q(10));
  CHECK_EQ(monomial_multiplicity(MonomialIdeal(2, {{5, 0}, {1, 1}, {0, 5}})).method, MultiplicityMethod::Volume);
}

TEST_CASE("Monomial.ThreeOraclesAgree") {
  std::mt19937_64 rng(7);
  auto r = make_ring({"x", "y"});
  for (int t = 0; t < 25; ++t) {
    auto mi = random_staircase(rng, 1 + static_cast<int>(rng() % 5), 8);
    auto vol = monomial_multiplicity(mi).value;
    auto gen = hs_multiplicity(mi.to_ideal(r)).value;
    auto [g1, g2] = vertex_alternation_reduction(mi, r);
    auto par = local_colength(Ideal(r, {g1, g2}));
    REQUIRE(par.is_finite());
    INFO(t);
    CHECK_EQ(vol, gen);
    INFO(t);
    CHECK_EQ(vol, Rational(par.value()));
  }
}

TEST_CASE("Mixed.BilinearityOnMonomialPairs") {
  std::mt19937_64 rng(11);
  auto r = make_ring({"x", "y"});
  for (int t = 0; t < 6; ++t) {
    auto a = random_staircase(rng, 2, 5).to_ideal(r);
    auto b = random_staircase(rng, 2, 5).to_ideal(r);
    auto lhs = hs_multiplicity(a * b).value;
    auto rhs = hs_multiplicity(a).value + 2 * mixed_multiplicity({a, b}).value + hs_multiplicity(b).value;
    INFO(t);
    CHECK_EQ(lhs, rhs);
    CHECK_EQ(mixed_multiplicity({a, a}).value, hs_multiplicity(a).value);
  }
}

TEST_CASE("Reduction.ExidcdIdealPair") {
  auto ex = find_example("exidcd");
  auto r = ex.ring();
  auto i = ex.ideal("I", r);
  auto l = ex.ideal("L", r);
  // x^3 and y^6 already lie in I, so the smallest witness is k = 0
  auto k = ideal_reduction_check(i, l);
  REQUIRE(k.has_value());
  CHECK_EQ(*k, 0u);
  CHECK(ideal_equal(i * l, l * l));
}

TEST_CASE("Reduction.SmallCases") {
  auto r = make_ring({"x", "y"});
  auto i = Ideal::parse({"x^2", "y^2"}, r);
  auto m2 = maximal_ideal_power(r, 2);
  CHECK_EQ(ideal_reduction_check(i, i), std::optional<unsigned>(0));
  CHECK_EQ(ideal_reduction_check(i, m2), std::optional<unsigned>(1));
  CHECK_EQ(ideal_reduction_check(Ideal::parse({"x^2"}, r), m2), std::nullopt);
  CHECK_THROWS_AS(ideal_reduction_check(m2, i), InvalidArgument);
}

TEST_CASE("RandomSpecTest.Validation") {
  RandomSpec rs;
  rs.trials = 0;
  CHECK_THROWS_AS(rs.validate(), InvalidArgument);
  rs = RandomSpec{};
  rs.bound = 0;
  CHECK_THROWS_AS(rs.validate(), InvalidArgument);
}
