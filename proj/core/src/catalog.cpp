#include "intclos/catalog.hpp"

#include "intclos/error.hpp"

namespace intclos {

namespace {

using Grid = std::vector<std::vector<std::string>>;

std::string p(const std::string& s, int a) {
  std::string out;
  for (char c : s) {
    if (c == 'a') {
      out += std::to_string(a);
    } else {
      out += c;
    }
  }
  return out;
}

CatalogExample exczero(int a) {
  // exponents written with the placeholder 'a'
  CatalogExample e;
  e.id = "exCzero-" + std::to_string(a);
  e.summary = "rank 2 module whose closure is {(h1, h2, h1 + h2) : h1, h2 in (x^a, xy, y^a)}";
  e.vars = {"x", "y"};
  e.matrix = {{p("x^a", a), "x*y", p("y^a", a)},
              {p("y^a", a), p("x^a", a), "x*y"},
              {p("x^a + y^a", a), p("x*y + x^a", a), p("y^a + x*y", a)}};
  const std::string a1 = std::to_string(a + 1), a2 = std::to_string(2 * a);
  e.ideals["I2"] = {"x*y^" + a1 + " - x^" + a2, "x^" + a1 + "*y - y^" + a2, "x^2*y^2"};
  e.ideals["J"] = {p("x^a", a), "x*y", p("y^a", a)};
  e.matrices["Z"] = {{"1", "0"}, {"0", "1"}, {"1", "1"}};
  e.matrices["closure"] = {{p("x^a", a), "x*y", p("y^a", a), "0", "0", "0"},
                           {"0", "0", "0", p("x^a", a), "x*y", p("y^a", a)},
                           {p("x^a", a), "x*y", p("y^a", a), p("x^a", a), "x*y", p("y^a", a)}};
  return e;
}

std::vector<CatalogExample> build() {
  std::vector<CatalogExample> out;

  CatalogExample basics;
  basics.id = "basics";
  basics.summary = "closure strictly inside the sum of row closures; h = (x^3, x) is not integral";
  basics.vars = {"x", "y"};
  basics.matrix = {{"x + y", "x^3", "y^3"}, {"x", "y", "x"}};
  basics.vectors["h"] = {"x^3", "x"};
  basics.vectors["member"] = {"x^3*y^2", "x + y"};
  basics.ideals["K"] = {"(x + y - y^3)^2", "y*(x + y - y^3)", "y^6"};
  out.push_back(basics);

  CatalogExample arc = basics;
  arc.id = "morphEx";
  arc.summary = "arc (-t + t^3, t) witnesses that h is not integral";
  arc.phi = {"-t + t^3", "t"};
  out.push_back(arc);

  CatalogExample exidcd;
  exidcd.id = "exidcd";
  exidcd.summary = "integrally decomposable rank 2 module in R^3 that is not Newton non-degenerate";
  exidcd.vars = {"x", "y"};
  exidcd.matrix = {{"x^2*y", "x*y^3", "x^2 + y^5"},
                   {"x*y^3", "x^2 + y^5", "x^2*y"},
                   {"x^2*y - x*y^3", "x*y^3 - x^2 - y^5", "x^2 + y^5 - x^2*y"}};
  exidcd.ideals["I"] = {"x^2*y", "x*y^3", "x^2 + y^5"};
  exidcd.ideals["L"] = {"x^2 + y^5", "x*y^3", "x^2*y", "x^3", "y^6"};
  exidcd.ideals["Lmin"] = {"x^2 + y^5", "x*y^3", "y^6"};
  exidcd.matrices["Z"] = {{"1", "0"}, {"0", "-1"}, {"1", "1"}};
  exidcd.matrices["closure"] = {{"x^2 + y^5", "x*y^3", "y^6", "x^2 + y^5", "x*y^3", "y^6"},
                                {"x^2 + y^5", "x*y^3", "y^6", "0", "0", "0"},
                                {"0", "0", "0", "x^2 + y^5", "x*y^3", "y^6"}};
  out.push_back(exidcd);

  out.push_back(exczero(2));
  out.push_back(exczero(3));

  CatalogExample irjmcb;
  irjmcb.id = "IrJMcb";
  irjmcb.summary = "rank 1 module equal to its closure and to C0(M) while I_1(M) is degenerate";
  irjmcb.vars = {"x", "y"};
  irjmcb.matrix = {{"x^3", "x^2*y"}, {"x*(x + y)", "y*(x + y)"}};
  irjmcb.ideals["K"] = {"x*(x + y)", "y*(x + y)", "x^3", "x^2*y", "x*y^2", "y^3"};
  irjmcb.matrices["Z"] = {{"x^2"}, {"x + y"}};
  out.push_back(irjmcb);

  CatalogExample cmnotid;
  cmnotid.id = "CMnotID";
  cmnotid.summary = "closure equals C(M) but the module is not integrally decomposable";
  cmnotid.vars = {"x", "y"};
  cmnotid.matrix = {{"x^2", "y", "0"}, {"0", "x", "y^2"}, {"x^2", "x + y", "y^2"}};
  cmnotid.ideals["I2"] = {"x^3", "x^2*y^2", "y^3"};
  cmnotid.ideals["K"] = {"x^3", "x^2*y", "x*y^2", "y^3"};
  cmnotid.ideals["JM"] = {"x^2", "x*y", "y^2"};
  cmnotid.matrices["Z"] = {{"1", "0"}, {"0", "1"}, {"1", "1"}};
  cmnotid.matrices["closure"] = {{"x^2", "x*y", "y^2", "y", "0"},
                                 {"0", "0", "0", "x", "y^2"},
                                 {"x^2", "x*y", "y^2", "x + y", "y^2"}};
  out.push_back(cmnotid);

  CatalogExample dekod;
  dekod.id = "deKod";
  dekod.summary = "integrally closed, non-decomposable module whose maximal-minor closure is not simple";
  dekod.vars = {"x", "y"};
  dekod.matrix = {{"x^5", "x*y", "y^5"}, {"y^2", "x + y", "y^2"}};
  dekod.ideals["K"] = {"x^6", "x^5*y", "x^3*y^2", "x*y^3", "y^6"};
  dekod.ideals["F1"] = {"x", "y^3"};
  dekod.ideals["F2"] = {"x^5", "x^4*y", "x^2*y^2", "y^3"};
  dekod.matrices["closure"] = {
      {"y^5", "x^4*y - x^3*y^2 + x^2*y^3 - x*y^4", "x^5 - x^4*y + x^3*y^2 - x^2*y^3 + x*y^4", "x^2*y^2 - x*y^3", "0",
       "x*y"},
      {"0", "0", "0", "0", "y^2", "x + y"}};
  out.push_back(dekod);

  CatalogExample mon;
  mon.id = "monModAS";
  mon.summary = "Newton non-degenerate rank 2 module with closure M1^0 + M2^0 and analytic spread 3";
  mon.vars = {"x", "y"};
  mon.matrix = {{"x^3", "x*y", "y^3", "y^3"}, {"x^5", "x^2*y", "x*y^2", "x^5 + x^2*y"}};
  out.push_back(mon);

  CatalogExample nonid;
  nonid.id = "IrJMstrict";
  nonid.summary = "closure of I_2(M) strictly inside the closure of J_M";
  nonid.vars = {"x", "y"};
  nonid.matrix = {{"x^2", "x*y", "x^3"}, {"y^2", "y^2", "y^2"}, {"x + y", "2*y", "x^2 + y"}};
  nonid.ideals["I2"] = {"x^2*y", "x*y^2", "y^3"};
  nonid.ideals["JMbar"] = {"x^3", "x^2*y", "x*y^2", "y^3"};
  out.push_back(nonid);

  CatalogExample red;
  red.id = "reducDSum";
  red.summary = "A^2(g1, g2) from alternating vertices is a reduction of I + I";
  red.vars = {"x", "y"};
  red.matrix = {{"x^5", "x*y", "y^5", "0", "0", "0"}, {"0", "0", "0", "x^5", "x*y", "y^5"}};
  red.ideals["I"] = {"x^5", "x*y", "y^5"};
  out.push_back(red);

  return out;
}

}  // namespace

RingPtr CatalogExample::ring() const { return make_ring(vars); }

Submodule CatalogExample::module(const RingPtr& r) const { return PolyMatrix::parse(matrix, r); }

Vector CatalogExample::vector(const std::string& name, const RingPtr& r) const {
  auto it = vectors.find(name);
  if (it == vectors.end()) throw InvalidArgument("example " + id + " has no vector '" + name + "'");
  Vector v;
  for (const auto& s : it->second) v.push_back(parse_poly(s, r));
  return v;
}

Ideal CatalogExample::ideal(const std::string& name, const RingPtr& r) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw InvalidArgument("example " + id + " has no ideal '" + name + "'");
  return Ideal::parse(it->second, r);
}

Submodule CatalogExample::named_matrix(const std::string& name, const RingPtr& r) const {
  auto it = matrices.find(name);
  if (it == matrices.end()) throw InvalidArgument("example " + id + " has no matrix '" + name + "'");
  return PolyMatrix::parse(it->second, r);
}

const std::vector<CatalogExample>& example_catalog() {
  static const std::vector<CatalogExample> catalog = build();
  return catalog;
}

const CatalogExample& find_example(const std::string& id) {
  for (const auto& e : example_catalog()) {
    if (e.id == id) return e;
  }
  throw InvalidArgument("unknown example '" + id + "'");
}

}  // namespace intclos
