#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "intclos/catalog.hpp"
#include "intclos/closure.hpp"
#include "intclos/error.hpp"
#include "intclos/grobner.hpp"
#include "intclos/modtools.hpp"
#include "intclos/multiplicity.hpp"
#include "intclos/polyhedra.hpp"

namespace intclos::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string in;
  std::uint64_t seed = 42;
  std::int64_t bound = 100;
  unsigned trials = 5;
  std::string k;
  std::size_t i = 0;
  std::string example;
  bool seed_set = false, bound_set = false, trials_set = false, i_set = false;
};

struct Problem {
  RingPtr ring;
  std::optional<Submodule> matrix;
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::optional<Ideal> ideal;
  std::optional<Vector> h;
  std::vector<Polynomial> phi;
  std::vector<Ideal> family;
  RandomSpec random;

  const Submodule& module() const {
    if (!matrix) throw InvalidArgument("the problem has no matrix");
    return *matrix;
  }

  const Ideal* find(const std::string& name) const {
    for (const auto& [n, i] : ideals) {
      if (n == name) return &i;
    }
    return nullptr;
  }

  const Ideal& named(const std::string& name) const {
    if (const Ideal* i = find(name)) return *i;
    throw InvalidArgument("the problem has no ideal '" + name + "'");
  }
};

// ------------------------------------------------------------- input

std::string poly_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw InvalidArgument("polynomials must be strings or integers, got " + j.dump());
}

std::vector<std::string> poly_list(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InvalidArgument("'" + field + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(poly_text(e));
  return out;
}

Json load_json(const std::string& in) {
  if (in.empty()) throw InvalidArgument("no input; pass --in FILE or --in '<json>'");
  auto first = in.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && in[first] == '{') return Json::parse(in);
  std::ifstream f(in);
  if (!f) throw InvalidArgument("cannot open '" + in + "'");
  return Json::parse(f);
}

Problem load_problem(const Options& opts) {
  Json j = load_json(opts.in);
  if (!j.is_object()) throw InvalidArgument("the problem must be a JSON object");
  if (!j.contains("vars") || !j["vars"].is_array()) throw InvalidArgument("'vars' must be an array of names");
  Problem p;
  p.ring = make_ring(j["vars"].get<std::vector<std::string>>());
  if (j.contains("matrix")) {
    const Json& m = j["matrix"];
    if (!m.is_array() || m.empty()) throw InvalidArgument("'matrix' must be a non-empty array of rows");
    std::vector<std::vector<std::string>> grid;
    for (const auto& row : m) {
      grid.push_back(poly_list(row, "matrix"));
      if (grid.back().size() != grid.front().size()) throw DimensionError("'matrix' is not rectangular");
    }
    if (grid.front().empty()) throw InvalidArgument("'matrix' has no columns");
    p.matrix = PolyMatrix::parse(grid, p.ring);
  }
  if (j.contains("ideals")) {
    if (!j["ideals"].is_object()) throw InvalidArgument("'ideals' must map names to generator lists");
    for (const auto& [name, gens] : j["ideals"].items()) {
      p.ideals.emplace_back(name, Ideal::parse(poly_list(gens, "ideals." + name), p.ring));
    }
  }
  if (j.contains("ideal")) p.ideal = Ideal::parse(poly_list(j["ideal"], "ideal"), p.ring);
  if (j.contains("h")) {
    Vector h;
    for (const auto& s : poly_list(j["h"], "h")) h.push_back(parse_poly(s, p.ring));
    p.h = std::move(h);
  }
  if (j.contains("phi")) {
    auto t = make_ring({"t"});
    for (const auto& s : poly_list(j["phi"], "phi")) p.phi.push_back(parse_poly(s, t));
  }
  if (j.contains("family")) {
    if (!j["family"].is_array()) throw InvalidArgument("'family' must be an array");
    for (const auto& e : j["family"]) {
      if (e.is_string()) {
        p.family.push_back(p.named(e.get<std::string>()));
      } else {
        p.family.push_back(Ideal::parse(poly_list(e, "family"), p.ring));
      }
    }
  }
  if (j.contains("random")) {
    const Json& r = j["random"];
    if (!r.is_object()) throw InvalidArgument("'random' must be an object");
    p.random.seed = r.value("seed", p.random.seed);
    p.random.bound = r.value("bound", p.random.bound);
    p.random.trials = r.value("trials", p.random.trials);
  }
  if (opts.seed_set) p.random.seed = opts.seed;
  if (opts.bound_set) p.random.bound = opts.bound;
  if (opts.trials_set) p.random.trials = opts.trials;
  p.random.validate();
  return p;
}

// ------------------------------------------------------------- output

Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Json mult_json(const MultiplicityValue& v, const RandomSpec& rs) {
  Json j;
  j["value"] = v.value;
  j["method"] = to_string(v.method);
  if (v.method == MultiplicityMethod::GenericReduction) {
    j["seed"] = rs.seed;
    j["bound"] = rs.bound;
    j["trials"] = v.trials;
    j["per_trial"] = v.per_trial;
  }
  return j;
}

Json polyhedron_json(const NewtonPolyhedron& p) {
  Json j;
  j["vertices"] = p.vertices();
  Json faces = Json::array();
  for (const auto& f : p.compact_faces()) {
    if (f.dim == 0) continue;
    faces.push_back({{"dim", f.dim}, {"vertices", f.vertices}});
  }
  j["compact_faces"] = faces;
  auto cv = covolume(p);
  j["covolume"] = cv ? rational_json(*cv) : Json(nullptr);
  return j;
}

Json nnd_json(const NNDReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["rank"] = r.rank;
  Json faces = Json::array();
  for (const auto& f : r.faces) {
    faces.push_back({{"dim", f.dim}, {"vertices", f.vertices}, {"unit", f.unit}});
  }
  j["faces"] = faces;
  if (!r.sub_reports.empty()) {
    Json subs = Json::array();
    for (std::size_t i = 0; i < r.sub_reports.size(); ++i) {
      subs.push_back({{"rows", r.sub_rows[i]}, {"report", nnd_json(r.sub_reports[i])}});
    }
    j["sub_reports"] = subs;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json decomp_json(const DecomposabilityReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["method"] = to_string(r.method);
  Json per = Json::array();
  for (const auto& ev : r.per_l) {
    Json e;
    e["rows"] = ev.rows;
    if (ev.e) e["e"] = ev.e->value;
    if (ev.delta) e["delta"] = ev.delta->value;
    if (ev.minors_nnd) e["minors_nnd"] = *ev.minors_nnd;
    if (ev.same_polyhedron) e["same_polyhedron"] = *ev.same_polyhedron;
    per.push_back(e);
  }
  j["per_l"] = per;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json opt_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::vector<std::string> monomial_strings(const MonomialIdeal& m, const RingPtr& r) {
  return m.to_ideal(r).to_strings();
}

// ------------------------------------------------------------- commands

struct Outcome {
  Json report;
  int code = kOk;
  std::string summary;
};

/// Ideal-valued commands act on --k NAME, then "ideal", then I_r(M).
std::pair<Ideal, std::string> target_ideal(const Problem& p, const Options& o) {
  if (!o.k.empty()) return {p.named(o.k), "ideals." + o.k};
  if (p.ideal) return {*p.ideal, "ideal"};
  const Submodule& m = p.module();
  return {fitting_ideal(m, rank(m)), "fitting"};
}

Outcome cmd_rank(const Problem& p, const Options&) {
  std::size_t r = rank(p.module());
  return {Json{{"rank", r}}, kOk, "rank " + std::to_string(r)};
}

Outcome cmd_fitting(const Problem& p, const Options& o) {
  const Submodule& m = p.module();
  std::size_t i = o.i_set ? o.i : rank(m);
  Ideal f = minimal_generators(fitting_ideal(m, i));
  Json j{{"i", i}, {"generators", f.to_strings()}};
  return {j, kOk, "I_" + std::to_string(i) + " has " + std::to_string(f.gens().size()) + " generators"};
}

Outcome cmd_newton(const Problem& p, const Options& o) {
  auto [ideal, source] = target_ideal(p, o);
  Json j{{"source", source}};
  j.update(polyhedron_json(newton_polyhedron(ideal)));
  return {j, kOk, std::to_string(j["vertices"].size()) + " vertices"};
}

Outcome cmd_term_ideal(const Problem& p, const Options& o) {
  auto [ideal, source] = target_ideal(p, o);
  auto t = monomial_strings(term_ideal(newton_polyhedron(ideal)), p.ring);
  return {Json{{"source", source}, {"generators", t}}, kOk, std::to_string(t.size()) + " monomial generators"};
}

Outcome cmd_zmod(const Problem& p, const Options&) {
  Submodule z = z_module(p.module());
  return {Json{{"z_module", z.to_strings()}}, kOk, "Z(M) has " + std::to_string(z.cols()) + " generators"};
}

int nnd_code(NNDVerdict v) {
  switch (v) {
    case NNDVerdict::Nondegenerate:
      return kOk;
    case NNDVerdict::Degenerate:
      return kNegative;
    case NNDVerdict::NotApplicable:
      return kNotCertified;
  }
  return kNotCertified;
}

Outcome cmd_nnd(const Problem& p, const Options& o) {
  NNDReport r;
  Json j;
  if (!o.k.empty() || p.ideal) {
    auto [ideal, source] = target_ideal(p, o);
    j["source"] = source;
    r = nnd_check_ideal(ideal);
  } else {
    j["source"] = "matrix";
    r = nnd_check_module(p.module());
  }
  j.update(nnd_json(r));
  return {j, nnd_code(r.verdict), to_string(r.verdict)};
}

Outcome cmd_jm(const Problem& p, const Options&) {
  JMIdeal jm = jm_ideal(p.module());
  Json j{{"jm", minimal_generators(jm.jm).to_strings()}, {"jm0", monomial_strings(jm.jm0, p.ring)}};
  return {j, kOk, "J_M has " + std::to_string(j["jm"].size()) + " generators"};
}

Outcome cmd_closure(const Problem& p, const Options& o) {
  const Submodule& m = p.module();
  ClosureResult c = o.k.empty() ? closure_nnd(m) : closure_via_minors(m, p.named(o.k));
  Json j{{"closure", c.generators.to_strings()},
         {"k", minimal_generators(c.k).to_strings()},
         {"provenance", to_string(c.provenance)}};
  return {j, kOk, "closure has " + std::to_string(c.generators.cols()) + " generators"};
}

Outcome cmd_membership(const Problem& p, const Options& o) {
  if (!p.h) throw InvalidArgument("membership needs a vector 'h'");
  const Submodule& m = p.module();
  Ideal k = o.k.empty() ? closure_nnd(m).k : p.named(o.k);
  bool member = integral_membership(*p.h, m, k);
  Json j{{"member", member}, {"k_source", o.k.empty() ? "computed-nnd" : "ideals." + o.k}};
  return {j, member ? kOk : kNegative, member ? "h is integral over M" : "h is not integral over M"};
}

Outcome cmd_decomposable(const Problem& p, const Options&) {
  auto r = decomposable_check(p.module(), p.random);
  int code = r.verdict == DecompVerdict::Yes ? kOk : r.verdict == DecompVerdict::No ? kNegative : kNotCertified;
  return {decomp_json(r), code, "integrally decomposable: " + to_string(r.verdict)};
}

Outcome cmd_spread(const Problem& p, const Options& o) {
  Json j;
  unsigned s = 0;
  if (!p.family.empty()) {
    s = spread_direct_sum(p.family);
    j["method"] = "direct-sum";
  } else if (!o.k.empty() || p.ideal) {
    auto [ideal, source] = target_ideal(p, o);
    if (!ideal.is_monomial()) throw NotCertified("analytic spread is only computed for monomial ideals");
    s = analytic_spread_monomial_ideal(term_ideal(newton_polyhedron(ideal)));
    j["method"] = "monomial-ideal";
  } else {
    s = analytic_spread_nnd_module(p.module());
    j["method"] = "nnd-module";
  }
  j["spread"] = s;
  return {j, kOk, "analytic spread " + std::to_string(s)};
}

Outcome mult_outcome(const std::string& what, const MultiplicityValue& v, const RandomSpec& rs) {
  return {mult_json(v, rs), kOk, what + " = " + std::to_string(v.value)};
}

Outcome cmd_mult(const Problem& p, const Options& o) {
  auto [ideal, source] = target_ideal(p, o);
  auto out = mult_outcome("e(" + source + ")", hs_multiplicity(ideal, p.random), p.random);
  out.report["source"] = source;
  return out;
}

Outcome cmd_mixed(const Problem& p, const Options&) {
  if (p.family.empty()) throw InvalidArgument("mixed multiplicity needs a 'family' of ideals");
  return mult_outcome("mixed multiplicity", mixed_multiplicity(p.family, p.random), p.random);
}

Outcome cmd_delta(const Problem& p, const Options&) {
  return mult_outcome("delta(M)", delta(p.module(), p.random), p.random);
}

Outcome cmd_brim(const Problem& p, const Options&) {
  return mult_outcome("e(M)", buchsbaum_rim(p.module(), p.random), p.random);
}

/// With a second ideal: smallest k with L^{k+1} = I L^k. Otherwise the
/// vertex-alternation reduction (g1, g2) of a monomial ideal in two variables.
Outcome cmd_reduce(const Problem& p, const Options& o) {
  const Ideal* i = p.ideal ? &*p.ideal : p.find("I");
  const std::string lname = o.k.empty() ? "L" : o.k;
  const Ideal* l = p.find(lname);
  if (!i) throw InvalidArgument("reduce needs 'ideal' or an ideal named 'I'");
  if (l) {
    auto k = ideal_reduction_check(*i, *l);
    Json j{{"reduction", k.has_value()}, {"k", k ? Json(*k) : Json(nullptr)}};
    return {j, k ? kOk : kNegative, k ? "reduction with k = " + std::to_string(*k) : "not a reduction"};
  }
  if (!i->is_monomial()) throw NotCertified("vertex alternation needs a monomial ideal");
  auto [g1, g2] = vertex_alternation_reduction(term_ideal(newton_polyhedron(*i)), p.ring);
  Json j{{"g1", g1.to_string()}, {"g2", g2.to_string()}};
  if (o.i_set) j["A"] = reduction_matrix_Ap({g1, g2}, o.i).to_strings();
  return {j, kOk, "reduction (" + g1.to_string() + ", " + g2.to_string() + ")"};
}

Outcome cmd_arc(const Problem& p, const Options&) {
  if (!p.h) throw InvalidArgument("arc needs a vector 'h'");
  if (p.phi.empty()) throw InvalidArgument("arc needs 'phi'");
  ArcReport r = arc_pullback_test(p.module(), *p.h, p.phi);
  Json orders = Json::array();
  for (const auto& a : r.orders) {
    orders.push_back({{"i", a.i}, {"module_order", opt_json(a.module_order)}, {"augmented_order", opt_json(a.augmented_order)}});
  }
  Json j{{"member", r.member}, {"orders", orders}};
  return {j, r.member ? kOk : kNegative, r.member ? "the arc does not separate h" : "the arc rejects h"};
}

// ------------------------------------------------------------- examples

class Checks {
 public:
  void add(const std::string& name, const Json& value, const Json& expected, const char* source,
           const std::string& note = {}) {
    bool pass = value == expected;
    Json c{{"name", name}, {"value", value}, {"expected", expected}, {"source", source}, {"pass", pass}};
    if (!note.empty()) c["note"] = note;
    list_.push_back(c);
    ok_ = ok_ && pass;
  }

  bool ok() const { return ok_; }
  const Json& json() const { return list_; }

 private:
  Json list_ = Json::array();
  bool ok_ = true;
};

constexpr const char* kStated = "stated";
constexpr const char* kDerived = "derived";

Ideal term_closure(const Ideal& i) { return term_ideal(newton_polyhedron(i)).to_ideal(i.ring_ptr()); }

void ex_basics(const CatalogExample& e, const RandomSpec& rs, Json& head, Checks& c) {
  auto r = e.ring();
  auto m = e.module(r);
  auto h = e.vector("h", r), mem = e.vector("member", r);
  auto k = e.ideal("K", r);
  auto mh = m.with_column(h);
  auto i2 = fitting_ideal(m, 2);
  head["e_M"] = buchsbaum_rim(m, rs).value;
  head["e_Mh"] = buchsbaum_rim(mh, rs).value;
  head["e_I2"] = hs_multiplicity(i2, rs).value;
  head["e_I2h"] = hs_multiplicity(fitting_ideal(mh, 2), rs).value;
  head["h_integral"] = integral_membership(h, m, k);
  head["member_integral"] = integral_membership(mem, m, k);
  c.add("e(M)", head["e_M"], 7, kStated);
  c.add("e(M + Rh)", head["e_Mh"], 5, kStated);
  c.add("e(I2(M))", head["e_I2"], 8, kStated);
  c.add("e(I2(M + Rh))", head["e_I2h"], 6, kStated);
  c.add("I2(M) inside K", local_contained(i2, k), true, kDerived);
  c.add("e(K)", hs_multiplicity(k, rs).value, 8, kDerived, "K is integrally closed, so K is the closure of I2(M)");
  c.add("h integral", head["h_integral"], false, kStated);
  c.add("member integral", head["member_integral"], true, kStated);
}

void ex_morph(const CatalogExample& e, const RandomSpec&, Json& head, Checks& c) {
  auto r = e.ring();
  auto t = make_ring({"t"});
  std::vector<Polynomial> phi;
  for (const auto& s : e.phi) phi.push_back(parse_poly(s, t));
  ArcReport a = arc_pullback_test(e.module(r), e.vector("h", r), phi);
  for (const auto& o : a.orders) {
    if (o.i != 2) continue;
    head["module_order"] = opt_json(o.module_order);
    head["augmented_order"] = opt_json(o.augmented_order);
  }
  head["h_integral"] = a.member;
  c.add("t-order of I2(phi*M)", head["module_order"], 6, kDerived, "univariate determinant expansion");
  c.add("t-order of I2(phi*[M|h])", head["augmented_order"], 4, kDerived, "univariate determinant expansion");
  c.add("h integral", a.member, false, kStated);
}

void ex_exidcd(const CatalogExample& e, const RandomSpec& rs, Json& head, Checks& c) {
  auto r = e.ring();
  auto m = e.module(r);
  auto i = e.ideal("I", r), l = e.ideal("L", r), lmin = e.ideal("Lmin", r);
  head["e_I"] = hs_multiplicity(i, rs).value;
  c.add("e(I)", head["e_I"], 11, kStated);
  auto d = decomposable_check(m, rs);
  Json per = Json::array();
  for (const auto& ev : d.per_l) {
    Json rows = ev.rows;
    Json ej = ev.e ? Json(ev.e->value) : Json(nullptr), dj = ev.delta ? Json(ev.delta->value) : Json(nullptr);
    per.push_back({{"rows", rows}, {"e", ej}, {"delta", dj}});
    c.add("e(M_L) for L = " + rows.dump(), ej, 33, kStated);
    c.add("delta(M_L) for L = " + rows.dump(), dj, 33, kStated);
  }
  head["integrally_decomposable"] = d.verdict == DecompVerdict::Yes;
  head["e"] = per.empty() ? Json(nullptr) : per.front()["e"];
  head["delta"] = per.empty() ? Json(nullptr) : per.front()["delta"];
  head["per_l"] = per;
  c.add("integrally decomposable", head["integrally_decomposable"], true, kStated);
  Submodule closure = minimal_generators(intersect(z_module(m), direct_sum({lmin, lmin, lmin})));
  head["closure"] = closure.to_strings();
  c.add("closure equals the displayed matrix", module_equal(closure, e.named_matrix("closure", r)), true, kStated);
  auto k = ideal_reduction_check(i, l);
  head["reduction_k"] = k ? Json(*k) : Json(nullptr);
  c.add("I L = L^2", ideal_equal(i * l, l * l), true, kStated);
  c.add("minimal reduction exponent", head["reduction_k"], 0, kDerived, "L equals I, so already L = I L^0");
}

void ex_exczero(const CatalogExample& e, const RandomSpec& rs, Json& head, Checks& c, int a) {
  auto r = e.ring();
  auto m = e.module(r);
  auto i2 = fitting_ideal(m, 2);
  head["fitting_ideal"] = minimal_generators(i2).to_strings();
  bool matches = local_ideal_equal(i2, e.ideal("I2", r));
  bool cond2 = wdcentral_condition2(m, rs);
  head["condition2"] = cond2;
  Submodule z = z_module(m);
  head["z_module"] = z.to_strings();
  c.add("Z(M) = {h3 = h1 + h2}", module_equal(z, e.named_matrix("Z", r)), true, kStated);
  if (a >= 3) {
    c.add("I2(M) matches the displayed ideal locally", matches, true, kStated);
    c.add("closure of I2(M) equals closure of J_M", cond2, true, kStated);
    ClosureResult res = closure_nnd(m);
    head["closure"] = res.generators.to_strings();
    c.add("closure equals the displayed matrix locally", local_module_equal(res.generators, e.named_matrix("closure", r)),
          true, kStated);
    return;
  }
  const std::string why = "for a = 2 the minor x^2 y^2 - x^a y^a vanishes and I2(M) = (x^3 - y^3)(x, y)";
  c.add("I2(M) matches the displayed ideal locally", matches, false, kDerived, why);
  Ideal expected(r, {parse_poly("x^4 - x*y^3", r), parse_poly("x^3*y - y^4", r)});
  c.add("I2(M) = (x^3 - y^3)(x, y)", ideal_equal(i2, expected), true, kDerived);
  c.add("closure of I2(M) equals closure of J_M", cond2, false, kDerived, why);
  std::string verdict = "certified";
  try {
    ClosureResult res = closure_nnd(m);
    head["closure"] = res.generators.to_strings();
  } catch (const NotCertified&) {
    verdict = "not-certified";
    head["closure"] = nullptr;
  }
  c.add("closure_nnd", verdict, "not-certified", kDerived, why);
}

void ex_irjmcb(const CatalogExample& e, const RandomSpec&, Json& head, Checks& c) {
  auto r = e.ring();
  auto m = e.module(r);
  head["rank"] = rank(m);
  head["nnd"] = to_string(nnd_check_ideal(fitting_ideal(m, 1)).verdict);
  ClosureResult res = closure_via_minors(m, e.ideal("K", r));
  head["closure_equals_M"] = module_equal(res.generators, m);
  Submodule c0 = intersect(z_module(m), direct_sum({term_closure(row_ideal(m, 0)), term_closure(row_ideal(m, 1))}));
  head["c0_equals_M"] = module_equal(c0, m);
  c.add("rank", head["rank"], 1, kStated);
  c.add("I1(M) Newton non-degenerate", head["nnd"], to_string(NNDVerdict::Degenerate), kStated);
  c.add("closure equals M", head["closure_equals_M"], true, kStated);
  c.add("C0(M) equals M", head["c0_equals_M"], true, kStated);
}

void ex_cmnotid(const CatalogExample& e, const RandomSpec& rs, Json& head, Checks& c) {
  auto r = e.ring();
  auto m = e.module(r);
  auto t = term_ideal(newton_polyhedron(fitting_ideal(m, 2)));
  head["term_ideal"] = monomial_strings(t, r);
  c.add("term ideal of I2(M) is m^3", t == term_ideal(newton_polyhedron(maximal_ideal_power(r, 3))), true, kStated);
  Submodule z = z_module(m);
  head["z_module"] = z.to_strings();
  c.add("Z(M) spanned by (1,0,1), (0,1,1)", module_equal(z, e.named_matrix("Z", r)), true, kStated);
  auto d = decomposable_check(m, rs);
  head["decomposable"] = d.verdict == DecompVerdict::Yes;
  head["per_l"] = decomp_json(d)["per_l"];
  for (const auto& ev : d.per_l) {
    Json rows = ev.rows;
    c.add("delta(M_L) for L = " + rows.dump(), ev.delta ? Json(ev.delta->value) : Json(nullptr), 5, kStated);
    c.add("e(M_L) for L = " + rows.dump(), ev.e ? Json(ev.e->value) : Json(nullptr), 8, kStated);
  }
  c.add("integrally decomposable", head["decomposable"], false, kStated);
  ClosureResult res = closure_via_minors(m, e.ideal("K", r));
  head["closure"] = res.generators.to_strings();
  c.add("closure equals the displayed matrix", module_equal(res.generators, e.named_matrix("closure", r)), true, kStated);
  head["condition2"] = wdcentral_condition2(m, rs);
  c.add("closure of I2(M) equals closure of J_M", head["condition2"], false, kStated);
}

void ex_dekod(const CatalogExample& e, const RandomSpec& rs, Json& head, Checks& c) {
  auto r = e.ring();
  auto m = e.module(r);
  auto k = e.ideal("K", r);
  head["e_M"] = buchsbaum_rim(m, rs).value;
  head["delta"] = delta(m, rs).value;
  head["decomposable"] = decomposable_check(m, rs).verdict == DecompVerdict::Yes;
  ClosureResult n3 = closure_via_minors(m, k);
  Ideal i2n = fitting_ideal(n3.generators, 2);
  head["I2_closure"] = monomial_strings(term_ideal(newton_polyhedron(i2n)), r);
  head["closure"] = n3.generators.to_strings();
  auto m1 = row_ideal(m, 0), m2 = row_ideal(m, 1);
  c.add("e(M1)", hs_multiplicity(m1, rs).value, 10, kStated);
  c.add("e(M2)", hs_multiplicity(m2, rs).value, 2, kStated);
  c.add("e(M1, M2)", mixed_multiplicity({m1, m2}, rs).value, 2, kStated);
  c.add("delta(M)", head["delta"], 14, kStated);
  c.add("e(M)", head["e_M"], 22, kStated);
  c.add("integrally decomposable", head["decomposable"], false, kStated);
  auto i2 = fitting_ideal(m, 2);
  c.add("I2(M) Newton non-degenerate", to_string(nnd_check_ideal(i2).verdict), to_string(NNDVerdict::Nondegenerate),
        kStated);
  c.add("vertices of the Newton polyhedron of I2(M)", Json(newton_polyhedron(i2).vertices()),
        Json(std::vector<ExponentVector>{{0, 6}, {1, 3}, {6, 0}}), kStated);
  c.add("closure equals the displayed matrix", module_equal(n3.generators, e.named_matrix("closure", r)), true, kStated);
  c.add("I2 of the closure equals K", ideal_equal(i2n, k), true, kStated);
  c.add("K = F1 F2", ideal_equal(k, e.ideal("F1", r) * e.ideal("F2", r)), true, kStated);
}

void ex_monmod(const CatalogExample& e, const RandomSpec&, Json& head, Checks& c) {
  auto r = e.ring();
  auto m = e.module(r);
  head["nnd"] = to_string(nnd_check_module(m).verdict);
  ClosureResult res = closure_nnd(m);
  head["closure"] = res.generators.to_strings();
  head["spread"] = analytic_spread_nnd_module(m);
  c.add("Newton non-degenerate", head["nnd"], to_string(NNDVerdict::Nondegenerate), kStated);
  Submodule sum = direct_sum({term_closure(row_ideal(m, 0)), term_closure(row_ideal(m, 1))});
  c.add("closure equals M1^0 + M2^0", module_equal(res.generators, sum), true, kStated);
  c.add("analytic spread", head["spread"], 3, kStated);
}

void ex_irjmstrict(const CatalogExample& e, const RandomSpec&, Json& head, Checks& c) {
  auto r = e.ring();
  auto m = e.module(r);
  auto i2 = fitting_ideal(m, 2);
  auto jmbar = e.ideal("JMbar", r);
  head["fitting_ideal"] = minimal_generators(i2).to_strings();
  head["jm_closure"] = monomial_strings(jm_ideal(m).jm0, r);
  Ideal y(r, {parse_poly("y", r)});
  bool strict = contained(i2, y) && !contained(jmbar, y);
  head["strict"] = strict;
  c.add("I2(M) matches the displayed ideal locally", local_ideal_equal(i2, e.ideal("I2", r)), true, kStated);
  c.add("term ideal of J_M", ideal_equal(jm_ideal(m).jm0.to_ideal(r), jmbar), true, kStated);
  c.add("closure of I2(M) strictly inside closure of J_M", strict, true, kDerived,
        "I2(M) lies in the prime (y) while x^3 does not");
}

void ex_reduc(const CatalogExample& e, const RandomSpec& rs, Json& head, Checks& c) {
  auto r = e.ring();
  auto m = e.module(r);
  auto i = e.ideal("I", r);
  auto [g1, g2] = vertex_alternation_reduction(term_ideal(newton_polyhedron(i)), r);
  Submodule a = reduction_matrix_Ap({g1, g2}, 2);
  head["g1"] = g1.to_string();
  head["g2"] = g2.to_string();
  head["A"] = a.to_strings();
  head["e_A"] = buchsbaum_rim(a, rs).value;
  head["e_M"] = buchsbaum_rim(m, rs).value;
  Ideal g(r, {g1, g2});
  c.add("A inside I + I", contained(a, m), true, kDerived);
  c.add("I2(A) = (g1, g2)^2", ideal_equal(fitting_ideal(a, 2), power(g, 2)), true, kDerived);
  c.add("covolume of (g1, g2) equals covolume of I", covolume(newton_polyhedron(g)) == covolume(newton_polyhedron(i)), true,
        kDerived);
  c.add("e(A) = e(I + I)", head["e_A"] == head["e_M"], true, kDerived, "equal multiplicities make A a reduction");
}

using ExampleFn = std::function<void(const CatalogExample&, const RandomSpec&, Json&, Checks&)>;

const std::map<std::string, ExampleFn>& example_runners() {
  static const std::map<std::string, ExampleFn> runners = {
      {"basics", ex_basics},
      {"morphEx", ex_morph},
      {"exidcd", ex_exidcd},
      {"exCzero-2", [](auto& e, auto& rs, auto& h, auto& c) { ex_exczero(e, rs, h, c, 2); }},
      {"exCzero-3", [](auto& e, auto& rs, auto& h, auto& c) { ex_exczero(e, rs, h, c, 3); }},
      {"IrJMcb", ex_irjmcb},
      {"CMnotID", ex_cmnotid},
      {"deKod", ex_dekod},
      {"monModAS", ex_monmod},
      {"IrJMstrict", ex_irjmstrict},
      {"reducDSum", ex_reduc},
  };
  return runners;
}

Json run_example(const CatalogExample& e, const RandomSpec& rs, bool& passed) {
  Json head;
  Checks checks;
  example_runners().at(e.id)(e, rs, head, checks);
  Json j{{"id", e.id}};
  j.update(head);
  j["checks"] = checks.json();
  j["passed"] = checks.ok();
  passed = checks.ok();
  return j;
}

RandomSpec example_random(const Options& o) {
  RandomSpec rs;
  if (o.seed_set) rs.seed = o.seed;
  if (o.bound_set) rs.bound = o.bound;
  if (o.trials_set) rs.trials = o.trials;
  rs.validate();
  return rs;
}

Outcome cmd_example(const Options& o) {
  RandomSpec rs = example_random(o);
  if (o.example.empty() || o.example == "list") {
    Json list = Json::array();
    for (const auto& e : example_catalog()) list.push_back({{"id", e.id}, {"summary", e.summary}});
    return {Json{{"examples", list}}, kOk, std::to_string(list.size()) + " examples"};
  }
  if (o.example == "all") {
    Json all = Json::array();
    bool ok = true;
    for (const auto& e : example_catalog()) {
      bool passed = false;
      all.push_back(run_example(e, rs, passed));
      ok = ok && passed;
    }
    return {Json{{"examples", all}, {"passed", ok}}, ok ? kOk : kNegative,
            ok ? "all examples passed" : "some examples failed"};
  }
  const CatalogExample& e = find_example(o.example);
  bool passed = false;
  Json j = run_example(e, rs, passed);
  return {j, passed ? kOk : kNegative, e.id + (passed ? ": all checks passed" : ": some checks failed")};
}

using Command = std::function<Outcome(const Problem&, const Options&)>;

const std::vector<std::pair<std::string, std::pair<Command, std::string>>>& commands() {
  static const std::vector<std::pair<std::string, std::pair<Command, std::string>>> list = {
      {"rank", {cmd_rank, "generic rank of the matrix"}},
      {"fitting", {cmd_fitting, "Fitting ideal I_i (default i = rank)"}},
      {"newton", {cmd_newton, "Newton polyhedron of an ideal"}},
      {"term-ideal", {cmd_term_ideal, "term ideal of the Newton polyhedron"}},
      {"zmod", {cmd_zmod, "rank-preserving module Z(M)"}},
      {"nnd", {cmd_nnd, "Newton non-degeneracy of an ideal or of the matrix"}},
      {"jm", {cmd_jm, "the ideal J_M and its term ideal"}},
      {"closure", {cmd_closure, "integral closure (NND, or minors constraint with --k)"}},
      {"membership", {cmd_membership, "integral dependence of h over M"}},
      {"decomposable", {cmd_decomposable, "integral decomposability"}},
      {"spread", {cmd_spread, "analytic spread"}},
      {"mult", {cmd_mult, "Hilbert-Samuel multiplicity"}},
      {"mixed", {cmd_mixed, "mixed multiplicity of a family"}},
      {"delta", {cmd_delta, "mixed multiplicity sum of the row ideals"}},
      {"brim", {cmd_brim, "Buchsbaum-Rim multiplicity"}},
      {"reduce", {cmd_reduce, "reduction test or vertex-alternation reduction"}},
      {"arc", {cmd_arc, "arc pull-back test"}},
  };
  return list;
}

Json error_json(const char* kind, const std::exception& e) {
  return Json{{"error", kind}, {"message", e.what()}};
}

int fail(std::ostream& out, std::ostream& err, const char* kind, const std::exception& e, int code) {
  out << error_json(kind, e).dump(2) << "\n";
  err << kind << ": " << e.what() << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral closures and multiplicities of submodules of free modules", "intclos"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--in", o.in, "problem file, or inline JSON");
  auto* seed = app.add_option("--seed", o.seed, "random seed (default 42)");
  auto* bound = app.add_option("--bound", o.bound, "coefficient bound (default 100)");
  auto* trials = app.add_option("--trials", o.trials, "number of trials (default 5)");
  app.add_option("--k", o.k, "name of a supplied ideal");
  auto* iopt = app.add_option("--i", o.i, "minor size or reduction rank");
  for (const auto& [name, cmd] : commands()) app.add_subcommand(name, cmd.second)->fallthrough();
  auto* ex = app.add_subcommand("example", "run a built-in example (list, all, or an id)")->fallthrough();
  ex->add_option("id", o.example, "example id");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, msg;
    int code = app.exit(e, help, msg);
    out << help.str();
    err << msg.str();
    return code == 0 ? kOk : kInputError;
  }
  o.seed_set = seed->count() > 0;
  o.bound_set = bound->count() > 0;
  o.trials_set = trials->count() > 0;
  o.i_set = iopt->count() > 0;

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Outcome result;
    if (name == "example") {
      result = cmd_example(o);
    } else {
      Problem p = load_problem(o);
      for (const auto& [n, cmd] : commands()) {
        if (n == name) result = cmd.first(p, o);
      }
    }
    out << result.report.dump(2) << "\n";
    err << result.summary << "\n";
    return result.code;
  } catch (const ParseError& e) {
    return fail(out, err, "parse-error", e, kInputError);
  } catch (const DimensionError& e) {
    return fail(out, err, "dimension-error", e, kInputError);
  } catch (const InvalidArgument& e) {
    return fail(out, err, "invalid-argument", e, kInputError);
  } catch (const nlohmann::json::exception& e) {
    return fail(out, err, "json-error", e, kInputError);
  } catch (const NotCertified& e) {
    return fail(out, err, "not-certified", e, kNotCertified);
  } catch (const UnsupportedDimension& e) {
    return fail(out, err, "unsupported-dimension", e, kNotCertified);
  } catch (const InfiniteColength& e) {
    return fail(out, err, "infinite-colength", e, kNotCertified);
  } catch (const NoStabilization& e) {
    return fail(out, err, "no-stabilization", e, kNotCertified);
  } catch (const Error& e) {
    return fail(out, err, "error", e, kInputError);
  }
}

}  // namespace intclos::cli
