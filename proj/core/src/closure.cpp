#include "intclos/closure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "intclos/error.hpp"
#include "intclos/grobner.hpp"

namespace intclos {

std::string to_string(NNDVerdict v) {
  switch (v) {
    case NNDVerdict::Nondegenerate:
      return "nondegenerate";
    case NNDVerdict::Degenerate:
      return "degenerate";
    case NNDVerdict::NotApplicable:
      return "not-applicable";
  }
  return "unknown";
}

std::string to_string(KProvenance p) {
  return p == KProvenance::ComputedNND ? "computed-NND" : "user-supplied";
}

std::string to_string(DecompVerdict v) {
  switch (v) {
    case DecompVerdict::Yes:
      return "yes";
    case DecompVerdict::No:
      return "no";
    case DecompVerdict::NotApplicable:
      return "not-applicable";
  }
  return "unknown";
}

std::string to_string(DecompMethod m) { return m == DecompMethod::Numerical ? "numerical" : "polyhedral"; }

namespace {

Polynomial coordinate_product(const RingPtr& ring) {
  Polynomial f = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i < ring->size(); ++i) f *= Polynomial::variable(ring, i);
  return f;
}

// Saturation of the ideal by x_1 ... x_n; the unit test is all we need.
std::pair<Ideal, bool> saturate_torus(const Ideal& ideal) {
  if (ideal.is_zero()) return {ideal, false};
  Ideal sat = saturate(ideal, coordinate_product(ideal.ring_ptr()));
  return {sat, is_unit_ideal(sat)};
}

bool polyhedral_range(std::size_t n) { return n >= 1 && n <= kMaxPolyhedronDim; }

std::int64_t min_level(const std::vector<Polynomial>& gens, const WeightVector& w) {
  std::optional<std::int64_t> best;
  for (const auto& g : gens) {
    auto d = weighted_min_degree(g, w);
    if (d && (!best || *d < *best)) best = d;
  }
  if (!best) throw InvalidArgument("weighted degree of a zero row");
  return *best;
}

void require_nonzero(const Submodule& m) {
  if (m.is_zero()) throw InvalidArgument("zero module");
}

Polynomial leibniz(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(m.ring_ptr());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    Polynomial term = Polynomial::constant(m.ring_ptr(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size() && !term.is_zero(); ++i) term *= m(rows[i], cols[perm[i]]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) s.push_back(i);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Ideal product_of_rows(const Submodule& m, const RowSelection& rows) {
  Ideal prod(m.ring_ptr(), {Polynomial::constant(m.ring_ptr(), 1)});
  for (auto i : rows) prod = prod * row_ideal(m, i);
  return prod;
}

NewtonPolyhedron module_polyhedron(const Submodule& m) {
  NewtonPolyhedron acc = newton_polyhedron(row_ideal(m, 0));
  for (std::size_t i = 1; i < m.rows(); ++i) acc = minkowski_sum(acc, newton_polyhedron(row_ideal(m, i)));
  return acc;
}

Submodule term_ideal_sum(const Submodule& m) {
  std::vector<Ideal> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(term_ideal(newton_polyhedron(row_ideal(m, i))).to_ideal(m.ring_ptr()));
  }
  return direct_sum(rows);
}

// Full-rank case of the module definition.
NNDReport nnd_full_rank(const Submodule& m) {
  NNDReport rep;
  rep.rank = m.rows();
  rep.verdict = NNDVerdict::Nondegenerate;
  const RingPtr& ring = m.ring_ptr();
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  NewtonPolyhedron gamma = module_polyhedron(m);
  for (const auto& face : gamma.compact_faces()) {
    PolyMatrix fm(ring, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::int64_t d = min_level(rows[i], face.witness);
      for (std::size_t j = 0; j < m.cols(); ++j) fm(i, j) = face_part(m(i, j), face.witness, d);
    }
    auto [sat, unit] = saturate_torus(fitting_ideal(fm, m.rows()));
    rep.faces.push_back(FaceCheck{face.vertices, face.dim, face.witness, fm, sat, unit});
    if (!unit) rep.verdict = NNDVerdict::Degenerate;
  }
  return rep;
}

}  // namespace

NNDReport nnd_check_ideal(const Ideal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("Newton non-degeneracy of the zero ideal");
  NNDReport rep;
  rep.rank = 1;
  if (!polyhedral_range(ideal.nvars())) {
    rep.note = "Newton polyhedra are limited to 1..3 variables";
    return rep;
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens()) {
    if (!g.is_zero()) gens.push_back(g);
  }
  rep.verdict = NNDVerdict::Nondegenerate;
  NewtonPolyhedron gamma = newton_polyhedron(ideal);
  for (const auto& face : gamma.compact_faces()) {
    std::int64_t d = min_level(gens, face.witness);
    std::vector<Vector> cols;
    std::vector<Polynomial> parts;
    for (const auto& g : gens) {
      Polynomial fp = face_part(g, face.witness, d);
      cols.push_back(Vector{fp});
      if (!fp.is_zero()) parts.push_back(fp);
    }
    auto [sat, unit] = saturate_torus(Ideal(ideal.ring_ptr(), parts));
    rep.faces.push_back(FaceCheck{face.vertices, face.dim, face.witness,
                                  PolyMatrix::from_columns(ideal.ring_ptr(), 1, cols), sat, unit});
    if (!unit) rep.verdict = NNDVerdict::Degenerate;
  }
  return rep;
}

NNDReport nnd_check_module(const Submodule& m) {
  require_nonzero(m);
  if (!polyhedral_range(m.ring_ptr()->size())) {
    NNDReport rep;
    rep.rank = rank(m);
    rep.note = "Newton polyhedra are limited to 1..3 variables";
    return rep;
  }
  Submodule mc = m.compact();
  std::size_t r = rank(mc);
  if (r == mc.rows()) return nnd_full_rank(mc);
  NNDReport rep;
  rep.rank = r;
  rep.verdict = NNDVerdict::Nondegenerate;
  for (const auto& sel : lambda_set(mc)) {
    NNDReport sub = nnd_full_rank(project_rows(mc, sel));
    if (sub.verdict != NNDVerdict::Nondegenerate) rep.verdict = NNDVerdict::Degenerate;
    rep.sub_rows.push_back(sel);
    rep.sub_reports.push_back(std::move(sub));
  }
  return rep;
}

JMIdeal jm_ideal(const Submodule& m) {
  require_nonzero(m);
  const RingPtr& ring = m.ring_ptr();
  Ideal jm(ring);
  std::vector<ExponentVector> vertices;
  for (const auto& sel : lambda_set(m)) {
    jm = jm + product_of_rows(m, sel);
    if (polyhedral_range(ring->size())) {
      NewtonPolyhedron acc = newton_polyhedron(row_ideal(m, sel[0]));
      for (std::size_t k = 1; k < sel.size(); ++k) acc = minkowski_sum(acc, newton_polyhedron(row_ideal(m, sel[k])));
      for (const auto& v : acc.vertices()) vertices.push_back(v);
    }
  }
  if (!polyhedral_range(ring->size())) {
    throw UnsupportedDimension("term ideal of J_M needs 1..3 variables");
  }
  return JMIdeal{minimal_generators(jm), term_ideal(newton_polyhedron(ring->size(), vertices))};
}

ClosureResult closure_nnd(const Submodule& m) {
  require_nonzero(m);
  Submodule mc = m.compact();
  const std::size_t r = rank(mc);
  Ideal ir = fitting_ideal(mc, r);
  NNDReport nnd = nnd_check_ideal(ir);
  if (nnd.verdict != NNDVerdict::Nondegenerate) {
    throw NotCertified("condition (2) not certified: I_r(M) is not Newton non-degenerate; "
                       "supply a closed Fitting ideal and use closure_via_minors");
  }
  JMIdeal j = jm_ideal(mc);
  if (!polyhedra_equal(newton_polyhedron(ir), newton_polyhedron(j.jm0.to_ideal(mc.ring_ptr())))) {
    throw NotCertified("condition (2) not certified: I_r(M) and J_M have different Newton polyhedra; "
                       "supply a closed Fitting ideal and use closure_via_minors");
  }
  Submodule sum = term_ideal_sum(mc);
  Submodule gens = r == mc.rows() ? sum : minimal_generators(intersect(z_module(mc), sum));
  return ClosureResult{gens, j.jm0.to_ideal(mc.ring_ptr()), KProvenance::ComputedNND};
}

ClosureResult closure_via_minors(const Submodule& m, const Ideal& k) {
  require_nonzero(m);
  require_same_ring(m.ring_ptr(), k.ring_ptr());
  const RingPtr& ring = m.ring_ptr();
  Submodule mc = m.compact();
  const std::size_t p = mc.rows();
  const std::size_t r = rank(mc);
  if (!local_contained(fitting_ideal(mc, r), k)) throw InvalidArgument("I_r(M) is not contained in K");
  if (k.is_zero()) throw InvalidArgument("K is the zero ideal");

  // each r-minor of [M|h] through the h-column is sum_i c_i h_i
  std::vector<std::vector<Polynomial>> constraints;
  std::set<std::vector<std::string>> seen;
  for (const auto& rows : subsets(p, r)) {
    for (const auto& cols : subsets(mc.cols(), r - 1)) {
      std::vector<Polynomial> c(p, Polynomial(ring));
      bool any = false;
      for (std::size_t pos = 0; pos < rows.size(); ++pos) {
        std::vector<std::size_t> rest;
        for (std::size_t q = 0; q < rows.size(); ++q) {
          if (q != pos) rest.push_back(rows[q]);
        }
        Polynomial cof = rest.empty() ? Polynomial::constant(ring, 1) : leibniz(mc, rest, cols);
        // the h-column sits last, so its cofactor sign is (-1)^(pos + r - 1)
        if ((pos + r - 1) % 2 == 1) cof = -cof;
        if (!cof.is_zero()) any = true;
        c[rows[pos]] = cof;
      }
      if (!any) continue;
      // normalize the sign by the first nonzero entry
      auto first = std::find_if(c.begin(), c.end(), [](const Polynomial& f) { return !f.is_zero(); });
      if (first->leading_term().coef < 0) {
        for (auto& f : c) f = -f;
      }
      std::vector<std::string> key;
      for (const auto& f : c) key.push_back(f.to_string());
      if (seen.insert(key).second) constraints.push_back(std::move(c));
    }
  }

  // h with S^T h = 0 (rank condition) and C h in K^m: the first p
  // coordinates of the syzygies of [S^T 0 ; C diag(K)]
  PolyMatrix s = syzygy_kernel(mc.transpose());
  const std::size_t ns = s.cols(), nc = constraints.size(), kg = k.gens().size();
  PolyMatrix big(ring, ns + nc, p + nc * kg);
  for (std::size_t a = 0; a < ns; ++a) {
    for (std::size_t i = 0; i < p; ++i) big(a, i) = s(i, a);
  }
  for (std::size_t b = 0; b < nc; ++b) {
    for (std::size_t i = 0; i < p; ++i) big(ns + b, i) = constraints[b][i];
    for (std::size_t g = 0; g < kg; ++g) big(ns + b, p + b * kg + g) = k.gens()[g];
  }
  PolyMatrix syz = syzygy_kernel(big);
  std::vector<std::size_t> head(p);
  std::iota(head.begin(), head.end(), 0);
  Submodule gens = minimal_generators(syz.select_rows(head).compact());
  return ClosureResult{gens, k, KProvenance::UserSupplied};
}

bool integral_membership(const Vector& h, const Submodule& m, const Ideal& k) {
  require_nonzero(m);
  require_same_ring(m.ring_ptr(), k.ring_ptr());
  if (h.size() != m.rows()) throw DimensionError("vector length does not match module rank");
  const std::size_t r = rank(m);
  if (!local_contained(fitting_ideal(m, r), k)) throw InvalidArgument("I_r(M) is not contained in K");
  Submodule aug = m.with_column(h);
  if (rank(aug) != r) return false;
  return local_contained(fitting_ideal(aug, r), k);
}

DecomposabilityReport decomposable_check(const Submodule& m, const RandomSpec& rs) {
  require_nonzero(m);
  Submodule mc = m.compact();
  const std::size_t r = rank(mc);
  const RingPtr& ring = mc.ring_ptr();
  DecomposabilityReport rep;
  bool monomial_rows = polyhedral_range(ring->size());
  for (std::size_t i = 0; i < mc.rows() && monomial_rows; ++i) {
    Ideal row = row_ideal(mc, i);
    monomial_rows = row.is_zero() || minimal_generators(row).is_monomial();
  }
  auto sels = lambda_set(mc);
  if (monomial_rows) {
    rep.method = DecompMethod::Polyhedral;
    rep.verdict = DecompVerdict::Yes;
    for (const auto& sel : sels) {
      Ideal minors = fitting_ideal(project_rows(mc, sel), r);
      Ideal prod = product_of_rows(mc, sel);
      DecompEvidence ev;
      ev.rows = sel;
      ev.minors_nnd = nnd_check_ideal(minors).verdict == NNDVerdict::Nondegenerate;
      ev.same_polyhedron = polyhedra_equal(newton_polyhedron(minors), newton_polyhedron(prod));
      if (!(*ev.minors_nnd && *ev.same_polyhedron)) rep.verdict = DecompVerdict::No;
      rep.per_l.push_back(std::move(ev));
    }
    return rep;
  }
  rep.method = DecompMethod::Numerical;
  rep.verdict = DecompVerdict::Yes;
  for (const auto& sel : sels) {
    Submodule ml = project_rows(mc, sel);
    DecompEvidence ev;
    ev.rows = sel;
    try {
      ev.e = buchsbaum_rim(ml, rs);
      ev.delta = delta(ml, rs);
    } catch (const InfiniteColength&) {
      rep.verdict = DecompVerdict::NotApplicable;
      rep.note = "M_L has infinite colength";
      rep.per_l.push_back(std::move(ev));
      return rep;
    } catch (const NoStabilization&) {
      rep.verdict = DecompVerdict::NotApplicable;
      rep.note = "M_L has infinite colength";
      rep.per_l.push_back(std::move(ev));
      return rep;
    }
    if (ev.e->value != ev.delta->value) rep.verdict = DecompVerdict::No;
    rep.per_l.push_back(std::move(ev));
  }
  return rep;
}

bool wdcentral_condition2(const Submodule& m, const RandomSpec& rs) {
  require_nonzero(m);
  Submodule mc = m.compact();
  const std::size_t r = rank(mc);
  const RingPtr& ring = mc.ring_ptr();
  Ideal ir = fitting_ideal(mc, r);
  Ideal jm(ring);
  for (const auto& sel : lambda_set(mc)) jm = jm + product_of_rows(mc, sel);
  if (polyhedral_range(ring->size())) {
    // closures with different polyhedra differ; equal polyhedra decide it when I_r(M) is non-degenerate
    if (!polyhedra_equal(newton_polyhedron(ir), newton_polyhedron(jm))) return false;
    if (nnd_check_ideal(ir).verdict == NNDVerdict::Nondegenerate) return true;
  }
  auto finite = [](const Ideal& i) {
    try {
      local_colength(i);
      return true;
    } catch (const NoStabilization&) {
      return false;
    }
  };
  bool fin_ir = finite(ir), fin_jm = finite(jm);
  if (fin_ir && fin_jm) return hs_multiplicity(ir, rs).value == hs_multiplicity(ir + jm, rs).value;
  if (fin_ir != fin_jm) return false;
  throw InvalidArgument("condition (2) undecided: I_r(M) is degenerate and not of finite colength");
}

unsigned analytic_spread_monomial_ideal(const MonomialIdeal& ideal) {
  if (ideal.generators().empty()) throw InvalidArgument("analytic spread of the zero ideal");
  return static_cast<unsigned>(compact_faces_max_dim(newton_polyhedron(ideal.dim(), ideal.generators())) + 1);
}

unsigned analytic_spread_nnd_module(const Submodule& m) {
  require_nonzero(m);
  Submodule mc = m.compact();
  if (rank(mc) != mc.rows()) throw NotCertified("analytic spread formula needs rank(M) = p");
  if (nnd_check_module(mc).verdict != NNDVerdict::Nondegenerate) {
    throw NotCertified("module is not certified Newton non-degenerate");
  }
  return static_cast<unsigned>(compact_faces_max_dim(module_polyhedron(mc))) + static_cast<unsigned>(mc.rows());
}

unsigned spread_direct_sum(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw InvalidArgument("empty direct sum");
  const RingPtr& ring = ideals.front().ring_ptr();
  Ideal prod(ring, {Polynomial::constant(ring, 1)});
  for (const auto& i : ideals) {
    require_same_ring(ring, i.ring_ptr());
    if (i.is_zero() || !i.is_monomial()) throw InvalidArgument("spread_direct_sum needs nonzero monomial ideals");
    prod = prod * i;
  }
  std::vector<ExponentVector> exps;
  for (const auto& g : prod.gens()) exps.push_back(g.leading_term().mono.exponents(ring->size()));
  return analytic_spread_monomial_ideal(MonomialIdeal(ring->size(), exps)) +
         static_cast<unsigned>(ideals.size()) - 1;
}

ArcReport arc_pullback_test(const Submodule& m, const Vector& h, const std::vector<Polynomial>& phi) {
  const RingPtr& ring = m.ring_ptr();
  if (phi.size() != ring->size()) throw DimensionError("the arc needs one component per variable");
  if (h.size() != m.rows()) throw DimensionError("vector length does not match module rank");
  const RingPtr& line = phi.front().ring_ptr();
  for (const auto& f : phi) {
    require_same_ring(line, f.ring_ptr());
    if (f.is_zero()) continue;
    if (f.order() == 0) throw InvalidArgument("arc components must vanish at 0");
  }
  if (line->size() != 1) throw InvalidArgument("the arc must be univariate");
  PolyMatrix pm(line, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) pm(i, j) = substitute(m(i, j), phi);
  }
  Vector ph;
  for (const auto& f : h) ph.push_back(substitute(f, phi));
  PolyMatrix aug = pm.with_column(ph);

  auto min_order = [](const Ideal& i) -> std::optional<int> {
    std::optional<int> best;
    for (const auto& g : i.gens()) {
      if (g.is_zero()) continue;
      if (!best || g.order() < *best) best = g.order();
    }
    return best;
  };
  ArcReport rep;
  const std::size_t top = std::min(m.rows(), m.cols() + 1);
  for (std::size_t i = 1; i <= top; ++i) {
    ArcOrder o;
    o.i = i;
    o.module_order = min_order(fitting_ideal(pm, i));
    o.augmented_order = min_order(fitting_ideal(aug, i));
    if (o.module_order != o.augmented_order) rep.member = false;
    rep.orders.push_back(o);
  }
  return rep;
}

}  // namespace intclos
