#include "intclos/grobner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "intclos/error.hpp"

namespace intclos {

using detail::ModPoly;
using detail::ModTerm;
using detail::OrderSpec;

std::uint64_t ColengthValue::value() const {
  if (!value_) throw InfiniteColength("colength is infinite");
  return *value_;
}

namespace {

// ------------------------------------------------------------- term order

class TermOrder {
 public:
  explicit TermOrder(const OrderSpec& spec) : s_(spec) {}

  int compare_mono(const Monomial& a, const Monomial& b) const {
    if (s_.elim_vars > 0) {
      std::uint32_t da = 0, db = 0;
      for (std::size_t i = 0; i < s_.elim_vars; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da < db ? -1 : 1;
    }
    if (s_.order.base == BaseOrder::GrevLex) return grevlex_compare(a, b, s_.nvars);
    for (std::size_t i = 0; i < s_.nvars; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  // components with a smaller index rank higher
  int compare(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) const {
    if (s_.component_split > 0) {
      bool a0 = ac < s_.component_split, b0 = bc < s_.component_split;
      if (a0 != b0) return a0 ? 1 : -1;
    }
    if (s_.order.position_over_term) {
      if (ac != bc) return ac < bc ? 1 : -1;
      return compare_mono(am, bm);
    }
    int c = compare_mono(am, bm);
    if (c != 0) return c;
    if (ac != bc) return ac < bc ? 1 : -1;
    return 0;
  }

  int compare(const ModTerm& a, const ModTerm& b) const { return compare(a.mono, a.comp, b.mono, b.comp); }

 private:
  OrderSpec s_;
};

// out = a[from..] + factor * (mono * b[bfrom..])
std::vector<ModTerm> axpy(const std::vector<ModTerm>& a, std::size_t from, const Rational& factor,
                          const Monomial& mono, const std::vector<ModTerm>& b, std::size_t bfrom,
                          const TermOrder& ord) {
  std::vector<ModTerm> out;
  out.reserve(a.size() - from + b.size() - bfrom);
  std::size_t i = from, j = bfrom;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].mono * mono;
    int c = ord.compare(a[i].mono, a[i].comp, bm, b[j].comp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({bm, b[j].comp, factor * b[j].coef});
      ++j;
    } else {
      Rational s = a[i].coef + factor * b[j].coef;
      if (s != 0) out.push_back({a[i].mono, a[i].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono * mono, b[j].comp, factor * b[j].coef});
  return out;
}

void make_monic(ModPoly& f) {
  if (f.terms.empty()) return;
  Rational lc = f.terms.front().coef;
  if (lc == 1) return;
  Rational inv = 1 / lc;
  for (auto& t : f.terms) t.coef *= inv;
}

std::uint32_t max_degree(const ModPoly& f) {
  std::uint32_t d = 0;
  for (const auto& t : f.terms) d = std::max(d, t.mono.degree());
  return d;
}

// -------------------------------------------------------------- engine

class Buchberger {
 public:
  Buchberger(const OrderSpec& spec, bool ideal_case) : ord_(spec), ideal_case_(ideal_case) {}

  std::vector<ModPoly> run(std::vector<ModPoly> input) {
    // smallest inputs first keeps the early basis sparse
    std::stable_sort(input.begin(), input.end(), [&](const ModPoly& a, const ModPoly& b) {
      return ord_.compare(a.terms.front(), b.terms.front()) < 0;
    });
    for (auto& f : input) {
      ModPoly r = reduce(std::move(f));
      if (!r.terms.empty()) insert(std::move(r));
    }
    while (!pairs_.empty()) {
      std::size_t best = select_pair();
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      ModPoly s = spoly(p);
      if (s.terms.empty()) continue;
      ModPoly r = reduce(std::move(s));
      if (!r.terms.empty()) insert(std::move(r));
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    std::uint32_t sugar;
  };

  const ModTerm& lead(std::size_t k) const { return basis_[k].terms.front(); }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      if (ord_.compare(a.lcm, a.comp, b.lcm, b.comp) < 0) best = k;
    }
    return best;
  }

  ModPoly spoly(const Pair& p) const {
    const ModPoly& f = basis_[p.i];
    const ModPoly& g = basis_[p.j];
    Monomial mf = p.lcm / lead(p.i).mono;
    Monomial mg = p.lcm / lead(p.j).mono;
    // both monic: S = mf*f - mg*g, leading terms cancel
    std::vector<ModTerm> scaled_f;
    scaled_f.reserve(f.terms.size() - 1);
    for (std::size_t k = 1; k < f.terms.size(); ++k) {
      scaled_f.push_back({f.terms[k].mono * mf, f.terms[k].comp, f.terms[k].coef});
    }
    ModPoly s;
    s.terms = axpy(scaled_f, 0, Rational(-1), mg, g.terms, 1, ord_);
    s.sugar = p.sugar;
    return s;
  }

  const ModPoly* find_reducer(const ModTerm& t, Monomial* quotient) const {
    for (std::size_t k : active_) {
      const ModTerm& l = lead(k);
      if (l.comp == t.comp && l.mono.divides(t.mono)) {
        *quotient = t.mono / l.mono;
        return &basis_[k];
      }
    }
    return nullptr;
  }

 public:
  // Full reduction (every term) by the active basis elements.
  ModPoly reduce(ModPoly f) const {
    std::vector<ModTerm> done;
    std::vector<ModTerm> work = std::move(f.terms);
    std::size_t pos = 0;
    std::uint32_t sugar = f.sugar;
    while (pos < work.size()) {
      Monomial q;
      const ModPoly* g = find_reducer(work[pos], &q);
      if (!g) {
        done.push_back(std::move(work[pos]));
        ++pos;
        continue;
      }
      Rational factor = -work[pos].coef;  // g is monic
      sugar = std::max(sugar, g->sugar + q.degree());
      work = axpy(work, pos + 1, factor, q, g->terms, 1, ord_);
      pos = 0;
    }
    ModPoly r;
    r.terms = std::move(done);
    r.sugar = sugar;
    make_monic(r);
    return r;
  }

  void load_reduced(std::vector<ModPoly> basis) {
    basis_ = std::move(basis);
    active_.resize(basis_.size());
    std::iota(active_.begin(), active_.end(), std::size_t{0});
  }

 private:
  void insert(ModPoly h) {
    h.sugar = std::max(h.sugar, max_degree(h));
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    const ModTerm& lh = lead(hi);

    // Gebauer-Moeller update
    std::vector<Pair> cand;
    for (std::size_t k : active_) {
      const ModTerm& lk = lead(k);
      if (lk.comp != lh.comp) continue;
      Monomial l = lh.mono.lcm(lk.mono);
      std::uint32_t sug = std::max(basis_[hi].sugar + (l.degree() - lh.mono.degree()),
                                   basis_[k].sugar + (l.degree() - lk.mono.degree()));
      cand.push_back({k, hi, l, lh.comp, sug});
    }
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (ideal_case_ && lh.mono.coprime(lead(cand[a].i).mono)) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (cand[b].lcm.divides(cand[a].lcm) && (!(cand[b].lcm == cand[a].lcm) || b < a)) {
          keep[a] = false;
          break;
        }
      }
    }
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      if (ideal_case_ && lh.mono.coprime(lead(cand[a].i).mono)) continue;
      fresh.push_back(cand[a]);
    }
    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (auto& p : pairs_) {
      bool drop = p.comp == lh.comp && lh.mono.divides(p.lcm) &&
                  !(lead(p.i).mono.lcm(lh.mono) == p.lcm) && !(lead(p.j).mono.lcm(lh.mono) == p.lcm);
      if (!drop) old.push_back(p);
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    std::vector<std::size_t> still;
    for (std::size_t k : active_) {
      const ModTerm& lk = lead(k);
      if (!(lk.comp == lh.comp && lh.mono.divides(lk.mono))) still.push_back(k);
    }
    still.push_back(hi);
    active_ = std::move(still);
  }

  std::vector<ModPoly> finish() {
    std::vector<ModPoly> g;
    for (std::size_t k : active_) g.push_back(basis_[k]);
    std::sort(g.begin(), g.end(), [&](const ModPoly& a, const ModPoly& b) {
      return ord_.compare(a.terms.front(), b.terms.front()) < 0;
    });
    // tail-reduce each element against the others
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<ModPoly> others;
      for (std::size_t m = 0; m < g.size(); ++m) {
        if (m != k) others.push_back(g[m]);
      }
      Buchberger sub(*this);
      sub.load_reduced(std::move(others));
      ModPoly head;
      head.terms.push_back(g[k].terms.front());
      ModPoly tail;
      tail.terms.assign(g[k].terms.begin() + 1, g[k].terms.end());
      tail = sub.reduce_raw(std::move(tail));
      head.terms.insert(head.terms.end(), tail.terms.begin(), tail.terms.end());
      head.sugar = g[k].sugar;
      g[k] = std::move(head);
    }
    return g;
  }

 public:
  ModPoly reduce_raw(ModPoly f) const {
    std::vector<ModTerm> done;
    std::vector<ModTerm> work = std::move(f.terms);
    std::size_t pos = 0;
    while (pos < work.size()) {
      Monomial q;
      const ModPoly* g = find_reducer(work[pos], &q);
      if (!g) {
        done.push_back(std::move(work[pos]));
        ++pos;
        continue;
      }
      Rational factor = -work[pos].coef;
      work = axpy(work, pos + 1, factor, q, g->terms, 1, ord_);
      pos = 0;
    }
    ModPoly r;
    r.terms = std::move(done);
    r.sugar = f.sugar;
    return r;
  }

 private:
  TermOrder ord_;
  bool ideal_case_;
  std::vector<ModPoly> basis_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

// ----------------------------------------------------------- conversions

ModPoly to_modpoly(const Vector& v, const TermOrder& ord) {
  ModPoly f;
  for (std::uint32_t c = 0; c < v.size(); ++c) {
    for (const auto& t : v[c].terms()) f.terms.push_back({t.mono, c, t.coef});
  }
  std::sort(f.terms.begin(), f.terms.end(),
            [&](const ModTerm& a, const ModTerm& b) { return ord.compare(a, b) > 0; });
  f.sugar = max_degree(f);
  return f;
}

Vector to_vector(const ModPoly& f, const RingPtr& ring, std::size_t rank) {
  std::vector<std::vector<Term>> comps(rank);
  for (const auto& t : f.terms) comps.at(t.comp).push_back({t.mono, t.coef});
  Vector v;
  v.reserve(rank);
  for (auto& c : comps) v.push_back(Polynomial::from_terms(ring, std::move(c)));
  return v;
}

}  // namespace

class GroebnerAccess {
 public:
  static GroebnerBasis build(const RingPtr& ring, std::size_t rank, const std::vector<Vector>& gens,
                             const OrderSpec& spec) {
    TermOrder ord(spec);
    std::vector<ModPoly> input;
    for (const auto& g : gens) {
      if (g.size() != rank) throw DimensionError("generator length does not match module rank");
      ModPoly f = to_modpoly(g, ord);
      if (!f.terms.empty()) {
        make_monic(f);
        input.push_back(std::move(f));
      }
    }
    const bool ideal_case = rank == 1;
    Buchberger engine(spec, ideal_case);
    auto basis = engine.run(std::move(input));
    return GroebnerBasis(ring, rank, spec, std::move(basis));
  }

  static const std::vector<ModPoly>& basis(const GroebnerBasis& g) { return g.basis_; }
  /// Length of the quotient localized at the origin; nullopt when the global quotient is infinite.
  static std::optional<std::uint64_t> local_dimension(const GroebnerBasis& g);
  static const OrderSpec& spec(const GroebnerBasis& g) { return g.spec_; }
};

namespace {

OrderSpec plain_spec(const RingPtr& ring, ModuleOrder order) {
  OrderSpec s;
  s.order = order;
  s.nvars = ring->size();
  return s;
}

void check_columns(const Submodule& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) require_same_ring(m.ring_ptr(), m(i, j).ring_ptr());
  }
}

}  // namespace

// ---------------------------------------------------------- GroebnerBasis

GroebnerBasis GroebnerBasis::compute(const Submodule& gens, ModuleOrder order) {
  check_columns(gens);
  return GroebnerAccess::build(gens.ring_ptr(), gens.rows(), gens.columns(), plain_spec(gens.ring_ptr(), order));
}

GroebnerBasis GroebnerBasis::compute(const Ideal& ideal, ModuleOrder order) {
  return compute(ideal.as_submodule().rows() == 1 ? ideal.as_submodule()
                                                  : PolyMatrix(ideal.ring_ptr(), 1, 0),
                 order);
}

Submodule GroebnerBasis::generators() const {
  std::vector<Vector> cols;
  for (const auto& f : basis_) cols.push_back(to_vector(f, ring_, rank_));
  return PolyMatrix::from_columns(ring_, rank_, cols);
}

Vector GroebnerBasis::normal_form(const Vector& h) const {
  if (h.size() != rank_) throw DimensionError("vector length does not match module rank");
  for (const auto& p : h) require_same_ring(ring_, p.ring_ptr());
  TermOrder ord(spec_);
  Buchberger engine(spec_, rank_ == 1);
  engine.load_reduced(basis_);
  ModPoly r = engine.reduce_raw(to_modpoly(h, ord));
  return to_vector(r, ring_, rank_);
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (rank_ != 1) throw DimensionError("polynomial normal form needs a rank-1 module");
  return normal_form(Vector{f})[0];
}

bool GroebnerBasis::contains(const Vector& h) const {
  for (const auto& p : normal_form(h)) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool GroebnerBasis::contains(const Polynomial& f) const { return contains(Vector{f}); }

bool GroebnerBasis::contains_all(const Submodule& m) const {
  if (m.rows() != rank_) throw DimensionError("module ranks differ");
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!contains(m.column(j))) return false;
  }
  return true;
}

bool GroebnerBasis::is_whole_module() const {
  std::vector<bool> unit(rank_, false);
  for (const auto& f : basis_) {
    if (f.terms.front().mono.is_one()) unit[f.terms.front().comp] = true;
  }
  return std::all_of(unit.begin(), unit.end(), [](bool b) { return b; });
}

std::vector<std::pair<ExponentVector, std::size_t>> GroebnerBasis::leading_terms() const {
  std::vector<std::pair<ExponentVector, std::size_t>> out;
  for (const auto& f : basis_) {
    out.emplace_back(f.terms.front().mono.exponents(ring_->size()), f.terms.front().comp);
  }
  return out;
}

namespace {

using StandardPair = std::pair<Monomial, std::uint32_t>;

// Standard (monomial, component) pairs of a basis; nullopt when there are infinitely many.
std::optional<std::vector<StandardPair>> standard_pairs(const std::vector<ModPoly>& basis, std::size_t rank,
                                                        std::size_t n) {
  std::vector<StandardPair> out;
  for (std::uint32_t c = 0; c < rank; ++c) {
    std::vector<Monomial> lts;
    for (const auto& f : basis) {
      if (f.terms.front().comp == c) lts.push_back(f.terms.front().mono);
    }
    // finite iff every variable has a pure power among the leading monomials
    std::vector<std::uint32_t> bound(n, 0);
    bool unit = false;
    for (const auto& m : lts) {
      if (m.is_one()) unit = true;
      std::size_t nz = 0, which = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i] != 0) {
          ++nz;
          which = i;
        }
      }
      if (nz == 1 && (bound[which] == 0 || m[which] < bound[which])) bound[which] = m[which];
    }
    if (unit) continue;
    if (n == 0) return std::nullopt;
    for (auto b : bound) {
      if (b == 0) return std::nullopt;
    }
    // monomials in the box not divisible by a leading monomial
    std::vector<std::uint32_t> e(n, 0);
    for (;;) {
      Monomial m;
      for (std::size_t i = 0; i < n; ++i) m.set(i, e[i]);
      bool standard = true;
      for (const auto& l : lts) {
        if (l.divides(m)) {
          standard = false;
          break;
        }
      }
      if (standard) out.emplace_back(m, c);
      std::size_t i = 0;
      while (i < n) {
        if (++e[i] < bound[i]) break;
        e[i] = 0;
        ++i;
      }
      if (i == n) break;
    }
  }
  return out;
}

// Row-reduced basis of a subspace of Q^dim.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  void add(std::vector<Rational> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[pivots_[r]];
      if (c == 0) continue;
      Rational f = c;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
      }
    }
    std::size_t piv = 0;
    while (piv < dim_ && v[piv] == 0) ++piv;
    if (piv == dim_) return;
    Rational inv = 1 / v[piv];
    for (auto& x : v) x *= inv;
    for (auto& row : rows_) {
      if (row[piv] == 0) continue;
      Rational f = row[piv];
      for (std::size_t j = 0; j < dim_; ++j) {
        if (v[j] != 0) row[j] -= f * v[j];
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
  }

  std::size_t size() const { return rows_.size(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

ColengthValue GroebnerBasis::colength() const {
  if (spec_.elim_vars != 0) throw InvalidArgument("colength needs a global order without elimination block");
  auto std_pairs = standard_pairs(basis_, rank_, ring_->size());
  if (!std_pairs) return ColengthValue::infinite();
  return ColengthValue::finite(std_pairs->size());
}

std::optional<std::uint64_t> GroebnerAccess::local_dimension(const GroebnerBasis& g) {
  const std::size_t n = g.ring_->size();
  auto std_pairs = standard_pairs(g.basis_, g.rank_, n);
  if (!std_pairs) return std::nullopt;
  const std::size_t dim = std_pairs->size();
  if (dim == 0) return 0;
  std::map<std::pair<std::vector<std::uint32_t>, std::uint32_t>, std::size_t> index;
  auto key = [n](const Monomial& m, std::uint32_t c) {
    std::vector<std::uint32_t> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = m[i];
    return std::make_pair(std::move(e), c);
  };
  for (std::size_t k = 0; k < dim; ++k) index.emplace(key((*std_pairs)[k].first, (*std_pairs)[k].second), k);

  // mult[i][b] = coordinates of x_i * b in the quotient
  Buchberger engine(g.spec_, g.rank_ == 1);
  engine.load_reduced(g.basis_);
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> mult(
      n, std::vector<std::vector<std::pair<std::size_t, Rational>>>(dim));
  for (std::size_t i = 0; i < n; ++i) {
    Monomial xi;
    xi.set(i, 1);
    for (std::size_t b = 0; b < dim; ++b) {
      ModPoly f;
      f.terms.push_back(ModTerm{(*std_pairs)[b].first * xi, (*std_pairs)[b].second, Rational(1)});
      ModPoly r = engine.reduce_raw(std::move(f));
      for (const auto& t : r.terms) mult[i][b].emplace_back(index.at(key(t.mono, t.comp)), t.coef);
    }
  }

  // m^k A decreases to the sum of the non-local components
  Echelon w(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    std::vector<Rational> v(dim);
    v[b] = 1;
    w.add(std::move(v));
  }
  for (;;) {
    Echelon next(dim);
    for (const auto& row : w.rows()) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> v(dim);
        for (std::size_t b = 0; b < dim; ++b) {
          if (row[b] == 0) continue;
          for (const auto& [j, c] : mult[i][b]) v[j] += row[b] * c;
        }
        next.add(std::move(v));
      }
    }
    if (next.size() == w.size()) break;
    w = std::move(next);
  }
  return dim - w.size();
}

GroebnerBasis groebner_basis(const Submodule& gens, ModuleOrder order) {
  return GroebnerBasis::compute(gens, order);
}

// ------------------------------------------------------------ membership

bool membership(const Vector& h, const Submodule& module) {
  if (h.size() != module.rows()) throw DimensionError("vector length does not match module rank");
  return GroebnerBasis::compute(module).contains(h);
}

bool membership(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring_ptr(), ideal.ring_ptr());
  if (ideal.is_monomial()) {
    // monomial ideal: every term must be divisible by a generator
    for (const auto& t : f.terms()) {
      bool hit = false;
      for (const auto& g : ideal.gens()) {
        if (g.leading_term().mono.divides(t.mono)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  }
  return GroebnerBasis::compute(ideal).contains(f);
}

bool contained(const Submodule& a, const Submodule& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  if (a.rows() != b.rows()) throw DimensionError("module ranks differ");
  if (a.is_zero()) return true;
  return GroebnerBasis::compute(b).contains_all(a);
}

bool contained(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  if (b.is_monomial()) {
    for (const auto& g : a.gens()) {
      if (!membership(g, b)) return false;
    }
    return true;
  }
  return contained(a.as_submodule(), b.as_submodule());
}

bool module_equal(const Submodule& a, const Submodule& b) { return contained(a, b) && contained(b, a); }

bool ideal_equal(const Ideal& a, const Ideal& b) { return contained(a, b) && contained(b, a); }

bool is_unit_ideal(const Ideal& ideal) {
  if (ideal.is_zero()) return false;
  return GroebnerBasis::compute(ideal).is_whole_module();
}

// -------------------------------------------------------------- syzygies

PolyMatrix syzygy_kernel(const PolyMatrix& a) {
  const RingPtr& ring = a.ring_ptr();
  const std::size_t q = a.rows(), m = a.cols();
  if (m == 0) return PolyMatrix(ring, 0, 0);
  if (a.is_zero()) return PolyMatrix::identity(ring, m);
  // GB of the columns (A_j ; e_j) with the A-block dominating: elements
  // vanishing on the A-block carry the syzygies in their tails.
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < m; ++j) {
    Vector v = a.column(j);
    for (std::size_t k = 0; k < m; ++k) v.push_back(Polynomial::constant(ring, k == j ? 1 : 0));
    gens.push_back(std::move(v));
  }
  OrderSpec spec = plain_spec(ring, {});
  spec.component_split = static_cast<std::uint32_t>(q);
  GroebnerBasis gb = GroebnerAccess::build(ring, q + m, gens, spec);
  std::vector<Vector> syz;
  for (const auto& f : GroebnerAccess::basis(gb)) {
    if (f.terms.front().comp < q) continue;
    Vector full = to_vector(f, ring, q + m);
    syz.emplace_back(full.begin() + static_cast<std::ptrdiff_t>(q), full.end());
  }
  return PolyMatrix::from_columns(ring, m, syz);
}

// ---------------------------------------------------------- intersection

namespace {

RingPtr with_elimination_var(const RingPtr& ring) {
  std::vector<std::string> vars{"elim_t_"};
  for (const auto& v : ring->vars()) {
    if (v == "elim_t_") throw InvalidArgument("variable name 'elim_t_' is reserved");
    vars.push_back(v);
  }
  return make_ring(std::move(vars));
}

}  // namespace

Submodule intersect(const Submodule& a, const Submodule& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  if (a.rows() != b.rows()) throw DimensionError("module ranks differ");
  const RingPtr& ring = a.ring_ptr();
  const std::size_t p = a.rows();
  if (a.is_zero() || b.is_zero()) return PolyMatrix(ring, p, 0);
  RingPtr ext = with_elimination_var(ring);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Vector v;
    for (std::size_t i = 0; i < p; ++i) v.push_back(change_ring(a(i, j), ext) * t);
    gens.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < b.cols(); ++j) {
    Vector v;
    for (std::size_t i = 0; i < p; ++i) v.push_back(change_ring(b(i, j), ext) * one_minus_t);
    gens.push_back(std::move(v));
  }
  OrderSpec spec = plain_spec(ext, {});
  spec.elim_vars = 1;
  GroebnerBasis gb = GroebnerAccess::build(ext, p, gens, spec);
  std::vector<Vector> out;
  for (const auto& f : GroebnerAccess::basis(gb)) {
    if (f.terms.front().mono[0] != 0) continue;  // elimination order: leading t-free means t-free
    Vector v = to_vector(f, ext, p);
    Vector w;
    for (const auto& poly : v) w.push_back(change_ring(poly, ring));
    out.push_back(std::move(w));
  }
  return PolyMatrix::from_columns(ring, p, out);
}

namespace {

std::vector<Polynomial> row_of(const Submodule& m) {
  std::vector<Polynomial> r;
  for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(0, j));
  return r;
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring_ptr());
  return Ideal(a.ring_ptr(), row_of(intersect(a.as_submodule(), b.as_submodule())));
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring_ptr(), f.ring_ptr());
  if (f.is_zero()) throw InvalidArgument("colon by the zero polynomial");
  Ideal inter = intersect(ideal, Ideal(ideal.ring_ptr(), {f}));
  std::vector<Polynomial> q;
  for (const auto& g : inter.gens()) q.push_back(divide_exact(g, f));
  return Ideal(ideal.ring_ptr(), std::move(q));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("saturation by the zero polynomial");
  Ideal cur = minimal_generators(ideal);
  for (;;) {
    if (cur.is_zero()) return cur;
    if (is_unit_ideal(cur)) return Ideal(cur.ring_ptr(), {Polynomial::constant(cur.ring_ptr(), 1)});
    Ideal next = colon(cur, f);
    if (contained(next, cur)) return cur;
    cur = minimal_generators(next);
  }
}

// ------------------------------------------------------- local comparisons

namespace {

// C is not inside m = (x_1, ..., x_n), i.e. C contains a unit of the local ring
bool escapes_origin(const Ideal& c) {
  if (c.is_zero()) return false;
  return is_unit_ideal(c + maximal_ideal_power(c.ring_ptr(), 1));
}

}  // namespace

bool local_membership(const Vector& h, const Submodule& module) {
  if (h.size() != module.rows()) throw DimensionError("vector length does not match module rank");
  for (const auto& p : h) require_same_ring(module.ring_ptr(), p.ring_ptr());
  GroebnerBasis gb = GroebnerBasis::compute(module);
  if (gb.contains(h)) return true;
  if (module.is_zero()) return false;
  // N : h is the first coordinate of the syzygies of [h | N]
  std::vector<Vector> cols{h};
  for (const auto& c : module.compact().columns()) cols.push_back(c);
  PolyMatrix syz = syzygy_kernel(PolyMatrix::from_columns(module.ring_ptr(), module.rows(), cols));
  std::vector<Polynomial> firsts;
  for (std::size_t j = 0; j < syz.cols(); ++j) {
    if (!syz(0, j).is_zero()) firsts.push_back(syz(0, j));
  }
  return escapes_origin(Ideal(module.ring_ptr(), std::move(firsts)));
}

bool local_membership(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring_ptr(), ideal.ring_ptr());
  if (f.is_zero() || membership(f, ideal)) return true;
  if (ideal.is_zero()) return false;
  return escapes_origin(colon(ideal, f));
}

bool local_contained(const Submodule& a, const Submodule& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  if (a.rows() != b.rows()) throw DimensionError("module ranks differ");
  for (const auto& col : a.columns()) {
    if (!local_membership(col, b)) return false;
  }
  return true;
}

bool local_contained(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  for (const auto& g : a.gens()) {
    if (!local_membership(g, b)) return false;
  }
  return true;
}

bool local_module_equal(const Submodule& a, const Submodule& b) {
  return local_contained(a, b) && local_contained(b, a);
}

bool local_ideal_equal(const Ideal& a, const Ideal& b) { return local_contained(a, b) && local_contained(b, a); }

// ------------------------------------------------------------- colengths

ColengthValue colength(const Submodule& module) { return GroebnerBasis::compute(module).colength(); }

ColengthValue colength(const Ideal& ideal) {
  if (ideal.is_zero()) return ColengthValue::infinite();
  return GroebnerBasis::compute(ideal).colength();
}

ColengthValue local_colength(const Submodule& module, LocalColengthOptions opts) {
  const RingPtr& ring = module.ring_ptr();
  const std::size_t p = module.rows();
  int maxdeg = 0;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < module.cols(); ++j) maxdeg = std::max(maxdeg, module(i, j).total_degree());
  }
  if (auto direct = GroebnerAccess::local_dimension(GroebnerBasis::compute(module))) {
    return ColengthValue::finite(*direct);
  }
  std::optional<std::uint64_t> prev;
  for (unsigned k = static_cast<unsigned>(maxdeg) + 1;; ++k) {
    if (k > opts.cap) {
      throw NoStabilization("local colength did not stabilize below truncation degree " +
                            std::to_string(opts.cap));
    }
    Ideal mk = maximal_ideal_power(ring, k);
    std::vector<Vector> gens = module.columns();
    for (std::size_t c = 0; c < p; ++c) {
      for (const auto& g : mk.gens()) {
        Vector v(p, Polynomial(ring));
        v[c] = g;
        gens.push_back(std::move(v));
      }
    }
    std::uint64_t value = colength(PolyMatrix::from_columns(ring, p, gens)).value();
    if (prev && *prev == value) return ColengthValue::finite(value);
    prev = value;
  }
}

ColengthValue local_colength(const Ideal& ideal, LocalColengthOptions opts) {
  if (ideal.is_zero()) throw NoStabilization("the zero ideal has infinite local colength");
  return local_colength(ideal.as_submodule(), opts);
}

// ------------------------------------------------------ minimal generators

Submodule minimal_generators(const Submodule& module) {
  Submodule gens = GroebnerBasis::compute(module).generators();
  // drop columns lying in the span of the remaining ones
  std::vector<std::size_t> keep(gens.cols());
  std::iota(keep.begin(), keep.end(), std::size_t{0});
  for (std::size_t idx = gens.cols(); idx-- > 0;) {
    std::vector<std::size_t> others;
    for (std::size_t k : keep) {
      if (k != idx) others.push_back(k);
    }
    if (others.size() == keep.size()) continue;
    Submodule rest = gens.select_cols(others);
    if (!rest.cols()) continue;
    if (GroebnerBasis::compute(rest).contains(gens.column(idx))) keep = others;
  }
  return gens.select_cols(keep);
}

Ideal minimal_generators(const Ideal& ideal) {
  if (ideal.is_zero()) return ideal;
  return Ideal(ideal.ring_ptr(), row_of(minimal_generators(ideal.as_submodule())));
}

}  // namespace intclos
