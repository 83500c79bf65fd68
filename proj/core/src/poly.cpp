#include "intclos/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "intclos/error.hpp"

namespace intclos {

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars) {
    throw InvalidArgument("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_')) {
      throw InvalidArgument("invalid variable name '" + v + "'");
    }
    for (char c : v) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
        throw InvalidArgument("invalid variable name '" + v + "'");
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[j] == v) throw InvalidArgument("duplicate variable '" + v + "'");
    }
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<const Ring>(std::move(vars));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw DimensionError("operands belong to different rings");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const int> exps) {
  if (exps.size() > kMaxVars) throw DimensionError("too many exponents");
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw InvalidArgument("negative exponent");
    set(i, static_cast<std::uint32_t>(exps[i]));
  }
}

void Monomial::set(std::size_t i, std::uint32_t value) {
  if (value > std::numeric_limits<std::uint16_t>::max()) {
    throw InvalidArgument("exponent overflow");
  }
  deg_ = deg_ - e_[i] + value;
  e_[i] = static_cast<std::uint16_t>(value);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t s = std::uint32_t{e_[i]} + o.e_[i];
    if (s > std::numeric_limits<std::uint16_t>::max()) throw InvalidArgument("exponent overflow");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  r.deg_ = deg_ - o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] > o.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::max(e_[i], o.e_[i]);
    d += r.e_[i];
  }
  r.deg_ = d;
  return r;
}

bool Monomial::coprime(const Monomial& o) const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] != 0 && o.e_[i] != 0) return false;
  }
  return true;
}

ExponentVector Monomial::exponents(std::size_t n) const {
  ExponentVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = e_[i];
  return v;
}

int grevlex_compare(const Monomial& a, const Monomial& b, std::size_t n) noexcept {
  if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
  for (std::size_t i = n; i-- > 0;) {
    if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i] ? -1 : 1;
  }
  return 0;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : e_) h = (h ^ x) * 1099511628211ull;
  return h;
}

// -------------------------------------------------------------- Polynomial

namespace {

struct GrevlexDesc {
  std::size_t n;
  bool operator()(const Term& a, const Term& b) const { return grevlex_compare(a.mono, b.mono, n) > 0; }
};

// Merges two sorted term lists computing a + factor * b.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b,
                            const Rational& factor, std::size_t n) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_compare(a[i].mono, b[j].mono, n);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, factor * b[j].coef});
      ++j;
    } else {
      Rational s = a[i].coef + factor * b[j].coef;
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, factor * b[j].coef});
  return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw DimensionError("variable index out of range");
  Monomial m;
  m.set(index, 1);
  return monomial(std::move(ring), m);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const std::size_t n = p.nvars();
  std::sort(terms.begin(), terms.end(), GrevlexDesc{n});
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::total_degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

int Polynomial::order() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().mono.degree());
}

std::vector<ExponentVector> Polynomial::support() const {
  std::vector<ExponentVector> s;
  s.reserve(terms_.size());
  for (const auto& t : terms_) s.push_back(t.mono.exponents(nvars()));
  return s;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  terms_ = merge_add(terms_, o.terms_, Rational(1), nvars());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  terms_ = merge_add(terms_, o.terms_, Rational(-1), nvars());
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  if (terms_.empty() || o.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coef * b.coef});
  }
  *this = from_terms(ring_, std::move(prod));
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves any monomial order
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars(); ++i) {
      auto e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << ring_->var(i);
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    Polynomial acc(ring_);
    bool neg = false;
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    Polynomial t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        skip_ws();
        std::size_t at = pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero", at);
        Rational inv = 1 / d.leading_term().coef;
        acc = acc.scaled(inv);
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", start);
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 65535) throw ParseError("exponent too large", start);
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(std::string(s_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, Rational(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("undeclared variable '" + std::string(name) + "'", start);
      return Polynomial::variable(ring_, *idx);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

// ------------------------------------------------------------- utilities

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  if (b.is_zero()) throw InvalidArgument("division by zero polynomial");
  const Term& lb = b.leading_term();
  std::vector<Term> quotient;
  Polynomial r = a;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lb.mono.divides(lr.mono)) throw InvalidArgument("inexact polynomial division");
    Monomial m = lr.mono / lb.mono;
    Rational c = lr.coef / lb.coef;
    quotient.push_back({m, c});
    r -= b.times_term(m, c);
  }
  return Polynomial::from_terms(a.ring_ptr(), std::move(quotient));
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.nvars()) throw DimensionError("substitution needs one image per variable");
  if (images.empty()) throw DimensionError("substitution into an empty ring");
  const RingPtr& target = images[0].ring_ptr();
  for (const auto& img : images) require_same_ring(target, img.ring_ptr());
  std::vector<std::vector<Polynomial>> powers(images.size());
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial v = Polynomial::constant(target, t.coef);
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::uint32_t e = t.mono[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
      while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
      v *= cache[e];
    }
    result += v;
  }
  return result;
}

Polynomial change_ring(const Polynomial& f, const RingPtr& target) {
  std::vector<bool> used(f.nvars(), false);
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (t.mono[i] != 0) used[i] = true;
    }
  }
  std::vector<std::size_t> map(f.nvars(), 0);
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    auto idx = target->index_of(f.ring().var(i));
    if (idx) {
      map[i] = *idx;
    } else if (used[i]) {
      throw InvalidArgument("variable '" + f.ring().var(i) + "' missing from target ring");
    }
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (t.mono[i] != 0) m.set(map[i], t.mono[i]);
    }
    terms.push_back({m, t.coef});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

// ---------------------------------------------------------------- weights

WeightVector::WeightVector(std::vector<std::int64_t> entries) : w_(std::move(entries)) {
  bool any = false;
  positive_ = !w_.empty();
  for (auto x : w_) {
    if (x < 0) throw InvalidArgument("weight entries must be nonnegative");
    if (x > 0) any = true;
    if (x == 0) positive_ = false;
  }
  if (!any) throw InvalidArgument("weight vector must have a positive entry");
}

std::int64_t WeightVector::dot(const Monomial& m) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) s += w_[i] * static_cast<std::int64_t>(m[i]);
  return s;
}

std::int64_t WeightVector::dot(std::span<const int> k) const {
  if (k.size() != w_.size()) throw DimensionError("weight and exponent dimensions differ");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) s += w_[i] * k[i];
  return s;
}

std::optional<std::int64_t> weighted_min_degree(const Polynomial& f, const WeightVector& w) {
  if (w.size() != f.nvars()) throw DimensionError("weight vector does not match the ring");
  std::optional<std::int64_t> best;
  for (const auto& t : f.terms()) {
    std::int64_t d = w.dot(t.mono);
    if (!best || d < *best) best = d;
  }
  return best;
}

Polynomial face_part(const Polynomial& f, const WeightVector& w, std::int64_t d) {
  if (w.size() != f.nvars()) throw DimensionError("weight vector does not match the ring");
  if (d < 0) throw InvalidArgument("face level must be nonnegative");
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    if (w.dot(t.mono) == d) kept.push_back(t);
  }
  // a subsequence of a sorted list stays sorted
  return Polynomial::from_terms(f.ring_ptr(), std::move(kept));
}

}  // namespace intclos
