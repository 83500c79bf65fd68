#pragma once

// Exact multivariate polynomials over the rationals.
//
// Every Polynomial carries the Ring (ordered variable list) it lives in.
// Terms are stored sorted by graded reverse lexicographic order, highest
// first, with no zero coefficients, so operator== is semantic equality.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace intclos {

using Rational = mpq_class;

/// Maximum number of variables of a ring (extension variables included).
inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector of a monomial in its public form.
using ExponentVector = std::vector<int>;

class Ring {
 public:
  explicit Ring(std::vector<std::string> vars);

  std::size_t size() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::string& var(std::size_t i) const { return vars_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);

/// Throws DimensionError unless both rings have the same variable list.
void require_same_ring(const RingPtr& a, const RingPtr& b);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exps);

  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }

  void set(std::size_t i, std::uint32_t value);

  Monomial operator*(const Monomial& o) const;
  /// Requires `o.divides(*this)`.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const noexcept;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const noexcept;

  ExponentVector exponents(std::size_t n) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.e_ == b.e_;
  }

  /// Graded reverse lexicographic comparison over the first n variables:
  /// negative, zero or positive as a <, ==, > b.
  friend int grevlex_compare(const Monomial& a, const Monomial& b, std::size_t n) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
};

struct Term {
  Monomial mono;
  Rational coef;
};

class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
  /// Builds from arbitrary terms; sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_->size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Highest term in grevlex. Requires a nonzero polynomial.
  const Term& leading_term() const;
  /// Largest total degree; -1 for zero.
  int total_degree() const noexcept;
  /// Smallest total degree; -1 for zero.
  int order() const noexcept;

  std::vector<ExponentVector> support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical text form, parseable by parse_poly over the same variables.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;  // grevlex descending, nonzero coefficients
};

/// Parses integer/rational coefficients with + - * ^ / and parentheses.
/// Division is only allowed by a nonzero numeric constant.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// Exact quotient a / b; throws InvalidArgument when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Substitutes images[i] for the i-th variable of f. All images share one ring.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Re-expresses f in a ring that contains all of f's variables (by name).
Polynomial change_ring(const Polynomial& f, const RingPtr& target);

/// Nonnegative integer weight, not all zero.
class WeightVector {
 public:
  explicit WeightVector(std::vector<std::int64_t> entries);

  std::size_t size() const noexcept { return w_.size(); }
  std::int64_t operator[](std::size_t i) const { return w_[i]; }
  const std::vector<std::int64_t>& entries() const noexcept { return w_; }
  bool strictly_positive() const noexcept { return positive_; }

  std::int64_t dot(const Monomial& m) const;
  std::int64_t dot(std::span<const int> k) const;

 private:
  std::vector<std::int64_t> w_;
  bool positive_ = false;
};

/// min <w,k> over supp(f); std::nullopt stands for +infinity (f = 0).
std::optional<std::int64_t> weighted_min_degree(const Polynomial& f, const WeightVector& w);

/// Sum of the terms of f whose w-degree equals d.
Polynomial face_part(const Polynomial& f, const WeightVector& w, std::int64_t d);

}  // namespace intclos
