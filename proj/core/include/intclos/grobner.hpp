#pragma once

// Groebner bases of submodules of R^p over Q[x_1..x_n].
//
// Plain Buchberger with the sugar selection strategy and the
// Gebauer-Moeller criteria. Everything built on it (membership, syzygies,
// intersections, saturation, colengths) lives here too.

#include <cstdint>
#include <optional>
#include <vector>

#include "intclos/matrix.hpp"

namespace intclos {

enum class BaseOrder { GrevLex, Lex };

struct ModuleOrder {
  BaseOrder base = BaseOrder::GrevLex;
  /// Compare components before monomials (POT); default is term-over-position.
  bool position_over_term = false;
};

namespace detail {

/// Full order description used by the engine. Two extensions of
/// ModuleOrder are needed internally: an elimination block of leading
/// variables, and a block of leading components that dominates the rest.
struct OrderSpec {
  ModuleOrder order;
  std::size_t nvars = 0;
  std::size_t elim_vars = 0;
  std::size_t component_split = 0;
};

struct ModTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Rational coef;
};

struct ModPoly {
  std::vector<ModTerm> terms;  // descending in the active order
  std::uint32_t sugar = 0;
};

}  // namespace detail

/// Either a nonnegative integer or infinity.
class ColengthValue {
 public:
  static ColengthValue finite(std::uint64_t v) { return ColengthValue(v); }
  static ColengthValue infinite() { return ColengthValue(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  /// Throws InfiniteColength when infinite.
  std::uint64_t value() const;

  friend bool operator==(const ColengthValue&, const ColengthValue&) = default;

 private:
  ColengthValue() = default;
  explicit ColengthValue(std::uint64_t v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

class GroebnerBasis {
 public:
  /// Reduced Groebner basis of the column span of `gens`.
  static GroebnerBasis compute(const Submodule& gens, ModuleOrder order = {});
  static GroebnerBasis compute(const Ideal& ideal, ModuleOrder order = {});

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  /// Ambient free rank p.
  std::size_t rank() const noexcept { return rank_; }
  const ModuleOrder& order() const noexcept { return spec_.order; }
  std::size_t size() const noexcept { return basis_.size(); }

  /// Basis vectors as the columns of a p x size() matrix.
  Submodule generators() const;

  Vector normal_form(const Vector& h) const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Vector& h) const;
  bool contains(const Polynomial& f) const;
  /// True when every column of `m` lies in the module.
  bool contains_all(const Submodule& m) const;
  bool is_whole_module() const;

  /// Number of standard (monomial, position) pairs, i.e. dim_Q R^p / N.
  ColengthValue colength() const;

  /// Leading (monomial, component) pairs, for inspection.
  std::vector<std::pair<ExponentVector, std::size_t>> leading_terms() const;

 private:
  friend class GroebnerAccess;
  GroebnerBasis(RingPtr ring, std::size_t rank, detail::OrderSpec spec, std::vector<detail::ModPoly> basis)
      : ring_(std::move(ring)), rank_(rank), spec_(spec), basis_(std::move(basis)) {}

  RingPtr ring_;
  std::size_t rank_;
  detail::OrderSpec spec_;
  std::vector<detail::ModPoly> basis_;
};

GroebnerBasis groebner_basis(const Submodule& gens, ModuleOrder order = {});

bool membership(const Vector& h, const Submodule& module);
bool membership(const Polynomial& f, const Ideal& ideal);

/// Is every column of `a` in the module generated by `b`?
bool contained(const Submodule& a, const Submodule& b);
bool contained(const Ideal& a, const Ideal& b);
bool module_equal(const Submodule& a, const Submodule& b);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool is_unit_ideal(const Ideal& ideal);

/// Comparisons after localizing at the origin: h lies in N_m iff the
/// ideal N : h is not contained in m.
bool local_membership(const Vector& h, const Submodule& module);
bool local_membership(const Polynomial& f, const Ideal& ideal);
bool local_contained(const Submodule& a, const Submodule& b);
bool local_contained(const Ideal& a, const Ideal& b);
bool local_module_equal(const Submodule& a, const Submodule& b);
bool local_ideal_equal(const Ideal& a, const Ideal& b);

/// Generators of {v : A v = 0}, as the columns of an m x k matrix.
PolyMatrix syzygy_kernel(const PolyMatrix& a);

Submodule intersect(const Submodule& a, const Submodule& b);
Ideal intersect(const Ideal& a, const Ideal& b);

/// I : f.
Ideal colon(const Ideal& ideal, const Polynomial& f);
/// I : f^infinity by iterated colon until stable.
Ideal saturate(const Ideal& ideal, const Polynomial& f);

ColengthValue colength(const Submodule& module);
ColengthValue colength(const Ideal& ideal);

struct LocalColengthOptions {
  unsigned cap = 50;
};

/// Length of (R^p / N) localized at the origin. When R^p / N is finite
/// dimensional this is dim minus the stable dimension of m^k (R^p / N);
/// otherwise colength(N + m^k R^p) is taken for increasing k until two
/// consecutive values agree, throwing NoStabilization past the cap.
ColengthValue local_colength(const Submodule& module, LocalColengthOptions opts = {});
ColengthValue local_colength(const Ideal& ideal, LocalColengthOptions opts = {});

/// Reduced Groebner basis generators with redundant columns pruned.
Submodule minimal_generators(const Submodule& module);
Ideal minimal_generators(const Ideal& ideal);

}  // namespace intclos
