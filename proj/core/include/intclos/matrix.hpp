#pragma once

// Polynomial matrices, submodules of free modules and ideals.
//
// A submodule of R^p is identified with a p x m matrix whose columns
// generate it. The generator list may be redundant.

#include <string>
#include <vector>

#include "intclos/poly.hpp"

namespace intclos {

/// An element of R^p.
using Vector = std::vector<Polynomial>;

class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static PolyMatrix from_columns(RingPtr ring, std::size_t rows, const std::vector<Vector>& cols);
  static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);
  static PolyMatrix identity(RingPtr ring, std::size_t n);
  /// Parses a row-major grid of polynomial strings.
  static PolyMatrix parse(const std::vector<std::vector<std::string>>& grid, const RingPtr& ring);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  std::vector<Polynomial> row(std::size_t i) const;
  std::vector<Vector> columns() const;

  PolyMatrix transpose() const;
  /// [this | other], same number of rows.
  PolyMatrix hconcat(const PolyMatrix& other) const;
  PolyMatrix with_column(const Vector& h) const;
  PolyMatrix select_rows(const std::vector<std::size_t>& idx) const;
  PolyMatrix select_cols(const std::vector<std::size_t>& idx) const;
  /// Drops zero columns.
  PolyMatrix compact() const;

  bool is_zero() const;
  PolyMatrix operator*(const PolyMatrix& o) const;

  std::vector<std::vector<std::string>> to_strings() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> data_;
};

/// Columns generate a submodule of R^rows().
using Submodule = PolyMatrix;

class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> gens = {});
  static Ideal parse(const std::vector<std::string>& gens, const RingPtr& ring);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_->size(); }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }
  bool is_zero() const;
  /// True when every generator is a monomial (up to a scalar).
  bool is_monomial() const;

  /// The 1 x m matrix of generators.
  Submodule as_submodule() const;

  std::vector<std::string> to_strings() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;  // nonzero
};

Ideal operator+(const Ideal& a, const Ideal& b);
/// Product ideal generated by pairwise products.
Ideal operator*(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, unsigned k);
/// (x_1, ..., x_n)^k.
Ideal maximal_ideal_power(const RingPtr& ring, unsigned k);

/// Block-diagonal matrix whose i-th block row is the generator row of ideals[i].
Submodule direct_sum(const std::vector<Ideal>& ideals);

}  // namespace intclos
