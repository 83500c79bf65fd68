#include "intclos/matrix.hpp"

#include "intclos/error.hpp"

namespace intclos {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, std::size_t rows, const std::vector<Vector>& cols) {
  PolyMatrix m(ring, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionError("column length does not match row count");
    for (std::size_t i = 0; i < rows; ++i) {
      require_same_ring(ring, cols[j][i].ring_ptr());
      m(i, j) = cols[j][i];
    }
  }
  return m;
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  PolyMatrix m(ring, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionError("matrix rows have different lengths");
    for (std::size_t j = 0; j < c; ++j) {
      require_same_ring(ring, rows[i][j].ring_ptr());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::parse(const std::vector<std::vector<std::string>>& grid, const RingPtr& ring) {
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& r : grid) {
    std::vector<Polynomial> row;
    for (const auto& s : r) row.push_back(parse_poly(s, ring));
    rows.push_back(std::move(row));
  }
  return from_rows(ring, rows);
}

Vector PolyMatrix::column(std::size_t j) const {
  if (j >= cols_) throw DimensionError("column index out of range");
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t i) const {
  if (i >= rows_) throw DimensionError("row index out of range");
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Vector> PolyMatrix::columns() const {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& other) const {
  require_same_ring(ring_, other.ring_);
  if (other.rows_ != rows_) throw DimensionError("hconcat needs equal row counts");
  PolyMatrix m(ring_, rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

PolyMatrix PolyMatrix::with_column(const Vector& h) const {
  return hconcat(from_columns(ring_, rows_, {h}));
}

PolyMatrix PolyMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  PolyMatrix m(ring_, idx.size(), cols_);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] >= rows_) throw DimensionError("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) m(a, j) = (*this)(idx[a], j);
  }
  return m;
}

PolyMatrix PolyMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  PolyMatrix m(ring_, rows_, idx.size());
  for (std::size_t b = 0; b < idx.size(); ++b) {
    if (idx[b] >= cols_) throw DimensionError("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) m(i, b) = (*this)(i, idx[b]);
  }
  return m;
}

PolyMatrix PolyMatrix::compact() const {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!(*this)(i, j).is_zero()) {
        keep.push_back(j);
        break;
      }
    }
  }
  return select_cols(keep);
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  require_same_ring(ring_, o.ring_);
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  PolyMatrix m(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Polynomial s(ring_);
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k).is_zero() || o(k, j).is_zero()) continue;
        s += (*this)(i, k) * o(k, j);
      }
      m(i, j) = std::move(s);
    }
  }
  return m;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ------------------------------------------------------------------ Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    require_same_ring(ring_, g.ring_ptr());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::parse(const std::vector<std::string>& gens, const RingPtr& ring) {
  std::vector<Polynomial> polys;
  for (const auto& s : gens) polys.push_back(parse_poly(s, ring));
  return Ideal(ring, std::move(polys));
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_monomial() const {
  for (const auto& g : gens_) {
    if (!g.is_monomial()) return false;
  }
  return true;
}

Submodule Ideal::as_submodule() const { return PolyMatrix::from_rows(ring_, {gens_}).compact(); }

std::vector<std::string> Ideal::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string());
  return out;
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  auto gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_ptr(), b.ring_ptr());
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) {
      Polynomial p = f * g;
      bool dup = false;
      for (const auto& q : gens) {
        if (q == p) {
          dup = true;
          break;
        }
      }
      if (!dup) gens.push_back(std::move(p));
    }
  }
  return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal power(const Ideal& a, unsigned k) {
  Ideal r(a.ring_ptr(), {Polynomial::constant(a.ring_ptr(), 1)});
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

Ideal maximal_ideal_power(const RingPtr& ring, unsigned k) {
  const std::size_t n = ring->size();
  std::vector<Polynomial> gens;
  std::vector<int> e(n, 0);
  // enumerate exponent vectors of total degree k
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      gens.push_back(Polynomial::monomial(ring, Monomial(e)));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (n == 0) throw InvalidArgument("ring without variables");
  rec(rec, 0, static_cast<int>(k));
  return Ideal(ring, std::move(gens));
}

Submodule direct_sum(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw InvalidArgument("direct sum of no ideals");
  const RingPtr& ring = ideals[0].ring_ptr();
  std::size_t cols = 0;
  for (const auto& I : ideals) {
    require_same_ring(ring, I.ring_ptr());
    cols += I.gens().size();
  }
  PolyMatrix m(ring, ideals.size(), cols);
  std::size_t c = 0;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (const auto& g : ideals[i].gens()) m(i, c++) = g;
  }
  return m;
}

}  // namespace intclos
