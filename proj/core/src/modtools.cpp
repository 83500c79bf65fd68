#include "intclos/modtools.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "intclos/error.hpp"
#include "intclos/grobner.hpp"

namespace intclos {

std::size_t rank(const PolyMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Polynomial>> a(rows);
  for (std::size_t i = 0; i < rows; ++i) a[i] = m.row(i);
  Polynomial prev = Polynomial::constant(m.ring_ptr(), 1);
  std::size_t r = 0;
  for (; r < std::min(rows, cols); ++r) {
    // lowest-degree nonzero pivot in the trailing block
    std::size_t pi = rows, pj = cols;
    int best = -1;
    for (std::size_t i = r; i < rows; ++i) {
      for (std::size_t j = r; j < cols; ++j) {
        if (a[i][j].is_zero()) continue;
        int d = a[i][j].total_degree();
        if (best < 0 || d < best || (d == best && a[i][j].size() < a[pi][pj].size())) {
          best = d;
          pi = i;
          pj = j;
        }
      }
    }
    if (best < 0) break;
    std::swap(a[r], a[pi]);
    for (auto& row : a) std::swap(row[r], row[pj]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = r + 1; j < cols; ++j) {
        Polynomial v = a[r][r] * a[i][j] - a[i][r] * a[r][j];
        a[i][j] = divide_exact(v, prev);
      }
      a[i][r] = Polynomial(m.ring_ptr());
    }
    prev = a[r][r];
  }
  return r;
}

namespace {

class MinorTable {
 public:
  explicit MinorTable(const PolyMatrix& m) : m_(m) {}

  // Laplace expansion along the first selected row
  const Polynomial& minor(std::uint32_t rows, std::uint32_t cols) {
    std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Polynomial value(m_.ring_ptr());
    if (rows == 0) {
      value = Polynomial::constant(m_.ring_ptr(), 1);
    } else {
      std::size_t r = static_cast<std::size_t>(__builtin_ctz(rows));
      std::uint32_t rest = rows & (rows - 1);
      int sign = 1;
      for (std::size_t c = 0; c < m_.cols(); ++c) {
        if (!(cols >> c & 1u)) continue;
        const Polynomial& entry = m_(r, c);
        if (!entry.is_zero()) {
          const Polynomial& sub = minor(rest, cols & ~(1u << c));
          if (!sub.is_zero()) {
            if (sign > 0) {
              value += entry * sub;
            } else {
              value -= entry * sub;
            }
          }
        }
        sign = -sign;
      }
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

void subsets(std::size_t n, std::size_t k, std::vector<std::uint32_t>& out) {
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == k) out.push_back(mask);
  }
}

}  // namespace

Ideal fitting_ideal(const PolyMatrix& m, std::size_t i) {
  const RingPtr& ring = m.ring_ptr();
  if (i == 0) return Ideal(ring, {Polynomial::constant(ring, 1)});
  if (i > m.rows() || i > m.cols()) return Ideal(ring);
  if (m.rows() > 31 || m.cols() > 31) throw InvalidArgument("matrix too large for minor enumeration");
  MinorTable table(m);
  std::vector<std::uint32_t> rs, cs;
  subsets(m.rows(), i, rs);
  subsets(m.cols(), i, cs);
  std::vector<Polynomial> gens;
  for (auto r : rs) {
    for (auto c : cs) {
      Polynomial d = table.minor(r, c);
      if (d.is_zero()) continue;
      // normalise the sign so duplicates collapse
      if (d.leading_term().coef < 0) d = -d;
      if (std::find(gens.begin(), gens.end(), d) == gens.end()) gens.push_back(std::move(d));
    }
  }
  return Ideal(ring, std::move(gens));
}

std::vector<RowSelection> lambda_set(const Submodule& m) {
  const std::size_t r = rank(m);
  std::vector<RowSelection> out;
  if (r == 0) return out;
  std::vector<std::uint32_t> masks;
  subsets(m.rows(), r, masks);
  for (auto mask : masks) {
    RowSelection sel;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (mask >> i & 1u) sel.push_back(i);
    }
    if (rank(m.select_rows(sel)) == r) out.push_back(std::move(sel));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Submodule project_rows(const Submodule& m, const RowSelection& rows) {
  if (rows.empty()) throw InvalidArgument("empty row selection");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] >= m.rows()) throw DimensionError("row index out of range");
    if (k > 0 && rows[k] <= rows[k - 1]) throw InvalidArgument("row selection must be strictly increasing");
  }
  return m.select_rows(rows);
}

Ideal row_ideal(const Submodule& m, std::size_t i) {
  if (i >= m.rows()) throw DimensionError("row index out of range");
  return Ideal(m.ring_ptr(), m.row(i));
}

Submodule z_module(const Submodule& m) {
  const std::size_t p = m.rows();
  if (rank(m) == p) return PolyMatrix::identity(m.ring_ptr(), p);
  PolyMatrix k = syzygy_kernel(m.transpose());
  PolyMatrix z = syzygy_kernel(k.transpose());
  if (z.cols() == 0) return z;
  return minimal_generators(z);
}

Submodule reduction_matrix_Ap(const std::vector<Polynomial>& a, std::size_t p) {
  if (a.empty()) throw InvalidArgument("reduction matrix of an empty list");
  if (p == 0) throw InvalidArgument("reduction matrix needs p >= 1");
  const RingPtr& ring = a[0].ring_ptr();
  const std::size_t s = a.size();
  PolyMatrix m(ring, p, s + p - 1);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      require_same_ring(ring, a[j].ring_ptr());
      m(i, i + j) = a[j];
    }
  }
  return m;
}

std::pair<Polynomial, Polynomial> vertex_alternation_reduction(const MonomialIdeal& ideal, const RingPtr& ring) {
  if (ideal.dim() != 2 || ring->size() != 2) throw UnsupportedDimension("vertex alternation needs two variables");
  if (ideal.generators().empty()) throw InvalidArgument("empty monomial ideal");
  auto v = newton_polyhedron(2, ideal.generators()).vertices();
  if (v.size() < 2) throw InvalidArgument("the Newton polyhedron has fewer than two vertices");
  std::sort(v.begin(), v.end());
  Polynomial g1(ring), g2(ring);
  for (std::size_t i = 0; i < v.size(); ++i) {
    Polynomial mono = Polynomial::monomial(ring, Monomial(v[i]));
    if (i % 2 == 0) {
      g1 += mono;
    } else {
      g2 += mono;
    }
  }
  return {g1, g2};
}

}  // namespace intclos
