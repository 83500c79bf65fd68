#pragma once

// Brute-force linear algebra on truncated monomial spaces. Used as an
// independent reference for the Groebner based routines.

#include <map>
#include <utility>
#include <vector>

#include "intclos/matrix.hpp"

namespace oracle {

using intclos::Rational;

/// Exponent vectors of total degree < d in n variables.
inline std::vector<std::vector<int>> monomials_below(std::size_t n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      out.push_back(e);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, d - 1);
  return out;
}

/// Row-reduced span of sparse rational vectors.
class Span {
 public:
  using Vec = std::map<std::pair<std::vector<int>, std::size_t>, Rational>;

  /// Returns true if v was independent of the current span.
  bool add(Vec v) {
    reduce(v);
    if (v.empty()) return false;
    auto pivot = v.begin()->first;
    Rational inv = 1 / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    for (auto& [pk, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      Rational f = it->second;
      axpy(row, -f, v);
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(Vec v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t dim() const { return rows_.size(); }

 private:
  static void axpy(Vec& a, const Rational& f, const Vec& b) {
    for (const auto& [k, c] : b) {
      Rational s = a[k] + f * c;
      if (s == 0) {
        a.erase(k);
      } else {
        a[k] = s;
      }
    }
  }

  void reduce(Vec& v) const {
    for (const auto& [pk, row] : rows_) {
      auto it = v.find(pk);
      if (it == v.end()) continue;
      Rational f = it->second;
      axpy(v, -f, row);
    }
  }

  std::map<std::pair<std::vector<int>, std::size_t>, Vec> rows_;
};

inline Span::Vec truncate(const intclos::Vector& v, int d) {
  Span::Vec out;
  for (std::size_t c = 0; c < v.size(); ++c) {
    for (const auto& t : v[c].terms()) {
      if (static_cast<int>(t.mono.degree()) < d) out[{t.mono.exponents(v[c].nvars()), c}] = t.coef;
    }
  }
  return out;
}

/// Span of (N + m^d R^p) / m^d R^p inside R^p / m^d R^p.
inline Span truncated_span(const intclos::Submodule& n, int d) {
  Span s;
  const auto& ring = n.ring_ptr();
  for (const auto& e : monomials_below(ring->size(), d)) {
    auto mono = intclos::Polynomial::monomial(ring, intclos::Monomial(e));
    for (std::size_t j = 0; j < n.cols(); ++j) {
      intclos::Vector v = n.column(j);
      for (auto& p : v) p = p * mono;
      s.add(truncate(v, d));
    }
  }
  return s;
}

/// dim_Q R^p / (N + m^d R^p).
inline std::size_t truncated_colength(const intclos::Submodule& n, int d) {
  std::size_t total = monomials_below(n.ring_ptr()->size(), d).size() * n.rows();
  return total - truncated_span(n, d).dim();
}

inline std::size_t truncated_colength(const intclos::Ideal& i, int d) {
  return truncated_colength(i.as_submodule(), d);
}

/// Is v in N + m^d R^p?
inline bool truncated_member(const intclos::Vector& v, const intclos::Submodule& n, int d) {
  return truncated_span(n, d).contains(truncate(v, d));
}

}  // namespace oracle
