#include "intclos/polyhedra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "intclos/error.hpp"

namespace intclos {

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t dot(const Vec& w, const ExponentVector& k) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * k[i];
  return s;
}

bool dominated_by(const ExponentVector& a, const ExponentVector& b) {
  // b <= a coordinatewise
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) return false;
  }
  return true;
}

/// Normalises to a primitive nonnegative vector; nullopt if mixed signs or zero.
std::optional<Vec> primitive_nonnegative(Vec v) {
  bool pos = false, neg = false;
  for (auto x : v) {
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  if (pos == neg) return std::nullopt;
  std::int64_t g = 0;
  for (auto& x : v) {
    if (neg) x = -x;
    g = std::gcd(g, x);
  }
  for (auto& x : v) x /= g;
  return v;
}

std::size_t rank_of(const std::vector<Vec>& rows, std::size_t n) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (auto x : r) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<ExponentVector> minimal_points(std::vector<ExponentVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dom = false;
    for (std::size_t j = 0; j < pts.size() && !dom; ++j) {
      if (i != j && dominated_by(pts[i], pts[j])) dom = true;
    }
    if (!dom) out.push_back(pts[i]);
  }
  return out;
}

Vec normal_through(const std::vector<Vec>& span, std::size_t n) {
  if (n == 1) return {1};
  if (n == 2) return {-span[0][1], span[0][0]};
  const Vec& a = span[0];
  const Vec& b = span[1];
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::vector<Facet> find_facets(const std::vector<ExponentVector>& pts, std::size_t n) {
  // elements: points (index < pts.size()) then coordinate directions
  const std::size_t np = pts.size();
  std::set<Vec> seen;
  std::vector<Facet> facets;
  auto consider = [&](std::size_t base, const std::vector<std::size_t>& others) {
    std::vector<Vec> span;
    for (std::size_t o : others) {
      Vec v(n, 0);
      if (o < np) {
        for (std::size_t i = 0; i < n; ++i) v[i] = pts[o][i] - pts[base][i];
      } else {
        v[o - np] = 1;
      }
      span.push_back(std::move(v));
    }
    auto w = primitive_nonnegative(normal_through(span, n));
    if (!w || seen.count(*w)) return;
    std::int64_t level = dot(*w, pts[base]);
    for (const auto& p : pts) {
      if (dot(*w, p) < level) return;
    }
    seen.insert(*w);
    facets.push_back({*w, level});
  };
  const std::size_t total = np + n;
  for (std::size_t b = 0; b < np; ++b) {
    if (n == 1) {
      consider(b, {});
      continue;
    }
    for (std::size_t i = 0; i < total; ++i) {
      if (i == b || (i < np && i < b)) continue;
      if (n == 2) {
        consider(b, {i});
        continue;
      }
      for (std::size_t j = i + 1; j < total; ++j) {
        if (j == b || (j < np && j < b)) continue;
        consider(b, {i, j});
      }
    }
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
  return facets;
}

void check_dim(std::size_t n) {
  if (n == 0 || n > kMaxPolyhedronDim) {
    throw UnsupportedDimension("Newton polyhedra are supported in dimensions 1 to 3, got " + std::to_string(n));
  }
}

// twice the area of the convex hull of 2D points
Rational hull_area2(std::vector<std::pair<std::int64_t, std::int64_t>> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return 0;
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<std::int64_t, std::int64_t>> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  std::int64_t a = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& u = h[i];
    const auto& v = h[(i + 1) % h.size()];
    a += u.first * v.second - u.second * v.first;
  }
  return Rational(static_cast<long>(a < 0 ? -a : a));
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(std::size_t n, std::vector<ExponentVector> vertices, std::vector<Facet> facets,
                                   std::vector<CompactFace> faces)
    : n_(n), vertices_(std::move(vertices)), facets_(std::move(facets)), faces_(std::move(faces)) {}

NewtonPolyhedron newton_polyhedron(std::size_t n, const std::vector<ExponentVector>& support) {
  check_dim(n);
  if (support.empty()) throw InvalidArgument("Newton polyhedron of an empty support");
  for (const auto& k : support) {
    if (k.size() != n) throw DimensionError("exponent vector has the wrong length");
    for (int e : k) {
      if (e < 0) throw InvalidArgument("negative exponent");
    }
  }
  std::vector<ExponentVector> pts = minimal_points(support);
  std::vector<Facet> facets = find_facets(pts, n);

  std::vector<ExponentVector> vertices;
  for (const auto& p : pts) {
    std::vector<Vec> normals;
    for (const auto& f : facets) {
      if (dot(f.normal, p) == f.level) normals.push_back(f.normal);
    }
    if (rank_of(normals, n) == n) vertices.push_back(p);
  }

  // faces, identified by their vertex sets, closed under intersection
  std::set<std::vector<ExponentVector>> family;
  for (const auto& v : vertices) family.insert({v});
  for (const auto& f : facets) {
    std::vector<ExponentVector> on;
    for (const auto& v : vertices) {
      if (dot(f.normal, v) == f.level) on.push_back(v);
    }
    if (!on.empty()) family.insert(on);
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<ExponentVector>> cur(family.begin(), family.end());
    for (std::size_t a = 0; a < cur.size(); ++a) {
      for (std::size_t b = a + 1; b < cur.size(); ++b) {
        std::vector<ExponentVector> c;
        std::set_intersection(cur[a].begin(), cur[a].end(), cur[b].begin(), cur[b].end(), std::back_inserter(c));
        if (!c.empty() && family.insert(c).second) grew = true;
      }
    }
  }

  std::vector<CompactFace> faces;
  for (const auto& s : family) {
    std::vector<Vec> normals;
    Vec sum(n, 0);
    for (const auto& f : facets) {
      bool all = std::all_of(s.begin(), s.end(), [&](const ExponentVector& v) { return dot(f.normal, v) == f.level; });
      if (!all) continue;
      normals.push_back(f.normal);
      for (std::size_t i = 0; i < n; ++i) sum[i] += f.normal[i];
    }
    if (std::any_of(sum.begin(), sum.end(), [](std::int64_t x) { return x <= 0; })) continue;
    std::int64_t g = 0;
    for (auto x : sum) g = std::gcd(g, x);
    for (auto& x : sum) x /= g;
    int d = static_cast<int>(n - rank_of(normals, n));
    faces.push_back({s, d, WeightVector(sum)});
  }
  std::stable_sort(faces.begin(), faces.end(), [](const CompactFace& a, const CompactFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  return NewtonPolyhedron(n, std::move(vertices), std::move(facets), std::move(faces));
}

NewtonPolyhedron newton_polyhedron(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("Newton polyhedron of the zero polynomial");
  return newton_polyhedron(f.nvars(), f.support());
}

NewtonPolyhedron newton_polyhedron(const Ideal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("Newton polyhedron of the zero ideal");
  std::vector<ExponentVector> pts;
  for (const auto& g : ideal.gens()) {
    auto s = g.support();
    pts.insert(pts.end(), s.begin(), s.end());
  }
  return newton_polyhedron(ideal.nvars(), pts);
}

NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q) {
  if (p.dim() != q.dim()) throw DimensionError("Minkowski sum of polyhedra of different dimensions");
  std::vector<ExponentVector> pts;
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      ExponentVector s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      pts.push_back(std::move(s));
    }
  }
  return newton_polyhedron(p.dim(), pts);
}

bool contains_point(const NewtonPolyhedron& p, const ExponentVector& k) {
  if (k.size() != p.dim()) throw DimensionError("point has the wrong dimension");
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [&](const Facet& f) { return dot(f.normal, k) >= f.level; });
}

MonomialIdeal term_ideal(const NewtonPolyhedron& p) {
  const std::size_t n = p.dim();
  check_dim(n);
  ExponentVector hi(n, 0);
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < n; ++i) hi[i] = std::max(hi[i], v[i]);
  }
  std::vector<ExponentVector> gens;
  ExponentVector k(n, 0);
  for (;;) {
    if (contains_point(p, k)) {
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i) {
        if (k[i] == 0) continue;
        --k[i];
        if (contains_point(p, k)) minimal = false;
        ++k[i];
      }
      if (minimal) gens.push_back(k);
    }
    std::size_t i = 0;
    while (i < n) {
      if (++k[i] <= hi[i]) break;
      k[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return MonomialIdeal(n, std::move(gens));
}

std::optional<Rational> covolume(const NewtonPolyhedron& p) {
  const std::size_t n = p.dim();
  check_dim(n);
  for (std::size_t axis = 0; axis < n; ++axis) {
    bool hit = std::any_of(p.vertices().begin(), p.vertices().end(), [&](const ExponentVector& v) {
      for (std::size_t i = 0; i < n; ++i) {
        if (i != axis && v[i] != 0) return false;
      }
      return true;
    });
    if (!hit) return std::nullopt;
  }
  if (n == 1) return Rational(p.vertices().front()[0]);
  if (n == 2) {
    auto v = p.vertices();
    std::sort(v.begin(), v.end());
    Rational area = 0;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
      std::int64_t d = static_cast<std::int64_t>(v[j][0]) * v[j + 1][1] -
                       static_cast<std::int64_t>(v[j][1]) * v[j + 1][0];
      area += Rational(static_cast<long>(d < 0 ? -d : d));
    }
    return area / 2;
  }
  // cone from the origin over each compact facet: level * projected area / (3 w_k)
  Rational vol = 0;
  for (const auto& f : p.facets()) {
    if (std::any_of(f.normal.begin(), f.normal.end(), [](std::int64_t x) { return x <= 0; })) continue;
    std::vector<std::pair<std::int64_t, std::int64_t>> proj;
    for (const auto& v : p.vertices()) {
      if (dot(f.normal, v) == f.level) proj.emplace_back(v[0], v[1]);
    }
    Rational area2 = hull_area2(std::move(proj));
    vol += Rational(static_cast<long>(f.level)) * area2 / (6 * Rational(static_cast<long>(f.normal[2])));
  }
  return vol;
}

std::optional<Rational> mixed_covolume(const NewtonPolyhedron& p, const NewtonPolyhedron& q) {
  if (p.dim() != 2 || q.dim() != 2) throw UnsupportedDimension("mixed covolume is implemented for n = 2");
  auto a = covolume(p), b = covolume(q), c = covolume(minkowski_sum(p, q));
  if (!a || !b || !c) return std::nullopt;
  return (*c - *a - *b) / 2;
}

int compact_faces_max_dim(const NewtonPolyhedron& p) {
  int d = 0;
  for (const auto& f : p.compact_faces()) d = std::max(d, f.dim);
  return d;
}

bool polyhedra_equal(const NewtonPolyhedron& p, const NewtonPolyhedron& q) {
  if (p.dim() != q.dim()) throw DimensionError("comparing polyhedra of different dimensions");
  return p.vertices() == q.vertices();
}

// ----------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<ExponentVector> exponents) : n_(n) {
  for (const auto& k : exponents) {
    if (k.size() != n) throw DimensionError("exponent vector has the wrong length");
  }
  gens_ = minimal_points(std::move(exponents));
  std::sort(gens_.begin(), gens_.end(), std::greater<>());
}

bool MonomialIdeal::contains(const ExponentVector& k) const {
  if (k.size() != n_) throw DimensionError("exponent vector has the wrong length");
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return dominated_by(k, g); });
}

Ideal MonomialIdeal::to_ideal(const RingPtr& ring) const {
  if (ring->size() != n_) throw DimensionError("ring has the wrong number of variables");
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(Polynomial::monomial(ring, Monomial(g)));
  return Ideal(ring, std::move(gens));
}

}  // namespace intclos
