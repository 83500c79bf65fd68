#pragma once

// Newton polyhedra Γ₊(A) = conv(A) + R^n_{>=0} in dimension n <= 3, with
// exact integer facets, compact faces and covolumes.

#include <cstdint>
#include <optional>
#include <vector>

#include "intclos/matrix.hpp"

namespace intclos {

inline constexpr std::size_t kMaxPolyhedronDim = 3;

/// Supporting inequality <normal, k> >= level. Normals are primitive and nonnegative.
struct Facet {
  std::vector<std::int64_t> normal;
  std::int64_t level = 0;

  friend bool operator==(const Facet&, const Facet&) = default;
};

struct CompactFace {
  std::vector<ExponentVector> vertices;  // sorted
  int dim = 0;
  /// Strictly positive weight whose minimum over the polyhedron is attained exactly on this face.
  WeightVector witness;
};

class NewtonPolyhedron {
 public:
  NewtonPolyhedron(std::size_t n, std::vector<ExponentVector> vertices, std::vector<Facet> facets,
                   std::vector<CompactFace> faces);

  std::size_t dim() const noexcept { return n_; }
  /// Sorted lexicographically.
  const std::vector<ExponentVector>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  /// Vertices first, then edges, then 2-faces.
  const std::vector<CompactFace>& compact_faces() const noexcept { return faces_; }

 private:
  std::size_t n_;
  std::vector<ExponentVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<CompactFace> faces_;
};

/// Monomial ideal stored by its minimal exponent vectors.
class MonomialIdeal {
 public:
  /// Keeps only the minimal elements of `exponents`.
  MonomialIdeal(std::size_t n, std::vector<ExponentVector> exponents);

  std::size_t dim() const noexcept { return n_; }
  /// Sorted lexicographically, descending.
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  bool contains(const ExponentVector& k) const;
  Ideal to_ideal(const RingPtr& ring) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_;
  std::vector<ExponentVector> gens_;
};

NewtonPolyhedron newton_polyhedron(std::size_t n, const std::vector<ExponentVector>& support);
NewtonPolyhedron newton_polyhedron(const Polynomial& f);
/// Γ₊ of the union of the supports of the generators.
NewtonPolyhedron newton_polyhedron(const Ideal& ideal);

NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q);
bool contains_point(const NewtonPolyhedron& p, const ExponentVector& k);
MonomialIdeal term_ideal(const NewtonPolyhedron& p);

/// Volume of R^n_{>=0} minus P; std::nullopt when it is infinite.
std::optional<Rational> covolume(const NewtonPolyhedron& p);
/// (covol(P+Q) - covol(P) - covol(Q)) / 2, for n = 2.
std::optional<Rational> mixed_covolume(const NewtonPolyhedron& p, const NewtonPolyhedron& q);

int compact_faces_max_dim(const NewtonPolyhedron& p);
bool polyhedra_equal(const NewtonPolyhedron& p, const NewtonPolyhedron& q);

}  // namespace intclos
