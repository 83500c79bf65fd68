#pragma once

// Ranks, Fitting ideals, row projections and the module Z(M) of vectors
// that do not raise the rank.

#include <utility>
#include <vector>

#include "intclos/matrix.hpp"
#include "intclos/polyhedra.hpp"

namespace intclos {

/// Strictly increasing 0-based row indices.
using RowSelection = std::vector<std::size_t>;

/// Rank over the fraction field.
std::size_t rank(const PolyMatrix& m);

/// Ideal of the i x i minors; (1) for i = 0 and (0) when i exceeds the matrix size.
Ideal fitting_ideal(const PolyMatrix& m, std::size_t i);

/// Row selections of size rank(M) carrying a nonzero maximal minor, in lexicographic order.
std::vector<RowSelection> lambda_set(const Submodule& m);

Submodule project_rows(const Submodule& m, const RowSelection& rows);
/// Ideal generated by the entries of row i.
Ideal row_ideal(const Submodule& m, std::size_t i);

/// Z(M) = {h : rank [M | h] = rank M}, as a reduced generating set.
Submodule z_module(const Submodule& m);

/// The p x (s + p - 1) banded matrix whose i-th row is a shifted by i places.
Submodule reduction_matrix_Ap(const std::vector<Polynomial>& a, std::size_t p);

/// Sums of the odd and of the even vertices of Γ₊(I), ordered by increasing first coordinate.
std::pair<Polynomial, Polynomial> vertex_alternation_reduction(const MonomialIdeal& ideal, const RingPtr& ring);

}  // namespace intclos
