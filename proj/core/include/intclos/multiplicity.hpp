#pragma once

// Hilbert-Samuel, mixed and Buchsbaum-Rim multiplicities at the origin,
// computed as local colengths of generic reductions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intclos/matrix.hpp"
#include "intclos/polyhedra.hpp"

namespace intclos {

struct RandomSpec {
  std::uint64_t seed = 42;
  std::int64_t bound = 100;
  unsigned trials = 5;

  /// Throws InvalidArgument unless bound >= 1 and trials >= 1.
  void validate() const;
};

enum class MultiplicityMethod { ColengthDirect, GenericReduction, Volume };

std::string to_string(MultiplicityMethod m);

struct MultiplicityValue {
  std::uint64_t value = 0;
  MultiplicityMethod method = MultiplicityMethod::ColengthDirect;
  /// Set for generic-reduction values.
  unsigned trials = 0;
  std::optional<std::uint64_t> seed;
  std::vector<std::uint64_t> per_trial;
};

MultiplicityValue hs_multiplicity(const Ideal& ideal, const RandomSpec& rs = {});

/// e(I_1, ..., I_n) for n ideals in n variables.
MultiplicityValue mixed_multiplicity(const std::vector<Ideal>& ideals, const RandomSpec& rs = {});

/// Sum of e_{i_1..i_p}(M_1, ..., M_p) over i_1 + ... + i_p = n.
MultiplicityValue delta(const Submodule& m, const RandomSpec& rs = {});

MultiplicityValue buchsbaum_rim(const Submodule& m, const RandomSpec& rs = {});

/// n! times the covolume of Γ₊(I).
MultiplicityValue monomial_multiplicity(const MonomialIdeal& ideal);

/// Smallest k <= cap with I L^k = L^(k+1), or nullopt if none. Requires I ⊆ L.
std::optional<unsigned> ideal_reduction_check(const Ideal& i, const Ideal& l, unsigned cap = 10);

}  // namespace intclos
