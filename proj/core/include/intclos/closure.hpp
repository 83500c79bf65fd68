#pragma once

// Integral closure of submodules of R^p: Newton non-degeneracy, the
// C0(M) and minors-constraint closures, decomposability, analytic spread
// and the arc membership test.

#include <optional>
#include <string>
#include <vector>

#include "intclos/modtools.hpp"
#include "intclos/multiplicity.hpp"
#include "intclos/polyhedra.hpp"

namespace intclos {

enum class NNDVerdict { Nondegenerate, Degenerate, NotApplicable };
std::string to_string(NNDVerdict v);

struct FaceCheck {
  std::vector<ExponentVector> vertices;
  int dim = 0;
  WeightVector witness;
  /// Face parts; a single row of generators in the ideal case.
  PolyMatrix face_matrix;
  /// Maximal minors of the face matrix saturated by x_1 ... x_n.
  Ideal saturation;
  bool unit = false;
};

struct NNDReport {
  NNDVerdict verdict = NNDVerdict::NotApplicable;
  std::size_t rank = 0;
  std::vector<FaceCheck> faces;
  /// Submaximal rank: one report per L in Lambda_M.
  std::vector<RowSelection> sub_rows;
  std::vector<NNDReport> sub_reports;
  std::string note;
};

/// Throws InvalidArgument for the zero ideal. NotApplicable when n > 3.
NNDReport nnd_check_ideal(const Ideal& ideal);
/// Throws InvalidArgument for the zero module. NotApplicable when n > 3.
NNDReport nnd_check_module(const Submodule& m);

struct JMIdeal {
  Ideal jm;
  /// Term ideal of the Newton polyhedron of J_M.
  MonomialIdeal jm0;
};

JMIdeal jm_ideal(const Submodule& m);

enum class KProvenance { ComputedNND, UserSupplied };
std::string to_string(KProvenance p);

struct ClosureResult {
  Submodule generators;
  /// Closed ideal playing the role of the closure of I_r(M).
  Ideal k;
  KProvenance provenance;
};

/// C0(M), valid when the closure of I_r(M) equals J_M^0; throws NotCertified
/// unless I_r(M) is Newton non-degenerate with the polyhedron of J_M.
ClosureResult closure_nnd(const Submodule& m);

/// {h in Z(M) : every r-minor of [M|h] lies in K}. K must contain I_r(M)
/// locally and is trusted to be integrally closed.
ClosureResult closure_via_minors(const Submodule& m, const Ideal& k);

/// rank([M|h]) = rank(M) and I_r([M|h]) is locally inside K.
bool integral_membership(const Vector& h, const Submodule& m, const Ideal& k);

enum class DecompVerdict { Yes, No, NotApplicable };
enum class DecompMethod { Numerical, Polyhedral };
std::string to_string(DecompVerdict v);
std::string to_string(DecompMethod m);

struct DecompEvidence {
  RowSelection rows;
  std::optional<MultiplicityValue> e;
  std::optional<MultiplicityValue> delta;
  /// Polyhedral path: I_r(M_L) non-degenerate with the polyhedron of the row product.
  std::optional<bool> minors_nnd;
  std::optional<bool> same_polyhedron;
};

struct DecomposabilityReport {
  DecompVerdict verdict = DecompVerdict::NotApplicable;
  DecompMethod method = DecompMethod::Numerical;
  std::vector<DecompEvidence> per_l;
  std::string note;
};

DecomposabilityReport decomposable_check(const Submodule& m, const RandomSpec& rs = {});

/// Is the closure of I_r(M) equal to the closure of J_M? Throws
/// InvalidArgument when neither the polyhedral nor the numerical test applies.
bool wdcentral_condition2(const Submodule& m, const RandomSpec& rs = {});

unsigned analytic_spread_monomial_ideal(const MonomialIdeal& ideal);
/// Throws NotCertified unless M has rank p and is Newton non-degenerate.
unsigned analytic_spread_nnd_module(const Submodule& m);
/// Spread of I_1 + ... + I_p via the product; all ideals must be monomial.
unsigned spread_direct_sum(const std::vector<Ideal>& ideals);

struct ArcOrder {
  std::size_t i = 0;
  /// Smallest t-order of the i-minors; nullopt when they all vanish.
  std::optional<int> module_order;
  std::optional<int> augmented_order;
};

struct ArcReport {
  bool member = true;
  std::vector<ArcOrder> orders;
};

/// Pulls M and h back along phi (one univariate polynomial per variable,
/// vanishing at 0) and compares minimal orders of the minors.
ArcReport arc_pullback_test(const Submodule& m, const Vector& h, const std::vector<Polynomial>& phi);

}  // namespace intclos
