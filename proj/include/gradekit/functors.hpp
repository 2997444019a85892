#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradekit/algebra.hpp"
#include "gradekit/group.hpp"

namespace gradekit {

/// Coefficient tables for the two-parameter deformed product
///   a * b  |->  lambda[deg a][deg b] * ab + mu[deg b][deg a] * ba
/// on a classically graded algebra.
struct DeformationData {
  GroupPtr group;
  std::vector<std::vector<Scalar>> lambda;  // |G| x |G|
  std::vector<std::vector<Scalar>> mu;      // |G| x |G|

  static DeformationData constant(GroupPtr group, const Scalar& l, const Scalar& m);
  /// lambda == 1, mu == 0: the undeformed case.
  static DeformationData trivial(GroupPtr group);

  /// The unit-preserving condition lambda[g][e] + mu[e][g] = 1 =
  /// lambda[e][g] + mu[g][e] for all g.
  bool preserves_unit() const;
};

/// Validates table dimensions against the group order.
DeformationData make_deformation(GroupPtr group, std::vector<std::vector<Scalar>> lambda,
                                 std::vector<std::vector<Scalar>> mu);

/// The deformed algebra: same basis and degree map, new structure constants.
/// Requires the input to be classically graded (NotClassicallyGraded).
/// The result carries a noncommutative grading whenever the input grading holds.
GradedAlgebra deform(const GradedAlgebra& a, const DeformationData& d);

/// Same module, product reversed, degree map composed with group inversion.
/// An involution on the bit-exact representation.
GradedAlgebra opposite(const GradedAlgebra& a);

/// Restriction along a group monomorphism theta : H -> G. Keeps the basis
/// elements whose degree lies in the image of theta, pulls degrees back
/// through theta, and truncates products to the retained basis. Errors:
/// NotMono; NotClosed when a product of retained elements leaves their span.
GradedAlgebra restrict_algebra(const GradedAlgebra& a, const GroupHom& theta);

/// Induction along theta : H -> G. Same basis and constants; degrees pushed
/// forward, so every fiber outside the image of theta is zero. Errors: NotMono.
GradedAlgebra induce_algebra(const GradedAlgebra& a, const GroupHom& theta);

/// Coarsening along an epimorphism pi : G -> H: degrees composed with pi.
/// Errors: NotEpi.
GradedAlgebra coarsen_algebra(const GradedAlgebra& a, const GroupHom& pi);

/// Group-ring lift along pi : G -> G/N of a classically graded algebra over
/// the quotient, with the deformed product given by d over G. The lifted
/// basis consists of pairs (b, g) with deg(b) = pi(g), graded by g.
struct LiftedAlgebra {
  AlgebraPtr algebra;
  std::vector<std::pair<int, int>> pair_of_index;  // lifted index -> (base index, g)
  std::map<std::pair<int, int>, int> index_of_pair;
};

LiftedAlgebra group_ring_lift(const AlgebraPtr& a, const GroupHom& pi,
                              const DeformationData& d);

// Functor action on morphisms. Each returns the hom between freshly built
// images of the endpoints; matrices are reindexed only where the basis changes.
GradedAlgebraHom restrict_hom(const GradedAlgebraHom& f, const GroupHom& theta);
GradedAlgebraHom induce_hom(const GradedAlgebraHom& f, const GroupHom& theta);
GradedAlgebraHom coarsen_hom(const GradedAlgebraHom& f, const GroupHom& pi);
GradedAlgebraHom lift_hom(const GradedAlgebraHom& f, const GroupHom& pi,
                          const DeformationData& d);

/// Report of an adjunction round-trip verification.
struct AdjunctionReport {
  bool hom_valid = true;        // the given hom validates
  bool transposed_valid = true; // its adjoint transpose validates
  bool roundtrip_exact = true;  // transpose-inverse-transpose reproduces the input
  std::optional<bool> naturality;  // set when sample morphisms were supplied
  std::vector<std::string> witnesses;

  bool ok() const {
    return hom_valid && transposed_valid && roundtrip_exact &&
           naturality.value_or(true);
  }
};

/// Verifies the induction/restriction adjunction at one instance.
/// a lives over H, b over G, theta : H -> G is mono, f : induce(a) -> b.
/// Computes the transpose f_H : a -> restrict(b), applies the inverse
/// transpose, and checks bit-exact equality with f. When sample morphisms
/// p : a' -> a (over H) and q : b -> b' (over G) are given, also evaluates
/// both paths of the naturality square on every basis element.
struct NaturalitySample {
  GradedAlgebraHom p;  // a' -> a
  GradedAlgebraHom q;  // b -> b'
};

AdjunctionReport adjunction_phi_roundtrip(const AlgebraPtr& a, const AlgebraPtr& b,
                                          const GroupHom& theta, const GradedAlgebraHom& f,
                                          const std::optional<NaturalitySample>& sample = {});

/// Verifies the coarsening/group-ring adjunction at one instance.
/// a lives over G and carries the deformation data d (over G), b over G/N,
/// pi : G -> G/N is epi, f : coarsen(a) -> b. The transpose a -> lift(b) is
/// checked to be a graded hom for the deformed products on both sides, then
/// inverted and compared with f bit-exactly. Sample morphisms p : a' -> a
/// (over G) and q : b -> b' (over G/N) drive the naturality check.
AdjunctionReport adjunction_psi_roundtrip(const AlgebraPtr& a, const AlgebraPtr& b,
                                          const GroupHom& pi, const DeformationData& d,
                                          const GradedAlgebraHom& f,
                                          const std::optional<NaturalitySample>& sample = {});

/// The transpose maps themselves, exposed for tests and the CLI.
GradedAlgebraHom phi_transpose(const AlgebraPtr& a, const AlgebraPtr& b,
                               const GroupHom& theta, const GradedAlgebraHom& f);
GradedAlgebraHom phi_transpose_inverse(const AlgebraPtr& a, const AlgebraPtr& b,
                                       const GroupHom& theta, const GradedAlgebraHom& f_h);
GradedAlgebraHom psi_transpose(const AlgebraPtr& a, const LiftedAlgebra& lifted_b,
                               const GroupHom& pi, const GradedAlgebraHom& f);
GradedAlgebraHom psi_transpose_inverse(const AlgebraPtr& a, const AlgebraPtr& b,
                                       const LiftedAlgebra& lifted_b, const GroupHom& pi,
                                       const GradedAlgebraHom& g);

}  // namespace gradekit
