#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradekit/basis.hpp"
#include "gradekit/linalg.hpp"

namespace gradekit {

enum class GradingMode { classical, noncommutative };

std::string to_string(GradingMode m);

/// One failing basis pair of a grading check: the product of basis elements
/// (left_index, right_index), of degrees (left_degree, right_degree), is not
/// contained in the target fiber(s).
struct GradingWitness {
  int left_degree = 0;
  int right_degree = 0;
  int left_index = 0;
  int right_index = 0;
  Vector product;
};

struct GradingReport {
  GradingMode mode = GradingMode::classical;
  bool holds = true;
  std::vector<GradingWitness> witnesses;
};

struct AssociativityReport {
  bool holds = true;
  std::vector<std::array<int, 3>> witnesses;  // failing basis triples
};

struct AlgebraFlags {
  std::optional<bool> associative;
  std::optional<bool> classically_graded;
  std::optional<bool> nc_graded;
  std::optional<bool> unital;
};

/// A finite-dimensional algebra presented by structure constants over a
/// homogeneous basis. The value is immutable after construction; validation
/// results are cached lazily.
class GradedAlgebra {
public:
  using ConstantsMap = std::map<std::pair<int, int>, Vector>;

  GradedAlgebra(BasisPtr basis, ConstantsMap constants, std::string name = {});

  const BasisPtr& basis_ptr() const { return basis_; }
  const GradedBasis& basis() const { return *basis_; }
  const std::string& name() const { return name_; }
  int dim() const { return basis_->size(); }

  /// b_i * b_j; the zero vector when the pair is absent.
  const Vector& product(int i, int j) const;
  const ConstantsMap& constants() const { return constants_; }

  /// Bilinear extension of the structure constants. Exact.
  Vector multiply(const Vector& x, const Vector& y) const;

  /// Exhaustive associativity check over basis triples; cached.
  const AssociativityReport& validate() const;

  /// Fiber-inclusion check for every nonzero structure constant; cached per
  /// mode. Membership in the target fiber(s) is decided by row reduction.
  const GradingReport& grading(GradingMode mode) const;

  AlgebraFlags flags() const;

  /// Solves u*b_i = b_i*u = b_i for all i by exact row reduction. Returns the
  /// unit or nullopt when the system is infeasible; cached. Throws
  /// NotValidated unless validate() has run.
  const std::optional<Vector>& find_unit() const;

  /// Basis indices of the degree-g fiber.
  std::vector<int> fiber(int degree) const;

  /// Unit vectors spanning the fibers of the given degrees.
  std::vector<Vector> fiber_generators(const std::vector<int>& degrees) const;

private:
  BasisPtr basis_;
  ConstantsMap constants_;
  Vector zero_;
  std::string name_;

  mutable std::optional<AssociativityReport> associativity_;
  mutable std::optional<GradingReport> classical_;
  mutable std::optional<GradingReport> noncommutative_;
  mutable std::optional<std::optional<Vector>> unit_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

enum class Side { left, right };

/// Homogeneous inverse of a nonzero homogeneous element: solves a*x = 1
/// (side = right) or x*a = 1 (side = left) with x constrained to the fiber of
/// deg(a)^{-1}. Throws NotHomogeneous / NotUnital / NotValidated.
std::optional<Vector> homogeneous_inverse(const GradedAlgebra& a, const Vector& element,
                                          Side side);

/// Same system without the degree constraint; used to compare feasibility
/// against the constrained solve.
std::optional<Vector> unconstrained_inverse(const GradedAlgebra& a, const Vector& element,
                                            Side side);

/// A linear map between algebras, given per-source-basis-element images.
/// Multiplicativity and gradedness are validated properties, not assumed.
struct GradedAlgebraHom {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<Vector> images;

  Vector apply(const Vector& x) const;
};

struct HomReport {
  bool multiplicative = true;
  bool graded = true;
  std::vector<std::pair<int, int>> multiplicativity_witnesses;  // basis pairs
  std::vector<int> gradedness_witnesses;                        // basis indices

  bool valid() const { return multiplicative && graded; }
};

HomReport validate_hom(const GradedAlgebraHom& f);

GradedAlgebraHom identity_algebra_hom(AlgebraPtr a);
GradedAlgebraHom zero_algebra_hom(AlgebraPtr source, AlgebraPtr target);
/// outer after inner.
GradedAlgebraHom compose(const GradedAlgebraHom& outer, const GradedAlgebraHom& inner);
/// Bit-exact equality of the image matrices (sources/targets must agree structurally).
bool same_hom(const GradedAlgebraHom& a, const GradedAlgebraHom& b);

/// A finite inverse system: objects indexed 0..n-1, and for each recorded
/// relation alpha <= beta a transition map A_beta -> A_alpha.
struct InverseDiagram {
  struct Relation {
    int alpha = 0;
    int beta = 0;
    GradedAlgebraHom map;  // objects[beta] -> objects[alpha]
  };
  std::vector<AlgebraPtr> objects;
  std::vector<Relation> relations;
};

/// The limit algebra in standard form together with its data: `limit` has a
/// basis computed degree fiber by degree fiber from the row-reduced solution
/// space of the compatibility equations; `embeddings` give each limit basis
/// element as a vector of the ambient product; `projections` restrict the
/// product projections.
struct InverseLimitResult {
  AlgebraPtr limit;
  std::vector<GradedAlgebraHom> projections;
  BasisPtr product_basis;
  std::vector<Vector> embeddings;
};

/// Validates the inverse-system laws (identity relations are identities,
/// recorded relations compose transitively) and computes the limit. Throws
/// NotInverseSystem with the offending relation, or BasisMismatch.
InverseLimitResult finite_inverse_limit(const InverseDiagram& diagram);

/// Solves the universal factorization: given a cone u_alpha : F -> A_alpha
/// with f_{alpha beta} . u_beta = u_alpha, returns the unique graded map
/// u : F -> limit with p_alpha . u = u_alpha, or nullopt when no such map
/// exists (the cone is not compatible).
std::optional<GradedAlgebraHom> factor_through_limit(const InverseLimitResult& lim,
                                                     const std::vector<GradedAlgebraHom>& cone);

}  // namespace gradekit
