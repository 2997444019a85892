#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradekit/algebra.hpp"
#include "gradekit/basis.hpp"

namespace gradekit {

struct LieReport {
  bool antisymmetric = true;
  bool jacobi = true;
  bool nc_graded = true;
  std::vector<std::pair<int, int>> antisymmetry_witnesses;
  std::vector<std::array<int, 3>> jacobi_witnesses;
  std::vector<GradingWitness> grading_witnesses;

  bool lie_valid() const { return antisymmetric && jacobi; }
  bool valid() const { return lie_valid() && nc_graded; }
};

/// A Lie algebra presented by bracket structure constants over a homogeneous
/// basis. For valid inputs the diagonal brackets are zero and hence absent.
class GradedLieAlgebra {
public:
  using BracketMap = std::map<std::pair<int, int>, Vector>;

  GradedLieAlgebra(BasisPtr basis, BracketMap brackets, std::string name = {});

  const BasisPtr& basis_ptr() const { return basis_; }
  const GradedBasis& basis() const { return *basis_; }
  const std::string& name() const { return name_; }
  int dim() const { return basis_->size(); }

  const Vector& bracket(int i, int j) const;
  const BracketMap& brackets() const { return brackets_; }
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Antisymmetry on basis pairs, the Jacobi identity on basis triples, and
  /// the fiber inclusion [L_g, L_h] within the gh and hg fibers; cached.
  const LieReport& validate() const;

private:
  BasisPtr basis_;
  BracketMap brackets_;
  Vector zero_;
  std::string name_;
  mutable std::optional<LieReport> report_;
};

using LiePtr = std::shared_ptr<const GradedLieAlgebra>;

/// The bracket [a, b] = ab - ba on an associative classically graded algebra.
/// Throws NotAssociative / NotClassicallyGraded. The result always validates
/// with a noncommutative grading.
GradedLieAlgebra commutator_lie(const GradedAlgebra& a);

struct GradedLieHom {
  LiePtr source;
  LiePtr target;
  std::vector<Vector> images;

  Vector apply(const Vector& x) const;
};

struct LieHomReport {
  bool bracket_preserving = true;
  bool graded = true;
  std::vector<std::pair<int, int>> bracket_witnesses;
  std::vector<int> gradedness_witnesses;

  bool valid() const { return bracket_preserving && graded; }
};

LieHomReport validate_lie_hom(const GradedLieHom& f);

GradedLieHom identity_lie_hom(LiePtr l);
GradedLieHom zero_lie_hom(LiePtr source, LiePtr target);

}  // namespace gradekit
