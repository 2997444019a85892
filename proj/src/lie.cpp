#include "gradekit/lie.hpp"

#include "gradekit/error.hpp"
#include "gradekit/linalg.hpp"

namespace gradekit {

GradedLieAlgebra::GradedLieAlgebra(BasisPtr basis, BracketMap brackets, std::string name)
    : basis_(std::move(basis)), zero_(Vector(basis_)), name_(std::move(name)) {
  const int n = basis_->size();
  for (auto& [key, value] : brackets) {
    if (key.first < 0 || key.first >= n || key.second < 0 || key.second >= n)
      throw Error("ValidationError", "bracket pair out of range");
    if (!value.basis()->same_as(*basis_))
      throw Error("BasisMismatch", "bracket vector over a foreign basis");
    if (!value.is_zero()) brackets_.emplace(key, std::move(value));
  }
}

const Vector& GradedLieAlgebra::bracket(int i, int j) const {
  auto it = brackets_.find({i, j});
  return it == brackets_.end() ? zero_ : it->second;
}

Vector GradedLieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (!x.basis()->same_as(*basis_) || !y.basis()->same_as(*basis_))
    throw Error("BasisMismatch", "operands do not live over the Lie basis");
  Vector out(basis_);
  for (const auto& [i, a] : x.coeffs())
    for (const auto& [j, b] : y.coeffs()) out.add_scaled(bracket(i, j), a * b);
  return out;
}

const LieReport& GradedLieAlgebra::validate() const {
  if (report_) return *report_;
  LieReport report;
  const int n = dim();

  // Pairwise antisymmetry; over the rationals this is equivalent to [a,a] = 0.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vector sum = bracket(i, j);
      sum += bracket(j, i);
      const bool diagonal_nonzero = i == j && !bracket(i, i).is_zero();
      if (!sum.is_zero() || diagonal_nonzero) {
        report.antisymmetric = false;
        report.antisymmetry_witnesses.emplace_back(i, j);
      }
    }

  for (int a = 0; a < n; ++a) {
    const Vector ua = Vector::unit(basis_, a);
    for (int b = 0; b < n; ++b) {
      const Vector ub = Vector::unit(basis_, b);
      for (int c = 0; c < n; ++c) {
        const Vector uc = Vector::unit(basis_, c);
        Vector sum = bracket(ua, bracket(ub, uc));
        sum += bracket(uc, bracket(ua, ub));
        sum += bracket(ub, bracket(uc, ua));
        if (!sum.is_zero()) {
          report.jacobi = false;
          report.jacobi_witnesses.push_back({a, b, c});
        }
      }
    }
  }

  const GroupTable& grp = *basis_->group;
  for (const auto& [key, value] : brackets_) {
    const int g = basis_->degree(key.first);
    const int h = basis_->degree(key.second);
    const int gh = grp.mul(g, h);
    const int hg = grp.mul(h, g);
    std::vector<Vector> gens;
    for (int k = 0; k < n; ++k)
      if (basis_->degree(k) == gh || basis_->degree(k) == hg)
        gens.push_back(Vector::unit(basis_, k));
    if (!span_membership(gens, value).in) {
      report.nc_graded = false;
      report.grading_witnesses.push_back({g, h, key.first, key.second, value});
    }
  }

  report_ = std::move(report);
  return *report_;
}

GradedLieAlgebra commutator_lie(const GradedAlgebra& a) {
  if (!a.validate().holds)
    throw Error("NotAssociative", "commutator bracket requires an associative algebra");
  if (!a.grading(GradingMode::classical).holds)
    throw Error("NotClassicallyGraded", "commutator bracket requires a classical grading");

  GradedLieAlgebra::BracketMap brackets;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector v = a.product(i, j);
      v -= a.product(j, i);
      if (!v.is_zero()) brackets.emplace(std::make_pair(i, j), std::move(v));
    }
  return GradedLieAlgebra(a.basis_ptr(), std::move(brackets), "Lie(" + a.name() + ")");
}

Vector GradedLieHom::apply(const Vector& x) const {
  if (!x.basis()->same_as(source->basis()))
    throw Error("BasisMismatch", "argument does not live over the hom source");
  Vector out(target->basis_ptr());
  for (const auto& [i, c] : x.coeffs()) out.add_scaled(images[i], c);
  return out;
}

LieHomReport validate_lie_hom(const GradedLieHom& f) {
  if (static_cast<int>(f.images.size()) != f.source->dim())
    throw Error("ValidationError", "hom image list does not match the source dimension");
  for (const auto& v : f.images)
    if (!v.basis()->same_as(f.target->basis()))
      throw Error("BasisMismatch", "hom image over a foreign basis");
  if (!(*f.source->basis().group == *f.target->basis().group))
    throw Error("BasisMismatch", "hom between Lie algebras graded by different groups");

  LieHomReport report;
  const int n = f.source->dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vector lhs = f.apply(f.source->bracket(i, j));
      const Vector rhs = f.target->bracket(f.images[i], f.images[j]);
      if (!(lhs == rhs)) {
        report.bracket_preserving = false;
        report.bracket_witnesses.emplace_back(i, j);
      }
    }
  for (int i = 0; i < n; ++i) {
    const int d = f.source->basis().degree(i);
    for (int deg : f.images[i].support_degrees())
      if (deg != d) {
        report.graded = false;
        report.gradedness_witnesses.push_back(i);
        break;
      }
  }
  return report;
}

GradedLieHom identity_lie_hom(LiePtr l) {
  GradedLieHom f;
  f.source = l;
  f.target = l;
  for (int i = 0; i < l->dim(); ++i) f.images.push_back(Vector::unit(l->basis_ptr(), i));
  return f;
}

GradedLieHom zero_lie_hom(LiePtr source, LiePtr target) {
  GradedLieHom f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.images.assign(f.source->dim(), Vector(f.target->basis_ptr()));
  return f;
}

}  // namespace gradekit
