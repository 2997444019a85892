#pragma once

#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "gradekit/group.hpp"
#include "gradekit/scalar.hpp"

namespace gradekit {

/// A homogeneous basis of a graded free module: each basis element carries a
/// degree, i.e. an element index of the grading group.
struct GradedBasis {
  GroupPtr group;
  std::vector<int> degrees;          // basis index -> group element index
  std::vector<std::string> labels;   // optional; empty or one per element

  int size() const { return static_cast<int>(degrees.size()); }
  int degree(int i) const { return degrees[i]; }
  std::string label(int i) const {
    if (i < static_cast<int>(labels.size()) && !labels[i].empty()) return labels[i];
    return "b" + std::to_string(i);
  }

  /// Structural equality (group, size, degree map); labels are ignored.
  bool same_as(const GradedBasis& o) const {
    return degrees == o.degrees && *group == *o.group;
  }
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

/// Validates degree indices against the group.
BasisPtr make_basis(GroupPtr group, std::vector<int> degrees,
                    std::vector<std::string> labels = {});

/// Sparse vector over a GradedBasis with exact rational coefficients.
/// Invariant: no stored zero coefficients.
class Vector {
public:
  explicit Vector(BasisPtr basis) : basis_(std::move(basis)) {}
  static Vector unit(BasisPtr basis, int index);

  const BasisPtr& basis() const { return basis_; }
  const std::map<int, Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int i) const;
  bool is_zero() const { return coeffs_.empty(); }
  int support_size() const { return static_cast<int>(coeffs_.size()); }
  /// Sorted distinct degrees of the support.
  std::vector<int> support_degrees() const;
  /// First (smallest) support index, or -1 for the zero vector.
  int leading_index() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first; }

  void set_coeff(int i, Scalar c);
  Vector& add_term(int i, const Scalar& c);
  /// this += c * other.
  Vector& add_scaled(const Vector& other, const Scalar& c);

  Vector& operator+=(const Vector& o) { return add_scaled(o, 1); }
  Vector& operator-=(const Vector& o) { return add_scaled(o, -1); }
  Vector& operator*=(const Scalar& c);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }
  friend Vector operator-(Vector v) { return v *= Scalar(-1); }

  /// Equality requires structurally identical bases and equal coefficients.
  friend bool operator==(const Vector& a, const Vector& b);
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Vector& v);

private:
  BasisPtr basis_;
  std::map<int, Scalar> coeffs_;
};

/// Throws BasisMismatch unless the two vectors live over structurally equal bases.
void require_same_basis(const Vector& a, const Vector& b);

/// Restriction of v to the basis elements of the given degree. The sum of
/// the projections over all support degrees reproduces v exactly.
Vector project_component(const Vector& v, int degree);

}  // namespace gradekit
