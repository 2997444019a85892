#include "gradekit/basis.hpp"

#include <algorithm>

#include "gradekit/error.hpp"

namespace gradekit {

BasisPtr make_basis(GroupPtr group, std::vector<int> degrees,
                    std::vector<std::string> labels) {
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] < 0 || degrees[i] >= group->order)
      throw Error("ValidationError",
                  "degree of basis element " + std::to_string(i) + " is out of range");
  if (!labels.empty() && labels.size() != degrees.size())
    throw Error("ValidationError", "label list length does not match basis size");
  auto b = std::make_shared<GradedBasis>();
  b->group = std::move(group);
  b->degrees = std::move(degrees);
  b->labels = std::move(labels);
  return b;
}

Vector Vector::unit(BasisPtr basis, int index) {
  Vector v(std::move(basis));
  if (index < 0 || index >= v.basis_->size())
    throw Error("ValidationError", "basis index " + std::to_string(index) + " out of range");
  v.coeffs_.emplace(index, Scalar(1));
  return v;
}

Scalar Vector::coeff(int i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

std::vector<int> Vector::support_degrees() const {
  std::vector<int> out;
  for (const auto& [i, c] : coeffs_) out.push_back(basis_->degree(i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Vector::set_coeff(int i, Scalar c) {
  if (i < 0 || i >= basis_->size())
    throw Error("ValidationError", "basis index " + std::to_string(i) + " out of range");
  if (c.is_zero())
    coeffs_.erase(i);
  else
    coeffs_[i] = std::move(c);
}

Vector& Vector::add_term(int i, const Scalar& c) {
  if (i < 0 || i >= basis_->size())
    throw Error("ValidationError", "basis index " + std::to_string(i) + " out of range");
  auto it = coeffs_.find(i);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_.emplace(i, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
  return *this;
}

Vector& Vector::add_scaled(const Vector& other, const Scalar& c) {
  require_same_basis(*this, other);
  if (c.is_zero()) return *this;
  for (const auto& [i, x] : other.coeffs_) add_term(i, c * x);
  return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [i, x] : coeffs_) x *= c;
  return *this;
}

bool operator==(const Vector& a, const Vector& b) {
  return a.basis_->same_as(*b.basis_) && a.coeffs_ == b.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  if (v.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [i, c] : v.coeffs_) {
    if (!first) os << " + ";
    os << c.str() << "*" << v.basis_->label(i);
    first = false;
  }
  return os;
}

void require_same_basis(const Vector& a, const Vector& b) {
  if (a.basis() == b.basis()) return;
  if (!a.basis()->same_as(*b.basis()))
    throw Error("BasisMismatch", "vectors live over different bases");
}

Vector project_component(const Vector& v, int degree) {
  Vector out(v.basis());
  for (const auto& [i, c] : v.coeffs())
    if (v.basis()->degree(i) == degree) out.set_coeff(i, c);
  return out;
}

}  // namespace gradekit
