#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gradekit/basis.hpp"

namespace gradekit {

/// A word over the basis generators; the empty word is the scalar component.
struct TensorWord {
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  friend bool operator==(const TensorWord& a, const TensorWord& b) {
    return a.letters == b.letters;
  }
};

/// Ordered product of the letter degrees; the empty word has degree e.
int word_degree(const GradedBasis& base, const TensorWord& w);

/// All tensor words over a graded basis up to a fixed length, enumerated in
/// length-then-lexicographic order and densely indexed. The enumeration
/// doubles as a GradedBasis (degrees = word degrees), so sparse Vectors and
/// the row-reduction machinery work unchanged in word coordinates.
class TruncatedTensorAlgebra {
public:
  TruncatedTensorAlgebra(BasisPtr base, int depth);

  int depth() const { return depth_; }
  int rank() const { return base_->size(); }
  int word_count() const { return static_cast<int>(offsets_.back()); }

  const BasisPtr& base() const { return base_; }
  const BasisPtr& word_basis() const { return word_basis_; }

  TensorWord word(int index) const;
  int index_of(const TensorWord& w) const;  // DepthExceeded beyond the truncation
  int degree_of(int index) const { return word_basis_->degree(index); }

  /// Index of the first word of the given length.
  int first_index_of_length(int length) const { return static_cast<int>(offsets_[length]); }
  /// Number of words of the given length.
  int count_of_length(int length) const {
    return static_cast<int>(offsets_[length + 1] - offsets_[length]);
  }

  /// Unit vector of a word in word coordinates.
  Vector monomial(const TensorWord& w) const;

  /// Bilinear extension of concatenation. Throws DepthExceeded when a product
  /// of support words leaves the truncation.
  Vector multiply(const Vector& x, const Vector& y) const;

private:
  BasisPtr base_;
  int depth_;
  std::vector<long long> offsets_;  // offsets_[k] = number of words shorter than k
  BasisPtr word_basis_;
};

}  // namespace gradekit
