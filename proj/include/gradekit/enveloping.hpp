#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradekit/lie.hpp"
#include "gradekit/linalg.hpp"
#include "gradekit/tensor.hpp"

namespace gradekit {

/// Total order on the basis generators used for straightening. The default is
/// degree-major: primary key the degree's element index, secondary key the
/// basis index, which makes homogeneity patterns visible in reports.
struct BasisOrder {
  std::vector<int> rank;     // basis index -> position
  std::vector<int> by_rank;  // position -> basis index

  static BasisOrder degree_major(const GradedBasis& basis);
  static BasisOrder by_index(int size);
};

/// Length-then-lexicographic comparison on letter sequences.
struct WordLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// An element of the truncated enveloping algebra: a combination of normal
/// (non-decreasing) monomials. No zero coefficients are stored.
class UElement {
public:
  using Terms = std::map<std::vector<int>, Scalar, WordLess>;

  const Terms& terms() const { return terms_; }
  Scalar coeff(const std::vector<int>& monomial) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& monomial, const Scalar& c);
  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  UElement& operator*=(const Scalar& c);

  friend bool operator==(const UElement& a, const UElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const UElement& a, const UElement& b) { return !(a == b); }

private:
  Terms terms_;
};

enum class RewriteStrategy { leftmost_inversion, rightmost_inversion };

struct IdealGradedWitness {
  Vector row;        // spanning vector that fails
  int degree;        // offending degree
  Vector component;  // its projection onto that degree
};

struct IdealGradedReport {
  bool graded = true;
  std::vector<IdealGradedWitness> witnesses;
};

struct PbwReport {
  int pbw_count = 0;
  long long expected_count = 0;  // sum over k <= depth of C(rank+k-1, k)
  bool counts_match = false;
  bool independent = false;
  bool spanning = false;
  bool ideal_graded = false;
  std::vector<std::vector<int>> dependence_witnesses;  // monomials hit by the ideal
  std::vector<int> spanning_witnesses;                 // word indices that fail
  std::vector<IdealGradedWitness> grading_witnesses;
  std::string order_note;
};

struct UniversalPropertyReport {
  bool factorizes = true;         // k . i = j on every generator
  bool annihilates_ideal = true;  // k vanishes on every spanning vector
  std::optional<bool> graded_on_monomials;  // checked when the ideal is graded
  std::vector<std::string> witnesses;

  bool ok() const {
    return factorizes && annihilates_ideal && graded_on_monomials.value_or(true);
  }
};

/// The enveloping algebra of a validated graded Lie algebra, truncated at a
/// fixed word length. Bundles the word enumeration, the truncated ideal
/// generated by the straightening relations, and the derived checks.
///
/// The ideal truncation is the span of all embeddings w1 (x) gen (x) w2 of the
/// relation  [a,b] - a(x)b + b(x)a  over homogeneous generator pairs, with
/// total length within the truncation, kept as row-reduced rows in word
/// coordinates.
class EnvelopingTruncation {
public:
  EnvelopingTruncation(LiePtr lie, int depth, BasisOrder order);
  EnvelopingTruncation(LiePtr lie, int depth)
      : EnvelopingTruncation(lie, depth, BasisOrder::degree_major(lie->basis())) {}

  const GradedLieAlgebra& lie() const { return *lie_; }
  int depth() const { return words_.depth(); }
  const BasisOrder& order() const { return order_; }
  const TruncatedTensorAlgebra& words() const { return words_; }

  /// Rewrites a word into normal form: an out-of-order adjacent pair
  /// b_j (x) b_i becomes b_i (x) b_j + [b_j, b_i]. Each step either removes an
  /// inversion or shortens a word, so the rewriting terminates; the strategy
  /// picks which inversion of the greatest unresolved word fires first.
  UElement straighten(const TensorWord& w,
                      RewriteStrategy strategy = RewriteStrategy::leftmost_inversion) const;
  UElement straighten(const Vector& word_combination,
                      RewriteStrategy strategy = RewriteStrategy::leftmost_inversion) const;

  /// Concatenation followed by straightening; the empty monomial is the unit.
  UElement multiply(const UElement& x, const UElement& y) const;

  Vector word_vector(const UElement& u) const;

  /// Raw spanning vectors w1 (x) gen (x) w2 of the truncated ideal.
  const std::vector<Vector>& ideal_spanning() const { return raw_rows_; }
  /// The same span in reduced row-echelon form.
  const SubspaceBasis& ideal() const { return ideal_; }
  Membership ideal_membership(const Vector& v) const { return solver_.membership(v); }

  /// All normal monomials within depth, in length-then-order-lex order.
  const std::vector<std::vector<int>>& normal_monomials() const { return monomials_; }

  IdealGradedReport check_ideal_graded() const;
  PbwReport pbw_verify() const;
  UniversalPropertyReport check_universal_property(const GradedLieHom& j,
                                                   const AlgebraPtr& target) const;

private:
  LiePtr lie_;
  BasisOrder order_;
  TruncatedTensorAlgebra words_;
  std::vector<Vector> raw_rows_;
  SpanSolver solver_;
  SubspaceBasis ideal_;
  std::vector<std::vector<int>> monomials_;
};

}  // namespace gradekit
