#include "gradekit/tensor.hpp"

#include "gradekit/error.hpp"

namespace gradekit {

namespace {

constexpr long long kMaxWordCount = 2'000'000;

}

int word_degree(const GradedBasis& base, const TensorWord& w) {
  int deg = base.group->identity;
  for (int letter : w.letters) {
    if (letter < 0 || letter >= base.size())
      throw Error("ValidationError", "word letter out of range");
    deg = base.group->mul(deg, base.degree(letter));
  }
  return deg;
}

TruncatedTensorAlgebra::TruncatedTensorAlgebra(BasisPtr base, int depth)
    : base_(std::move(base)), depth_(depth) {
  if (depth_ < 0) throw Error("ValidationError", "negative truncation depth");
  const long long r = base_->size();
  offsets_.assign(1, 0);
  long long layer = 1;
  for (int k = 0; k <= depth_; ++k) {
    offsets_.push_back(offsets_.back() + layer);
    if (offsets_.back() > kMaxWordCount)
      throw Error("ValidationError", "truncation too large to enumerate");
    layer *= r;
  }

  std::vector<int> degrees;
  std::vector<std::string> labels;
  degrees.reserve(word_count());
  for (int w = 0; w < word_count(); ++w) {
    const TensorWord tw = word(w);
    degrees.push_back(word_degree(*base_, tw));
    if (tw.letters.empty()) {
      labels.push_back("1");
    } else {
      std::string label;
      for (int letter : tw.letters) {
        if (!label.empty()) label += "*";
        label += base_->label(letter);
      }
      labels.push_back(std::move(label));
    }
  }
  word_basis_ = make_basis(base_->group, std::move(degrees), std::move(labels));
}

TensorWord TruncatedTensorAlgebra::word(int index) const {
  if (index < 0 || index >= word_count())
    throw Error("ValidationError", "word index out of range");
  int length = 0;
  while (offsets_[length + 1] <= index) ++length;
  long long rest = index - offsets_[length];
  TensorWord w;
  w.letters.assign(length, 0);
  const long long r = base_->size();
  for (int pos = length - 1; pos >= 0; --pos) {
    w.letters[pos] = static_cast<int>(rest % r);
    rest /= r;
  }
  return w;
}

int TruncatedTensorAlgebra::index_of(const TensorWord& w) const {
  if (w.length() > depth_)
    throw Error("DepthExceeded", "word of length " + std::to_string(w.length()) +
                                     " exceeds truncation depth " + std::to_string(depth_));
  long long at = 0;
  const long long r = base_->size();
  for (int letter : w.letters) {
    if (letter < 0 || letter >= base_->size())
      throw Error("ValidationError", "word letter out of range");
    at = at * r + letter;
  }
  return static_cast<int>(offsets_[w.length()] + at);
}

Vector TruncatedTensorAlgebra::monomial(const TensorWord& w) const {
  return Vector::unit(word_basis_, index_of(w));
}

Vector TruncatedTensorAlgebra::multiply(const Vector& x, const Vector& y) const {
  if (!x.basis()->same_as(*word_basis_) || !y.basis()->same_as(*word_basis_))
    throw Error("BasisMismatch", "operands do not live in word coordinates");
  Vector out(word_basis_);
  for (const auto& [i, a] : x.coeffs()) {
    const TensorWord wi = word(i);
    for (const auto& [j, b] : y.coeffs()) {
      TensorWord concat = wi;
      const TensorWord wj = word(j);
      concat.letters.insert(concat.letters.end(), wj.letters.begin(), wj.letters.end());
      out.add_term(index_of(concat), a * b);
    }
  }
  return out;
}

}  // namespace gradekit
