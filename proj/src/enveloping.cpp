#include "gradekit/enveloping.hpp"

#include <algorithm>
#include <numeric>

#include "gradekit/error.hpp"

namespace gradekit {

BasisOrder BasisOrder::degree_major(const GradedBasis& basis) {
  BasisOrder order;
  order.by_rank.resize(basis.size());
  std::iota(order.by_rank.begin(), order.by_rank.end(), 0);
  std::sort(order.by_rank.begin(), order.by_rank.end(), [&](int a, int b) {
    if (basis.degree(a) != basis.degree(b)) return basis.degree(a) < basis.degree(b);
    return a < b;
  });
  order.rank.resize(basis.size());
  for (int pos = 0; pos < basis.size(); ++pos) order.rank[order.by_rank[pos]] = pos;
  return order;
}

BasisOrder BasisOrder::by_index(int size) {
  BasisOrder order;
  order.rank.resize(size);
  order.by_rank.resize(size);
  std::iota(order.rank.begin(), order.rank.end(), 0);
  std::iota(order.by_rank.begin(), order.by_rank.end(), 0);
  return order;
}

Scalar UElement::coeff(const std::vector<int>& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void UElement::add_term(const std::vector<int>& monomial, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(monomial);
  if (it == terms_.end()) {
    terms_.emplace(monomial, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UElement& UElement::operator+=(const UElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UElement& UElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

namespace {

int find_inversion(const std::vector<int>& word, const BasisOrder& order,
                   RewriteStrategy strategy) {
  int found = -1;
  for (int k = 0; k + 1 < static_cast<int>(word.size()); ++k) {
    if (order.rank[word[k]] > order.rank[word[k + 1]]) {
      if (strategy == RewriteStrategy::leftmost_inversion) return k;
      found = k;
    }
  }
  return found;
}

long long binomial(long long n, long long k) {
  if (k == 0) return 1;
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

EnvelopingTruncation::EnvelopingTruncation(LiePtr lie, int depth, BasisOrder order)
    : lie_(std::move(lie)),
      order_(std::move(order)),
      words_(lie_->basis_ptr(), depth),
      solver_(words_.word_basis()) {
  if (!lie_->validate().valid())
    throw Error("NotValidated", "enveloping construction requires a valid graded Lie algebra");
  if (static_cast<int>(order_.rank.size()) != lie_->dim())
    throw Error("ValidationError", "basis order size mismatch");

  // Ideal spanning set: w1 (x) ([b_i,b_j] - b_i(x)b_j + b_j(x)b_i) (x) w2
  // over unordered generator pairs; the reversed pair gives the negative.
  const int n = lie_->dim();
  for (int l1 = 0; l1 + 2 <= depth; ++l1)
    for (int l2 = 0; l1 + l2 + 2 <= depth; ++l2)
      for (int a = 0; a < words_.count_of_length(l1); ++a)
        for (int b = 0; b < words_.count_of_length(l2); ++b) {
          const TensorWord w1 = words_.word(words_.first_index_of_length(l1) + a);
          const TensorWord w2 = words_.word(words_.first_index_of_length(l2) + b);
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
              Vector row(words_.word_basis());
              auto embed = [&](const std::vector<int>& core, const Scalar& c) {
                TensorWord full = w1;
                full.letters.insert(full.letters.end(), core.begin(), core.end());
                full.letters.insert(full.letters.end(), w2.letters.begin(),
                                    w2.letters.end());
                row.add_term(words_.index_of(full), c);
              };
              for (const auto& [m, c] : lie_->bracket(i, j).coeffs()) embed({m}, c);
              embed({i, j}, -1);
              embed({j, i}, 1);
              if (!row.is_zero()) raw_rows_.push_back(std::move(row));
            }
        }
  for (const auto& row : raw_rows_) solver_.insert(row);
  ideal_ = SubspaceBasis{words_.word_basis(), solver_.rows()};

  // Normal monomials: non-decreasing in the chosen order, enumerated by
  // length then lexicographically in ranks.
  std::vector<int> current;
  auto emit = [&](auto&& self, int min_rank, int remaining) -> void {
    if (remaining == 0) {
      std::vector<int> monomial;
      monomial.reserve(current.size());
      for (int r : current) monomial.push_back(order_.by_rank[r]);
      monomials_.push_back(std::move(monomial));
      return;
    }
    for (int r = min_rank; r < n; ++r) {
      current.push_back(r);
      self(self, r, remaining - 1);
      current.pop_back();
    }
  };
  for (int len = 0; len <= depth; ++len) emit(emit, 0, len);
}

UElement EnvelopingTruncation::straighten(const TensorWord& w,
                                          RewriteStrategy strategy) const {
  Vector v(words_.word_basis());
  v.set_coeff(words_.index_of(w), 1);
  return straighten(v, strategy);
}

UElement EnvelopingTruncation::straighten(const Vector& word_combination,
                                          RewriteStrategy strategy) const {
  if (!word_combination.basis()->same_as(*words_.word_basis()))
    throw Error("BasisMismatch", "input is not in word coordinates");

  std::map<std::vector<int>, Scalar, WordLess> work;
  for (const auto& [index, c] : word_combination.coeffs())
    work.emplace(words_.word(index).letters, c);

  UElement result;
  while (!work.empty()) {
    // Greatest unresolved word first; resolved words retire into the result.
    auto it = std::prev(work.end());
    const std::vector<int> word = it->first;
    const Scalar c = it->second;
    work.erase(it);

    const int k = find_inversion(word, order_, strategy);
    if (k < 0) {
      result.add_term(word, c);
      continue;
    }

    std::vector<int> swapped = word;
    std::swap(swapped[k], swapped[k + 1]);
    auto bump = [&work](const std::vector<int>& w, const Scalar& x) {
      auto at = work.find(w);
      if (at == work.end()) {
        if (!x.is_zero()) work.emplace(w, x);
      } else {
        at->second += x;
        if (at->second.is_zero()) work.erase(at);
      }
    };
    bump(swapped, c);
    for (const auto& [m, cb] : lie_->bracket(word[k], word[k + 1]).coeffs()) {
      std::vector<int> shorter(word.begin(), word.begin() + k);
      shorter.push_back(m);
      shorter.insert(shorter.end(), word.begin() + k + 2, word.end());
      bump(shorter, c * cb);
    }
  }
  return result;
}

UElement EnvelopingTruncation::multiply(const UElement& x, const UElement& y) const {
  UElement out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      if (static_cast<int>(mx.size() + my.size()) > depth())
        throw Error("DepthExceeded", "product leaves the truncation");
      std::vector<int> concat = mx;
      concat.insert(concat.end(), my.begin(), my.end());
      UElement straightened = straighten(TensorWord{std::move(concat)});
      straightened *= cx * cy;
      out += straightened;
    }
  return out;
}

Vector EnvelopingTruncation::word_vector(const UElement& u) const {
  Vector out(words_.word_basis());
  for (const auto& [m, c] : u.terms()) out.set_coeff(words_.index_of(TensorWord{m}), c);
  return out;
}

IdealGradedReport EnvelopingTruncation::check_ideal_graded() const {
  IdealGradedReport report;
  for (const auto& row : ideal_.rows) {
    for (int degree : row.support_degrees()) {
      const Vector component = project_component(row, degree);
      if (!solver_.membership(component).in) {
        report.graded = false;
        report.witnesses.push_back({row, degree, component});
      }
    }
  }
  return report;
}

PbwReport EnvelopingTruncation::pbw_verify() const {
  PbwReport report;
  report.pbw_count = static_cast<int>(monomials_.size());
  const int r = lie_->dim();
  for (int k = 0; k <= depth(); ++k) report.expected_count += binomial(r + k - 1, k);
  report.counts_match = report.pbw_count == report.expected_count;

  // Independence modulo the ideal: each normal monomial must add rank on top
  // of the ideal rows. Certified by rank computation, not by counting.
  SpanSolver quotient_probe = solver_;
  report.independent = true;
  for (const auto& m : monomials_) {
    Vector unit(words_.word_basis());
    unit.set_coeff(words_.index_of(TensorWord{m}), 1);
    if (!quotient_probe.insert(unit)) {
      report.independent = false;
      report.dependence_witnesses.push_back(m);
    }
  }

  // Spanning: every word is congruent to its normal form modulo the ideal.
  report.spanning = true;
  for (int w = 0; w < words_.word_count(); ++w) {
    Vector diff = Vector::unit(words_.word_basis(), w);
    diff -= word_vector(straighten(words_.word(w)));
    if (!diff.is_zero() && !solver_.membership(diff).in) {
      report.spanning = false;
      report.spanning_witnesses.push_back(w);
    }
  }

  const IdealGradedReport graded = check_ideal_graded();
  report.ideal_graded = graded.graded;
  report.grading_witnesses = graded.witnesses;
  report.order_note =
      "normal monomials use non-strict (repeats allowed) ordering of generators";
  return report;
}

UniversalPropertyReport EnvelopingTruncation::check_universal_property(
    const GradedLieHom& j, const AlgebraPtr& target) const {
  if (!j.source->basis().same_as(lie_->basis()))
    throw Error("InvalidLieHom", "hom source is not this Lie algebra");
  if (!j.target->basis().same_as(target->basis()))
    throw Error("InvalidLieHom", "hom target does not match the given algebra");

  const GradedLieAlgebra target_lie = commutator_lie(*target);
  GradedLieHom into_commutator;
  into_commutator.source = lie_;
  into_commutator.target = std::make_shared<GradedLieAlgebra>(target_lie);
  into_commutator.images = j.images;
  if (!validate_lie_hom(into_commutator).valid())
    throw Error("InvalidLieHom", "hom is not a graded Lie map into the commutator algebra");

  target->validate();
  const auto& unit = target->find_unit();
  if (!unit) throw Error("NotUnital", "target algebra has no unit");

  // k on a word multiplies the images of its letters in order.
  auto evaluate_word = [&](const std::vector<int>& letters) {
    Vector acc = *unit;
    for (int letter : letters) acc = target->multiply(acc, j.images[letter]);
    return acc;
  };
  auto evaluate_vector = [&](const Vector& word_combination) {
    Vector acc(target->basis_ptr());
    for (const auto& [w, c] : word_combination.coeffs())
      acc.add_scaled(evaluate_word(words_.word(w).letters), c);
    return acc;
  };

  UniversalPropertyReport report;
  for (int b = 0; b < lie_->dim(); ++b) {
    const Vector via_quotient = evaluate_vector(word_vector(straighten(TensorWord{{b}})));
    if (!(via_quotient == j.images[b])) {
      report.factorizes = false;
      report.witnesses.push_back("factorization fails on generator " +
                                 lie_->basis().label(b));
    }
  }

  for (std::size_t t = 0; t < raw_rows_.size(); ++t)
    if (!evaluate_vector(raw_rows_[t]).is_zero()) {
      report.annihilates_ideal = false;
      report.witnesses.push_back("spanning vector " + std::to_string(t) +
                                 " is not annihilated");
    }

  if (check_ideal_graded().graded) {
    bool graded_ok = true;
    for (const auto& m : monomials_) {
      const int degree = word_degree(lie_->basis(), TensorWord{m});
      const Vector image = evaluate_word(m);
      for (int d : image.support_degrees())
        if (d != degree) {
          graded_ok = false;
          report.witnesses.push_back("image of a normal monomial is not homogeneous");
          break;
        }
    }
    report.graded_on_monomials = graded_ok;
  }
  return report;
}

}  // namespace gradekit
