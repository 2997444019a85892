#pragma once

#include <optional>
#include <vector>

#include "gradekit/basis.hpp"

namespace gradekit {

/// Outcome of a span-membership query. When `in` holds, `coefficients` gives
/// the (unique, deterministic) expression of the query over the generators in
/// insertion order; otherwise `witness` is the first coordinate that survives
/// elimination.
struct Membership {
  bool in = false;
  std::vector<Scalar> coefficients;
  int witness = -1;
};

/// Incremental exact Gaussian elimination over a fixed ambient basis.
///
/// Rows are kept in reduced row-echelon form: pivots strictly increasing,
/// pivot coefficient 1, pivot column eliminated from every other row. Pivot
/// selection is the smallest basis index with a nonzero entry, which makes
/// all certificates deterministic. Each row also carries its expression over
/// the generators inserted so far, so membership certificates come for free.
class SpanSolver {
public:
  explicit SpanSolver(BasisPtr ambient) : ambient_(std::move(ambient)) {}

  /// Inserts a generator; returns true when it enlarges the span.
  bool insert(const Vector& v);

  Membership membership(const Vector& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int generators_inserted() const { return inserted_; }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const BasisPtr& ambient() const { return ambient_; }

private:
  BasisPtr ambient_;
  std::vector<Vector> rows_;                 // RREF rows, pivot order
  std::vector<int> pivots_;
  std::vector<std::map<int, Scalar>> exprs_; // rows_[k] = sum exprs_[k][t] * generator_t
  int inserted_ = 0;
};

/// A subspace stored as reduced row-echelon rows over its ambient basis.
struct SubspaceBasis {
  BasisPtr ambient;
  std::vector<Vector> rows;

  int dimension() const { return static_cast<int>(rows.size()); }
};

/// Row reduction of a generator list to a SubspaceBasis. Idempotent: reducing
/// the rows of the result returns the same rows.
SubspaceBasis row_reduce(BasisPtr ambient, const std::vector<Vector>& generators);

/// Decides membership of `query` in the span of `generators`, with certificate.
/// Throws BasisMismatch when vectors disagree on their basis.
Membership span_membership(const std::vector<Vector>& generators, const Vector& query);

/// Exact dense solve of sum_k x_k * columns[k] = rhs. Returns the coefficient
/// vector when the system is feasible.
std::optional<std::vector<Scalar>> solve_linear_system(
    const std::vector<std::vector<Scalar>>& columns, const std::vector<Scalar>& rhs);

/// Basis of the right nullspace of the matrix with the given rows over
/// `unknowns` variables, in a deterministic (free-column) order.
std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows,
                                           int unknowns);

}  // namespace gradekit
