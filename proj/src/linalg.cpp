#include "gradekit/linalg.hpp"

#include <algorithm>

#include "gradekit/error.hpp"

namespace gradekit {

namespace {

void add_scaled_expr(std::map<int, Scalar>& target, const std::map<int, Scalar>& src,
                     const Scalar& c) {
  for (const auto& [t, x] : src) {
    auto it = target.find(t);
    if (it == target.end()) {
      Scalar v = c * x;
      if (!v.is_zero()) target.emplace(t, std::move(v));
    } else {
      it->second += c * x;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

}  // namespace

bool SpanSolver::insert(const Vector& v) {
  if (!v.basis()->same_as(*ambient_))
    throw Error("BasisMismatch", "generator does not live over the ambient basis");

  const int generator_index = inserted_++;
  Vector residual = v;
  std::map<int, Scalar> expr;
  expr.emplace(generator_index, Scalar(1));

  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = residual.coeff(pivots_[k]);
    if (c.is_zero()) continue;
    residual.add_scaled(rows_[k], -c);
    add_scaled_expr(expr, exprs_[k], -c);
  }
  if (residual.is_zero()) return false;

  const int pivot = residual.leading_index();
  const Scalar lead = residual.coeff(pivot);
  residual *= Scalar(1) / lead;
  for (auto& [t, x] : expr) x /= lead;

  // Back-eliminate the new pivot from existing rows to stay in RREF.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = rows_[k].coeff(pivot);
    if (c.is_zero()) continue;
    rows_[k].add_scaled(residual, -c);
    add_scaled_expr(exprs_[k], expr, -c);
  }

  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(residual));
  exprs_.insert(exprs_.begin() + pos, std::move(expr));
  pivots_.insert(pivots_.begin() + pos, pivot);
  return true;
}

Membership SpanSolver::membership(const Vector& v) const {
  if (!v.basis()->same_as(*ambient_))
    throw Error("BasisMismatch", "query does not live over the ambient basis");

  Vector residual = v;
  std::map<int, Scalar> combo;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = residual.coeff(pivots_[k]);
    if (c.is_zero()) continue;
    residual.add_scaled(rows_[k], -c);
    add_scaled_expr(combo, exprs_[k], c);
  }

  Membership m;
  if (residual.is_zero()) {
    m.in = true;
    m.coefficients.assign(inserted_, Scalar(0));
    for (const auto& [t, x] : combo) m.coefficients[t] = x;
  } else {
    m.in = false;
    m.witness = residual.leading_index();
  }
  return m;
}

SubspaceBasis row_reduce(BasisPtr ambient, const std::vector<Vector>& generators) {
  SpanSolver solver(std::move(ambient));
  for (const auto& g : generators) solver.insert(g);
  return SubspaceBasis{solver.ambient(), solver.rows()};
}

Membership span_membership(const std::vector<Vector>& generators, const Vector& query) {
  SpanSolver solver(query.basis());
  for (const auto& g : generators) solver.insert(g);
  return solver.membership(query);
}

std::optional<std::vector<Scalar>> solve_linear_system(
    const std::vector<std::vector<Scalar>>& columns, const std::vector<Scalar>& rhs) {
  const int vars = static_cast<int>(columns.size());
  const int dim = static_cast<int>(rhs.size());
  for (const auto& col : columns)
    if (static_cast<int>(col.size()) != dim)
      throw Error("ValidationError", "column length mismatch in linear solve");

  // Augmented rows [A | rhs], eliminated left to right.
  std::vector<std::vector<Scalar>> rows(dim, std::vector<Scalar>(vars + 1, Scalar(0)));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < vars; ++c) rows[r][c] = columns[c][r];
    rows[r][vars] = rhs[r];
  }

  std::vector<int> pivot_col;
  int lead = 0;
  for (int col = 0; col < vars && lead < dim; ++col) {
    int sel = -1;
    for (int r = lead; r < dim; ++r)
      if (!rows[r][col].is_zero()) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(rows[lead], rows[sel]);
    const Scalar inv = Scalar(1) / rows[lead][col];
    for (auto& x : rows[lead]) x *= inv;
    for (int r = 0; r < dim; ++r) {
      if (r == lead || rows[r][col].is_zero()) continue;
      const Scalar f = rows[r][col];
      for (int c = col; c <= vars; ++c) rows[r][c] -= f * rows[lead][c];
    }
    pivot_col.push_back(col);
    ++lead;
  }
  // Inconsistent when a zero row has nonzero rhs.
  for (int r = lead; r < dim; ++r)
    if (!rows[r][vars].is_zero()) return std::nullopt;

  std::vector<Scalar> solution(vars, Scalar(0));
  for (int k = 0; k < static_cast<int>(pivot_col.size()); ++k)
    solution[pivot_col[k]] = rows[k][vars];
  return solution;
}

std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows,
                                           int unknowns) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != unknowns)
      throw Error("ValidationError", "row length mismatch in nullspace");

  const int m = static_cast<int>(rows.size());
  std::vector<int> pivot_of_col(unknowns, -1);
  int lead = 0;
  for (int col = 0; col < unknowns && lead < m; ++col) {
    int sel = -1;
    for (int r = lead; r < m; ++r)
      if (!rows[r][col].is_zero()) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(rows[lead], rows[sel]);
    const Scalar inv = Scalar(1) / rows[lead][col];
    for (auto& x : rows[lead]) x *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == lead || rows[r][col].is_zero()) continue;
      const Scalar f = rows[r][col];
      for (int c = col; c < unknowns; ++c) rows[r][c] -= f * rows[lead][c];
    }
    pivot_of_col[col] = lead;
    ++lead;
  }

  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < unknowns; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Scalar> v(unknowns, Scalar(0));
    v[free] = Scalar(1);
    for (int col = 0; col < unknowns; ++col) {
      const int p = pivot_of_col[col];
      if (p >= 0) v[col] = -rows[p][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gradekit
