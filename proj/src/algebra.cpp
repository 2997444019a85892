#include "gradekit/algebra.hpp"

#include <algorithm>
#include <set>

#include "gradekit/error.hpp"

namespace gradekit {

std::string to_string(GradingMode m) {
  return m == GradingMode::classical ? "classical" : "noncommutative";
}

GradedAlgebra::GradedAlgebra(BasisPtr basis, ConstantsMap constants, std::string name)
    : basis_(std::move(basis)), zero_(Vector(basis_)), name_(std::move(name)) {
  const int n = basis_->size();
  for (auto& [key, value] : constants) {
    if (key.first < 0 || key.first >= n || key.second < 0 || key.second >= n)
      throw Error("ValidationError",
                  "product pair (" + std::to_string(key.first) + ", " +
                      std::to_string(key.second) + ") is out of range");
    if (!value.basis()->same_as(*basis_))
      throw Error("BasisMismatch", "structure constant vector over a foreign basis");
    if (!value.is_zero()) constants_.emplace(key, std::move(value));
  }
}

const Vector& GradedAlgebra::product(int i, int j) const {
  auto it = constants_.find({i, j});
  return it == constants_.end() ? zero_ : it->second;
}

Vector GradedAlgebra::multiply(const Vector& x, const Vector& y) const {
  if (!x.basis()->same_as(*basis_) || !y.basis()->same_as(*basis_))
    throw Error("BasisMismatch", "operands do not live over the algebra basis");
  Vector out(basis_);
  for (const auto& [i, a] : x.coeffs())
    for (const auto& [j, b] : y.coeffs()) out.add_scaled(product(i, j), a * b);
  return out;
}

const AssociativityReport& GradedAlgebra::validate() const {
  if (associativity_) return *associativity_;
  AssociativityReport report;
  const int n = dim();
  for (int a = 0; a < n; ++a) {
    const Vector ua = Vector::unit(basis_, a);
    for (int b = 0; b < n; ++b) {
      const Vector& ab = product(a, b);
      for (int c = 0; c < n; ++c) {
        const Vector lhs = multiply(ab, Vector::unit(basis_, c));
        const Vector rhs = multiply(ua, product(b, c));
        if (!(lhs == rhs)) {
          report.holds = false;
          report.witnesses.push_back({a, b, c});
        }
      }
    }
  }
  associativity_ = std::move(report);
  return *associativity_;
}

std::vector<int> GradedAlgebra::fiber(int degree) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (basis_->degree(i) == degree) out.push_back(i);
  return out;
}

std::vector<Vector> GradedAlgebra::fiber_generators(const std::vector<int>& degrees) const {
  std::vector<Vector> gens;
  for (int i = 0; i < dim(); ++i)
    if (std::find(degrees.begin(), degrees.end(), basis_->degree(i)) != degrees.end())
      gens.push_back(Vector::unit(basis_, i));
  return gens;
}

const GradingReport& GradedAlgebra::grading(GradingMode mode) const {
  auto& slot = mode == GradingMode::classical ? classical_ : noncommutative_;
  if (slot) return *slot;

  GradingReport report;
  report.mode = mode;
  const GroupTable& grp = *basis_->group;
  for (const auto& [key, value] : constants_) {
    const int g = basis_->degree(key.first);
    const int h = basis_->degree(key.second);
    const int gh = grp.mul(g, h);
    const int hg = grp.mul(h, g);
    std::vector<int> targets{gh};
    if (mode == GradingMode::noncommutative && hg != gh) targets.push_back(hg);
    const Membership m = span_membership(fiber_generators(targets), value);
    if (!m.in) {
      report.holds = false;
      report.witnesses.push_back({g, h, key.first, key.second, value});
    }
  }
  slot = std::move(report);
  return *slot;
}

AlgebraFlags GradedAlgebra::flags() const {
  AlgebraFlags f;
  if (associativity_) f.associative = associativity_->holds;
  if (classical_) f.classically_graded = classical_->holds;
  if (noncommutative_) f.nc_graded = noncommutative_->holds;
  // Membership in the small fiber implies membership in the enlarged one.
  if (!f.nc_graded.has_value() && f.classically_graded.value_or(false))
    f.nc_graded = true;
  if (unit_) f.unital = unit_->has_value();
  return f;
}

const std::optional<Vector>& GradedAlgebra::find_unit() const {
  if (unit_) return *unit_;
  if (!associativity_)
    throw Error("NotValidated", "run validate() before searching for a unit");

  // Unknowns: coefficients of u over the basis. Equations: u*b_i = b_i and
  // b_i*u = b_i for every i, flattened to scalar rows.
  const int n = dim();
  std::vector<std::vector<Scalar>> columns(n, std::vector<Scalar>(2 * n * n, Scalar(0)));
  std::vector<Scalar> rhs(2 * n * n, Scalar(0));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (const auto& [row, c] : product(k, i).coeffs())
        columns[k][i * n + row] = c;
      for (const auto& [row, c] : product(i, k).coeffs())
        columns[k][n * n + i * n + row] = c;
    }
  }
  for (int i = 0; i < n; ++i) {
    rhs[i * n + i] = 1;
    rhs[n * n + i * n + i] = 1;
  }

  auto solution = solve_linear_system(columns, rhs);
  if (!solution) {
    unit_ = std::optional<Vector>{};
  } else {
    Vector u(basis_);
    for (int k = 0; k < n; ++k) u.set_coeff(k, (*solution)[k]);
    unit_ = std::optional<Vector>{std::move(u)};
  }
  return *unit_;
}

namespace {

std::optional<Vector> solve_inverse(const GradedAlgebra& a, const Vector& element,
                                    Side side, const std::vector<int>& candidate_indices) {
  const auto& unit = a.find_unit();
  if (!unit) throw Error("NotUnital", "algebra has no unit");

  const int n = a.dim();
  std::vector<std::vector<Scalar>> columns;
  columns.reserve(candidate_indices.size());
  for (int k : candidate_indices) {
    const Vector bk = Vector::unit(a.basis_ptr(), k);
    const Vector prod = side == Side::right ? a.multiply(element, bk) : a.multiply(bk, element);
    std::vector<Scalar> col(n, Scalar(0));
    for (const auto& [row, c] : prod.coeffs()) col[row] = c;
    columns.push_back(std::move(col));
  }
  std::vector<Scalar> rhs(n, Scalar(0));
  for (const auto& [row, c] : unit->coeffs()) rhs[row] = c;

  auto solution = solve_linear_system(columns, rhs);
  if (!solution) return std::nullopt;
  Vector x(a.basis_ptr());
  for (std::size_t t = 0; t < candidate_indices.size(); ++t)
    x.set_coeff(candidate_indices[t], (*solution)[t]);
  return x;
}

int homogeneous_degree(const Vector& element) {
  const auto degrees = element.support_degrees();
  if (degrees.size() != 1)
    throw Error("NotHomogeneous", "element must be nonzero and supported in a single degree");
  return degrees.front();
}

}  // namespace

std::optional<Vector> homogeneous_inverse(const GradedAlgebra& a, const Vector& element,
                                          Side side) {
  const int g = homogeneous_degree(element);
  const int gi = a.basis().group->inv(g);
  return solve_inverse(a, element, side, a.fiber(gi));
}

std::optional<Vector> unconstrained_inverse(const GradedAlgebra& a, const Vector& element,
                                            Side side) {
  homogeneous_degree(element);  // same precondition as the constrained solve
  std::vector<int> all(a.dim());
  for (int i = 0; i < a.dim(); ++i) all[i] = i;
  return solve_inverse(a, element, side, all);
}

Vector GradedAlgebraHom::apply(const Vector& x) const {
  if (!x.basis()->same_as(source->basis()))
    throw Error("BasisMismatch", "argument does not live over the hom source");
  Vector out(target->basis_ptr());
  for (const auto& [i, c] : x.coeffs()) out.add_scaled(images[i], c);
  return out;
}

HomReport validate_hom(const GradedAlgebraHom& f) {
  if (static_cast<int>(f.images.size()) != f.source->dim())
    throw Error("ValidationError", "hom image list does not match the source dimension");
  for (const auto& v : f.images)
    if (!v.basis()->same_as(f.target->basis()))
      throw Error("BasisMismatch", "hom image over a foreign basis");
  if (!(*f.source->basis().group == *f.target->basis().group))
    throw Error("BasisMismatch", "hom between algebras graded by different groups");

  HomReport report;
  const int n = f.source->dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vector lhs = f.apply(f.source->product(i, j));
      const Vector rhs = f.target->multiply(f.images[i], f.images[j]);
      if (!(lhs == rhs)) {
        report.multiplicative = false;
        report.multiplicativity_witnesses.emplace_back(i, j);
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

GradedAlgebraHom identity_algebra_hom(AlgebraPtr a) {
  GradedAlgebraHom f;
  f.source = a;
  f.target = a;
  for (int i = 0; i < a->dim(); ++i) f.images.push_back(Vector::unit(a->basis_ptr(), i));
  return f;
}

GradedAlgebraHom zero_algebra_hom(AlgebraPtr source, AlgebraPtr target) {
  GradedAlgebraHom f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.images.assign(f.source->dim(), Vector(f.target->basis_ptr()));
  return f;
}

GradedAlgebraHom compose(const GradedAlgebraHom& outer, const GradedAlgebraHom& inner) {
  if (!inner.target->basis().same_as(outer.source->basis()))
    throw Error("BasisMismatch", "hom composition target/source mismatch");
  GradedAlgebraHom f;
  f.source = inner.source;
  f.target = outer.target;
  for (const auto& v : inner.images) f.images.push_back(outer.apply(v));
  return f;
}

bool same_hom(const GradedAlgebraHom& a, const GradedAlgebraHom& b) {
  if (!a.source->basis().same_as(b.source->basis())) return false;
  if (!a.target->basis().same_as(b.target->basis())) return false;
  return a.images == b.images;
}

namespace {

bool is_identity_matrix(const GradedAlgebraHom& f) {
  for (int i = 0; i < f.source->dim(); ++i) {
    const auto& v = f.images[i];
    if (v.support_size() != 1 || !(v.coeff(i) == Scalar(1))) return false;
  }
  return true;
}

std::string relation_name(int alpha, int beta) {
  return "(" + std::to_string(alpha) + " <= " + std::to_string(beta) + ")";
}

}  // namespace

InverseLimitResult finite_inverse_limit(const InverseDiagram& diagram) {
  const int m = static_cast<int>(diagram.objects.size());
  if (m == 0) throw Error("ValidationError", "empty diagram");
  const GroupPtr group = diagram.objects[0]->basis().group;
  for (const auto& obj : diagram.objects)
    if (!(*obj->basis().group == *group))
      throw Error("BasisMismatch", "diagram objects graded by different groups");

  std::map<std::pair<int, int>, const GradedAlgebraHom*> rel;
  for (const auto& r : diagram.relations) {
    if (r.alpha < 0 || r.alpha >= m || r.beta < 0 || r.beta >= m)
      throw Error("ValidationError", "relation index out of range");
    if (!r.map.source->basis().same_as(diagram.objects[r.beta]->basis()) ||
        !r.map.target->basis().same_as(diagram.objects[r.alpha]->basis()))
      throw Error("BasisMismatch", "transition map endpoints do not match relation " +
                                       relation_name(r.alpha, r.beta));
    if (!validate_hom(r.map).valid())
      throw Error("NotInverseSystem",
                  "transition map of relation " + relation_name(r.alpha, r.beta) +
                      " is not a graded algebra hom");
    if (r.alpha == r.beta && !is_identity_matrix(r.map))
      throw Error("NotInverseSystem",
                  "identity relation " + relation_name(r.alpha, r.beta) + " is not the identity map");
    rel[{r.alpha, r.beta}] = &r.map;
  }

  // Transitivity: recorded alpha<=beta and beta<=gamma force a recorded
  // alpha<=gamma equal to the composite (identity when alpha == gamma).
  for (const auto& [ab, f_ab] : rel)
    for (const auto& [bg, f_bg] : rel) {
      if (ab.second != bg.first) continue;
      const GradedAlgebraHom composite = compose(*f_ab, *f_bg);
      if (ab.first == bg.second) {
        if (!is_identity_matrix(composite))
          throw Error("NotInverseSystem", "composite through " + relation_name(ab.first, ab.second) +
                                              " and " + relation_name(bg.first, bg.second) +
                                              " is not the identity");
        continue;
      }
      auto it = rel.find({ab.first, bg.second});
      if (it == rel.end())
        throw Error("NotInverseSystem", "missing composite relation " +
                                            relation_name(ab.first, bg.second));
      if (!same_hom(*it->second, composite))
        throw Error("NotInverseSystem", "composition law fails at " +
                                            relation_name(ab.first, bg.second));
    }

  // Ambient product: disjoint union of the object bases.
  std::vector<int> offset(m, 0);
  std::vector<int> degrees;
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    offset[a] = static_cast<int>(degrees.size());
    const auto& basis = diagram.objects[a]->basis();
    for (int i = 0; i < basis.size(); ++i) {
      degrees.push_back(basis.degree(i));
      labels.push_back("p" + std::to_string(a) + "." + basis.label(i));
    }
  }
  const int total = static_cast<int>(degrees.size());
  BasisPtr product_basis = make_basis(group, degrees, labels);

  // Solve the compatibility equations degree fiber by degree fiber.
  std::set<int> degree_set(degrees.begin(), degrees.end());
  std::vector<Vector> embeddings;
  std::vector<int> limit_degrees;
  for (int g : degree_set) {
    std::vector<int> unknowns;  // global coordinates of degree g
    std::vector<int> local_slot(total, -1);
    for (int t = 0; t < total; ++t)
      if (degrees[t] == g) {
        local_slot[t] = static_cast<int>(unknowns.size());
        unknowns.push_back(t);
      }
    if (unknowns.empty()) continue;

    std::vector<std::vector<Scalar>> equations;
    for (const auto& [key, f] : rel) {
      if (key.first == key.second) continue;
      const auto& target = *diagram.objects[key.first];
      const auto& source = *diagram.objects[key.second];
      for (int t = 0; t < target.dim(); ++t) {
        if (target.basis().degree(t) != g) continue;
        std::vector<Scalar> row(unknowns.size(), Scalar(0));
        row[local_slot[offset[key.first] + t]] = 1;
        for (int s = 0; s < source.dim(); ++s) {
          if (source.basis().degree(s) != g) continue;
          const Scalar c = f->images[s].coeff(t);
          if (!c.is_zero()) row[local_slot[offset[key.second] + s]] -= c;
        }
        equations.push_back(std::move(row));
      }
    }

    for (const auto& sol : nullspace(equations, static_cast<int>(unknowns.size()))) {
      Vector v(product_basis);
      for (std::size_t t = 0; t < unknowns.size(); ++t) v.set_coeff(unknowns[t], sol[t]);
      embeddings.push_back(std::move(v));
      limit_degrees.push_back(g);
    }
  }

  const int q = static_cast<int>(embeddings.size());
  std::vector<std::string> limit_labels;
  for (int k = 0; k < q; ++k) limit_labels.push_back("q" + std::to_string(k));
  BasisPtr limit_basis = make_basis(group, limit_degrees, limit_labels);

  // Componentwise product of embeddings, re-expressed over the limit basis.
  SpanSolver solver(product_basis);
  for (const auto& v : embeddings) solver.insert(v);
  auto componentwise = [&](const Vector& x, const Vector& y) {
    Vector out(product_basis);
    for (int a = 0; a < m; ++a) {
      const auto& obj = *diagram.objects[a];
      Vector xa(obj.basis_ptr());
      Vector ya(obj.basis_ptr());
      for (int i = 0; i < obj.dim(); ++i) {
        xa.set_coeff(i, x.coeff(offset[a] + i));
        ya.set_coeff(i, y.coeff(offset[a] + i));
      }
      const Vector prod_a = obj.multiply(xa, ya);
      for (const auto& [i, c] : prod_a.coeffs()) out.set_coeff(offset[a] + i, c);
    }
    return out;
  };

  GradedAlgebra::ConstantsMap constants;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const Vector prod = componentwise(embeddings[i], embeddings[j]);
      if (prod.is_zero()) continue;
      const Membership mem = solver.membership(prod);
      if (!mem.in)
        throw Error("NotInverseSystem",
                    "limit carrier is not closed under the componentwise product");
      Vector expr(limit_basis);
      for (int k = 0; k < q; ++k) expr.set_coeff(k, mem.coefficients[k]);
      if (!expr.is_zero()) constants.emplace(std::make_pair(i, j), std::move(expr));
    }

  InverseLimitResult result;
  result.limit = std::make_shared<GradedAlgebra>(limit_basis, std::move(constants), "limit");
  result.product_basis = product_basis;
  result.embeddings = embeddings;
  for (int a = 0; a < m; ++a) {
    GradedAlgebraHom p;
    p.source = result.limit;
    p.target = diagram.objects[a];
    for (int k = 0; k < q; ++k) {
      Vector img(diagram.objects[a]->basis_ptr());
      for (int i = 0; i < diagram.objects[a]->dim(); ++i)
        img.set_coeff(i, embeddings[k].coeff(offset[a] + i));
      p.images.push_back(std::move(img));
    }
    result.projections.push_back(std::move(p));
  }
  return result;
}

std::optional<GradedAlgebraHom> factor_through_limit(const InverseLimitResult& lim,
                                                     const std::vector<GradedAlgebraHom>& cone) {
  if (cone.size() != lim.projections.size())
    throw Error("ValidationError", "cone size does not match the diagram");
  if (cone.empty()) throw Error("ValidationError", "empty cone");
  const AlgebraPtr& source = cone[0].source;
  for (std::size_t a = 0; a < cone.size(); ++a) {
    if (!cone[a].source->basis().same_as(source->basis()))
      throw Error("BasisMismatch", "cone legs have different sources");
    if (!cone[a].target->basis().same_as(lim.projections[a].target->basis()))
      throw Error("BasisMismatch", "cone leg " + std::to_string(a) +
                                       " does not target the matching diagram object");
  }

  const int q = lim.limit->dim();
  int rows = 0;
  for (const auto& p : lim.projections) rows += p.target->dim();

  // Columns: stacked projections of the limit basis vectors.
  std::vector<std::vector<Scalar>> columns(q, std::vector<Scalar>(rows, Scalar(0)));
  for (int k = 0; k < q; ++k) {
    int at = 0;
    for (const auto& p : lim.projections) {
      for (const auto& [i, c] : p.images[k].coeffs()) columns[k][at + i] = c;
      at += p.target->dim();
    }
  }

  GradedAlgebraHom u;
  u.source = source;
  u.target = lim.limit;
  for (int s = 0; s < source->dim(); ++s) {
    std::vector<Scalar> rhs(rows, Scalar(0));
    int at = 0;
    for (const auto& leg : cone) {
      for (const auto& [i, c] : leg.images[s].coeffs()) rhs[at + i] = c;
      at += leg.target->dim();
    }
    auto sol = solve_linear_system(columns, rhs);
    if (!sol) return std::nullopt;
    Vector img(lim.limit->basis_ptr());
    for (int k = 0; k < q; ++k) img.set_coeff(k, (*sol)[k]);
    u.images.push_back(std::move(img));
  }
  return u;
}

}  // namespace gradekit
