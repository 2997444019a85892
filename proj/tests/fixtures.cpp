#include "fixtures.hpp"

#include <algorithm>
#include <map>

namespace fixtures {

std::vector<std::vector<int>> cyclic_table(int order) {
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) t[a][b] = (a + b) % order;
  return t;
}

std::vector<std::vector<int>> symmetric3_table() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {1, 2, 3};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> t(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t f = 0; f < perms.size(); ++f)
    for (std::size_t g = 0; g < perms.size(); ++g) {
      std::vector<int> composed(3);
      for (int x = 0; x < 3; ++x) composed[x] = perms[f][perms[g][x] - 1];
      t[f][g] = index.at(composed);
    }
  return t;
}

std::vector<std::vector<int>> dihedral_table(int n) {
  const int order = 2 * n;
  auto compose = [n](int x, int y) {
    if (x < n && y < n) return (x + y) % n;
    if (x < n) return (y + x) % n + n;
    if (y < n) return (x - y + n) % n + n;
    return (x - y + n) % n;
  };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) t[a][b] = compose(a, b);
  return t;
}

GroupPtr trivial_group() { return build_group({{0}}, "C1"); }
GroupPtr c2() { return build_group(cyclic_table(2), "C2"); }
GroupPtr c3() { return build_group(cyclic_table(3), "C3"); }
GroupPtr s3() { return build_group(symmetric3_table(), "S3"); }
GroupPtr d4() { return build_group(dihedral_table(4), "D4"); }

std::vector<std::string> s3_labels() {
  return {"e", "(23)", "(12)", "(123)", "(132)", "(13)"};
}

AlgebraPtr group_algebra(const GroupPtr& g, std::vector<std::string> labels) {
  std::vector<int> degrees(g->order);
  for (int i = 0; i < g->order; ++i) degrees[i] = i;
  BasisPtr basis = make_basis(g, std::move(degrees), std::move(labels));
  GradedAlgebra::ConstantsMap constants;
  for (int a = 0; a < g->order; ++a)
    for (int b = 0; b < g->order; ++b)
      constants.emplace(std::make_pair(a, b), Vector::unit(basis, g->mul(a, b)));
  return std::make_shared<GradedAlgebra>(basis, std::move(constants),
                                         "Q[" + g->name + "]");
}

AlgebraPtr random_algebra(const GroupPtr& g, std::mt19937_64& rng, bool respect_classical) {
  std::vector<int> degrees(g->order);
  for (int i = 0; i < g->order; ++i) degrees[i] = i;
  BasisPtr basis = make_basis(g, degrees);

  std::uniform_int_distribution<int> numerator(-2, 2);
  std::uniform_int_distribution<int> occupancy(0, 3);  // sparse: ~1/4 pairs set
  GradedAlgebra::ConstantsMap constants;
  for (int i = 0; i < g->order; ++i)
    for (int j = 0; j < g->order; ++j) {
      if (occupancy(rng) != 0) continue;
      Vector v(basis);
      if (respect_classical) {
        v.set_coeff(g->mul(degrees[i], degrees[j]), numerator(rng));
      } else {
        std::uniform_int_distribution<int> target(0, g->order - 1);
        v.set_coeff(target(rng), numerator(rng));
      }
      if (!v.is_zero()) constants.emplace(std::make_pair(i, j), std::move(v));
    }
  return std::make_shared<GradedAlgebra>(basis, std::move(constants), "random");
}

DeformationData random_unit_preserving_deformation(const GroupPtr& g,
                                                   std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numerator(-2, 2);
  std::uniform_int_distribution<int> denominator(1, 3);
  auto pick = [&] { return Scalar(numerator(rng), denominator(rng)); };

  const int n = g->order;
  const int e = g->identity;
  std::vector<std::vector<Scalar>> lambda(n, std::vector<Scalar>(n, Scalar(0)));
  std::vector<std::vector<Scalar>> mu(n, std::vector<Scalar>(n, Scalar(0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      lambda[a][b] = pick();
      mu[a][b] = pick();
    }
  // Boundary rows: lambda[g][e] + mu[e][g] = 1 = lambda[e][g] + mu[g][e].
  for (int a = 0; a < n; ++a) {
    mu[e][a] = Scalar(1) - lambda[a][e];
    mu[a][e] = Scalar(1) - lambda[e][a];
  }
  mu[e][e] = Scalar(1) - lambda[e][e];
  return make_deformation(g, std::move(lambda), std::move(mu));
}

LiePtr heisenberg() {
  BasisPtr basis = make_basis(trivial_group(), {0, 0, 0}, {"x1", "x2", "x3"});
  GradedLieAlgebra::BracketMap brackets;
  brackets.emplace(std::make_pair(0, 1), Vector::unit(basis, 2));
  brackets.emplace(std::make_pair(1, 0), -Vector::unit(basis, 2));
  return std::make_shared<GradedLieAlgebra>(basis, std::move(brackets), "heisenberg");
}

LiePtr abelian_rank2_s3() {
  // Degrees: x at the transposition (12) = index 2, y at (13) = index 5.
  BasisPtr basis = make_basis(s3(), {2, 5}, {"x", "y"});
  return std::make_shared<GradedLieAlgebra>(basis, GradedLieAlgebra::BracketMap{},
                                            "abelian-rank2-s3");
}

LiePtr abelian(int rank) {
  BasisPtr basis = make_basis(trivial_group(), std::vector<int>(rank, 0));
  return std::make_shared<GradedLieAlgebra>(basis, GradedLieAlgebra::BracketMap{},
                                            "abelian");
}

}  // namespace fixtures
