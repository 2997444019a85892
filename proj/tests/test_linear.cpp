#include <doctest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "gradekit/error.hpp"
#include "gradekit/linalg.hpp"

using namespace gradekit;

namespace {

BasisPtr s3_group_basis() {
  std::vector<int> degrees(6);
  for (int i = 0; i < 6; ++i) degrees[i] = i;
  return make_basis(fixtures::s3(), degrees, fixtures::s3_labels());
}

Vector random_vector(const BasisPtr& basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Vector v(basis);
  for (int i = 0; i < basis->size(); ++i) v.add_term(i, Scalar(num(rng), den(rng)));
  return v;
}

}  // namespace

TEST_CASE("scalars stay reduced with positive denominators") {
  const Scalar s(6, -4);
  CHECK(s.num_str() == "-3");
  CHECK(s.den_str() == "2");
  CHECK(Scalar(2, 4) + Scalar(1, 4) == Scalar(3, 4));
  CHECK(Scalar(1, 3) * Scalar(3, 1) == Scalar(1));
  CHECK((Scalar(1) / Scalar(7)).str() == "1/7");
  CHECK_THROWS_AS(Scalar("1", "0"), Error);
  // Arbitrary precision round-trip through decimal strings.
  const Scalar big("123456789012345678901234567890", "7");
  CHECK(Scalar(big.num_str(), big.den_str()) == big);
}

TEST_CASE("projection picks out one degree fiber") {
  const BasisPtr basis = s3_group_basis();
  Vector v(basis);
  v.set_coeff(0, 3);  // degree e
  v.set_coeff(2, 2);  // degree (12)
  const Vector pe = project_component(v, 0);
  CHECK(pe.support_size() == 1);
  CHECK(pe.coeff(0) == Scalar(3));
  CHECK(project_component(Vector(basis), 3).is_zero());

  // All degrees equal e: any other fiber is empty.
  const BasisPtr flat = make_basis(fixtures::s3(), std::vector<int>(4, 0));
  Vector w(flat);
  w.set_coeff(1, 5);
  CHECK(project_component(w, 2).is_zero());
}

TEST_CASE("projections over the support degrees sum back to the vector") {
  std::mt19937_64 rng(0);
  const BasisPtr basis = s3_group_basis();
  for (int round = 0; round < 25; ++round) {
    const Vector v = random_vector(basis, rng);
    Vector sum(basis);
    for (int degree : v.support_degrees()) sum += project_component(v, degree);
    CHECK(sum == v);
  }
}

TEST_CASE("span membership returns exact coefficients") {
  const BasisPtr basis = s3_group_basis();
  const Vector x1 = Vector::unit(basis, 1);
  const Vector x2 = Vector::unit(basis, 2);
  Vector query = x1;
  query.add_scaled(x2, 5);

  const Membership m = span_membership({x1, x2}, query);
  REQUIRE(m.in);
  CHECK(m.coefficients[0] == Scalar(1));
  CHECK(m.coefficients[1] == Scalar(5));
}

TEST_CASE("dimension shortfall is detected with a witness coordinate") {
  const BasisPtr basis = s3_group_basis();
  Vector gen = Vector::unit(basis, 1);
  gen -= Vector::unit(basis, 2);
  const Membership m = span_membership({gen}, Vector::unit(basis, 1));
  CHECK(!m.in);
  CHECK(m.witness == 2);  // after eliminating coordinate 1 the residue sits at 2
}

TEST_CASE("membership certificates reproduce the query") {
  std::mt19937_64 rng(1);
  const BasisPtr basis = s3_group_basis();
  for (int round = 0; round < 20; ++round) {
    std::vector<Vector> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(random_vector(basis, rng));
    // A query inside the span by construction.
    Vector query(basis);
    query.add_scaled(gens[0], Scalar(2, 3));
    query.add_scaled(gens[2], Scalar(-7, 2));
    const Membership m = span_membership(gens, query);
    REQUIRE(m.in);
    Vector rebuilt(basis);
    for (std::size_t t = 0; t < gens.size(); ++t)
      rebuilt.add_scaled(gens[t], m.coefficients[t]);
    CHECK(rebuilt == query);
  }
}

TEST_CASE("row reduction is idempotent") {
  std::mt19937_64 rng(2);
  const BasisPtr basis = s3_group_basis();
  for (int round = 0; round < 10; ++round) {
    std::vector<Vector> gens;
    for (int k = 0; k < 5; ++k) gens.push_back(random_vector(basis, rng));
    const SubspaceBasis reduced = row_reduce(basis, gens);
    const SubspaceBasis again = row_reduce(basis, reduced.rows);
    CHECK(reduced.rows == again.rows);
    // Pivots strictly increase and carry coefficient one.
    for (std::size_t r = 0; r + 1 < reduced.rows.size(); ++r)
      CHECK(reduced.rows[r].leading_index() < reduced.rows[r + 1].leading_index());
    for (const auto& row : reduced.rows)
      CHECK(row.coeff(row.leading_index()) == Scalar(1));
  }
}

TEST_CASE("vectors refuse foreign bases") {
  const BasisPtr basis = s3_group_basis();
  const BasisPtr other = make_basis(fixtures::s3(), {0, 1});
  Vector a(basis);
  const Vector b(other);
  CHECK_THROWS_AS(a += b, Error);
  CHECK_THROWS_AS(span_membership({Vector::unit(basis, 0)}, Vector::unit(other, 0)), Error);
}

TEST_CASE("dense solver matches hand results and detects infeasibility") {
  // x * (1,1) + y * (1,-1) = (3,1)  =>  x = 2, y = 1.
  const auto solution = solve_linear_system({{1, 1}, {1, -1}}, {3, 1});
  REQUIRE(solution.has_value());
  CHECK((*solution)[0] == Scalar(2));
  CHECK((*solution)[1] == Scalar(1));
  CHECK(!solve_linear_system({{1, 1}}, {1, 2}).has_value());
}

TEST_CASE("nullspace vectors annihilate the rows") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int round = 0; round < 10; ++round) {
    const int unknowns = 6;
    std::vector<std::vector<Scalar>> rows(3, std::vector<Scalar>(unknowns, Scalar(0)));
    for (auto& row : rows)
      for (auto& x : row) x = entry(rng);
    const auto basis = nullspace(rows, unknowns);
    for (const auto& v : basis)
      for (const auto& row : rows) {
        Scalar dot(0);
        for (int c = 0; c < unknowns; ++c) dot += row[c] * v[c];
        CHECK(dot.is_zero());
      }
    // Rank-nullity at full generality: rank + nullity = unknowns.
    SpanSolver probe(make_basis(fixtures::s3(), std::vector<int>(unknowns, 0)));
    const BasisPtr ambient = probe.ambient();
    for (const auto& row : rows) {
      Vector v(ambient);
      for (int c = 0; c < unknowns; ++c) v.add_term(c, row[c]);
      probe.insert(v);
    }
    CHECK(probe.rank() + static_cast<int>(basis.size()) == unknowns);
  }
}
