#include <doctest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "gradekit/algebra.hpp"
#include "gradekit/error.hpp"
#include "gradekit/functors.hpp"

using namespace gradekit;

namespace {

bool throws_code(const std::function<void()>& f, const std::string& code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

/// u(e), n(g) over C2 with u the unit and n*n = 0: a nilpotent odd fiber.
AlgebraPtr nilpotent_fiber_algebra() {
  BasisPtr basis = make_basis(fixtures::c2(), {0, 1}, {"u", "n"});
  GradedAlgebra::ConstantsMap constants;
  constants.emplace(std::make_pair(0, 0), Vector::unit(basis, 0));
  constants.emplace(std::make_pair(0, 1), Vector::unit(basis, 1));
  constants.emplace(std::make_pair(1, 0), Vector::unit(basis, 1));
  return std::make_shared<GradedAlgebra>(basis, std::move(constants), "nilpotent-odd");
}

}  // namespace

TEST_CASE("group algebra multiplication follows the Cayley table") {
  const AlgebraPtr a = fixtures::group_algebra(fixtures::s3(), fixtures::s3_labels());
  // (123) * (132) = e.
  const Vector prod = a->multiply(Vector::unit(a->basis_ptr(), 3),
                                  Vector::unit(a->basis_ptr(), 4));
  CHECK(prod == Vector::unit(a->basis_ptr(), 0));

  CHECK(a->multiply(Vector::unit(a->basis_ptr(), 2), Vector(a->basis_ptr())).is_zero());

  // (e + (12)) * (e - (12)) expands to zero; oracle by four table lookups.
  Vector left = Vector::unit(a->basis_ptr(), 0);
  left += Vector::unit(a->basis_ptr(), 2);
  Vector right = Vector::unit(a->basis_ptr(), 0);
  right -= Vector::unit(a->basis_ptr(), 2);
  Vector expected(a->basis_ptr());
  const GroupPtr g = fixtures::s3();
  expected.add_term(g->mul(0, 0), 1);
  expected.add_term(g->mul(0, 2), -1);
  expected.add_term(g->mul(2, 0), 1);
  expected.add_term(g->mul(2, 2), -1);
  CHECK(expected.is_zero());
  CHECK(a->multiply(left, right).is_zero());
}

TEST_CASE("associativity validation") {
  const AlgebraPtr qs3 = fixtures::group_algebra(fixtures::s3());
  CHECK(qs3->validate().holds);

  // The commutator deformation is a Lie product, hence not associative;
  // confirm the report witness by an independent exhaustive scan.
  const auto commutator = std::make_shared<GradedAlgebra>(
      deform(*qs3, DeformationData::constant(fixtures::s3(), 1, -1)));
  const AssociativityReport& report = commutator->validate();
  CHECK(!report.holds);
  REQUIRE(!report.witnesses.empty());
  bool found = false;
  for (int a = 0; a < 6 && !found; ++a)
    for (int b = 0; b < 6 && !found; ++b)
      for (int c = 0; c < 6 && !found; ++c) {
        const Vector lhs = commutator->multiply(commutator->product(a, b),
                                                Vector::unit(commutator->basis_ptr(), c));
        const Vector rhs = commutator->multiply(Vector::unit(commutator->basis_ptr(), a),
                                                commutator->product(b, c));
        if (!(lhs == rhs)) found = true;
      }
  CHECK(found);

  // One-dimensional idempotent algebra.
  BasisPtr tiny = make_basis(fixtures::trivial_group(), {0});
  GradedAlgebra::ConstantsMap constants;
  constants.emplace(std::make_pair(0, 0), Vector::unit(tiny, 0));
  const GradedAlgebra idempotent(tiny, std::move(constants));
  CHECK(idempotent.validate().holds);
}

TEST_CASE("grading checks on the group algebra and its commutator deformation") {
  const AlgebraPtr qs3 = fixtures::group_algebra(fixtures::s3());
  CHECK(qs3->grading(GradingMode::classical).holds);
  CHECK(qs3->grading(GradingMode::noncommutative).holds);

  const auto commutator = std::make_shared<GradedAlgebra>(
      deform(*qs3, DeformationData::constant(fixtures::s3(), 1, -1)));
  CHECK(commutator->grading(GradingMode::noncommutative).holds);
  CHECK(!commutator->grading(GradingMode::classical).holds);
}

TEST_CASE("grading failure carries the offending pair") {
  // x in the (12) fiber, y in the (13) fiber, x*y lands at e: the two
  // admissible fibers are the 3-cycles, so the inclusion fails.
  const GroupPtr s3 = fixtures::s3();
  CHECK(s3->mul(2, 5) != 0);
  CHECK(s3->mul(5, 2) != 0);
  BasisPtr basis = make_basis(s3, {2, 5, 0}, {"x", "y", "z"});
  GradedAlgebra::ConstantsMap constants;
  constants.emplace(std::make_pair(0, 1), Vector::unit(basis, 2));
  const GradedAlgebra a(basis, std::move(constants));

  const GradingReport& report = a.grading(GradingMode::noncommutative);
  CHECK(!report.holds);
  REQUIRE(report.witnesses.size() == 1);
  CHECK(report.witnesses[0].left_degree == 2);
  CHECK(report.witnesses[0].right_degree == 5);
  // The witness product genuinely fails membership in the two target fibers.
  const auto& w = report.witnesses[0];
  const Membership m = span_membership(
      a.fiber_generators({s3->mul(w.left_degree, w.right_degree),
                          s3->mul(w.right_degree, w.left_degree)}),
      w.product);
  CHECK(!m.in);
}

TEST_CASE("classical grading implies the noncommutative one") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 20; ++round) {
    const AlgebraPtr a = fixtures::random_algebra(fixtures::s3(), rng, round % 2 == 0);
    if (a->grading(GradingMode::classical).holds)
      CHECK(a->grading(GradingMode::noncommutative).holds);
  }
}

TEST_CASE("both grading modes coincide over abelian groups") {
  std::mt19937_64 rng(13);
  for (const GroupPtr& g : {fixtures::c2(), fixtures::c3()})
    for (int round = 0; round < 10; ++round) {
      const AlgebraPtr a = fixtures::random_algebra(g, rng, round % 2 == 0);
      CHECK(a->grading(GradingMode::classical).holds ==
            a->grading(GradingMode::noncommutative).holds);
    }
}

TEST_CASE("unit search") {
  const AlgebraPtr qs3 = fixtures::group_algebra(fixtures::s3());
  CHECK(throws_code([&] { qs3->find_unit(); }, "NotValidated"));
  qs3->validate();
  REQUIRE(qs3->find_unit().has_value());
  CHECK(*qs3->find_unit() == Vector::unit(qs3->basis_ptr(), 0));

  // The half/half deformation keeps the same unit.
  const auto half = std::make_shared<GradedAlgebra>(
      deform(*qs3, DeformationData::constant(fixtures::s3(), Scalar(1, 2), Scalar(1, 2))));
  half->validate();
  REQUIRE(half->find_unit().has_value());
  CHECK(*half->find_unit() == Vector::unit(half->basis_ptr(), 0));

  // The commutator deformation has none: u would square to zero.
  const auto commutator = std::make_shared<GradedAlgebra>(
      deform(*qs3, DeformationData::constant(fixtures::s3(), 1, -1)));
  commutator->validate();
  CHECK(!commutator->find_unit().has_value());
}

TEST_CASE("homogeneous inverses in the group algebra") {
  const AlgebraPtr qs3 = fixtures::group_algebra(fixtures::s3());
  qs3->validate();

  Vector a(qs3->basis_ptr());
  a.set_coeff(3, 3);  // 3 * (123)
  const auto inverse = homogeneous_inverse(*qs3, a, Side::right);
  REQUIRE(inverse.has_value());
  CHECK(inverse->support_degrees() == std::vector<int>{4});  // (123)^-1 = (132)
  CHECK(inverse->coeff(4) == Scalar(1, 3));
  CHECK(qs3->multiply(a, *inverse) == *qs3->find_unit());

  const Vector e = Vector::unit(qs3->basis_ptr(), 0);
  const auto self = homogeneous_inverse(*qs3, e, Side::left);
  REQUIRE(self.has_value());
  CHECK(*self == e);

  CHECK(throws_code([&] { homogeneous_inverse(*qs3, Vector(qs3->basis_ptr()), Side::right); },
                    "NotHomogeneous"));
  Vector mixed = Vector::unit(qs3->basis_ptr(), 0);
  mixed += Vector::unit(qs3->basis_ptr(), 2);
  CHECK(throws_code([&] { homogeneous_inverse(*qs3, mixed, Side::right); },
                    "NotHomogeneous"));
}

TEST_CASE("nilpotent fiber: constrained and unconstrained systems agree on infeasibility") {
  const AlgebraPtr a = nilpotent_fiber_algebra();
  a->validate();
  REQUIRE(a->find_unit().has_value());
  const Vector n = Vector::unit(a->basis_ptr(), 1);
  for (Side side : {Side::left, Side::right}) {
    CHECK(!homogeneous_inverse(*a, n, side).has_value());
    CHECK(!unconstrained_inverse(*a, n, side).has_value());
  }
}

TEST_CASE("hom validation") {
  const AlgebraPtr qs3 = fixtures::group_algebra(fixtures::s3());
  CHECK(validate_hom(identity_algebra_hom(qs3)).valid());

  // Group-algebra hom induced by the C3 embedding, housed over S3 by pushing
  // the source degrees forward; nine pairs checked inside.
  const AlgebraPtr qc3 = fixtures::group_algebra(fixtures::c3());
  const GroupHom theta = build_hom(fixtures::c3(), fixtures::s3(), {0, 3, 4});
  GradedAlgebraHom f;
  f.source = std::make_shared<GradedAlgebra>(induce_algebra(*qc3, theta));
  f.target = qs3;
  for (int i = 0; i < 3; ++i)
    f.images.push_back(Vector::unit(qs3->basis_ptr(), theta.map(i)));
  const HomReport embedding = validate_hom(f);
  CHECK(embedding.multiplicative);
  CHECK(embedding.graded);

  GradedAlgebraHom collapse = zero_algebra_hom(qs3, qs3);
  collapse.images[2] = Vector::unit(qs3->basis_ptr(), 0);  // (12) -> e
  const HomReport report = validate_hom(collapse);
  CHECK(!report.graded);
  CHECK(report.gradedness_witnesses == std::vector<int>{2});
}

TEST_CASE("inverse limit of a single object is the object") {
  const AlgebraPtr qs3 = fixtures::group_algebra(fixtures::s3());
  InverseDiagram diagram;
  diagram.objects.push_back(qs3);
  const InverseLimitResult lim = finite_inverse_limit(diagram);
  CHECK(lim.limit->dim() == 6);
  CHECK(validate_hom(lim.projections[0]).valid());
  // The projection is an isomorphism: each basis vector maps to a distinct unit.
  SpanSolver probe(qs3->basis_ptr());
  for (const auto& img : lim.projections[0].images) probe.insert(img);
  CHECK(probe.rank() == 6);
}

TEST_CASE("inverse limit with no relations is the direct product") {
  const AlgebraPtr qc2 = fixtures::group_algebra(fixtures::c2());
  InverseDiagram diagram;
  diagram.objects = {qc2, qc2};
  const InverseLimitResult lim = finite_inverse_limit(diagram);
  CHECK(lim.limit->dim() == 4);
  // Componentwise grading: two basis vectors per fiber.
  CHECK(static_cast<int>(lim.limit->fiber(0).size()) == 2);
  CHECK(static_cast<int>(lim.limit->fiber(1).size()) == 2);
  // The product is componentwise: units of the two components multiply to themselves.
  const auto& unit0 = lim.limit->product(0, 0);
  CHECK(!unit0.is_zero());
}

TEST_CASE("diagonal diagram gives the diagonal subalgebra") {
  const AlgebraPtr qs3 = fixtures::group_algebra(fixtures::s3());
  InverseDiagram diagram;
  diagram.objects = {qs3, qs3};
  GradedAlgebraHom id01 = identity_algebra_hom(qs3);
  diagram.relations.push_back({0, 1, id01});
  diagram.relations.push_back({1, 0, id01});
  const InverseLimitResult lim = finite_inverse_limit(diagram);
  CHECK(lim.limit->dim() == 6);

  // f_{alpha beta} . p_beta = p_alpha on the limit basis.
  for (const auto& rel : diagram.relations)
    CHECK(same_hom(compose(rel.map, lim.projections[rel.beta]),
                   lim.projections[rel.alpha]));

  // Both projections are isomorphisms onto the object and agree.
  CHECK(same_hom(lim.projections[0], lim.projections[1]));

  // Universal factorization of the identity cone.
  GradedAlgebraHom leg = identity_algebra_hom(qs3);
  const auto u = factor_through_limit(lim, {leg, leg});
  REQUIRE(u.has_value());
  for (std::size_t alpha = 0; alpha < 2; ++alpha)
    CHECK(same_hom(compose(lim.projections[alpha], *u), leg));
  CHECK(validate_hom(*u).valid());
}

TEST_CASE("broken inverse systems are rejected") {
  const AlgebraPtr qs3 = fixtures::group_algebra(fixtures::s3());
  InverseDiagram diagram;
  diagram.objects = {qs3, qs3};
  GradedAlgebraHom not_id = zero_algebra_hom(qs3, qs3);
  diagram.relations.push_back({0, 0, not_id});
  CHECK(throws_code([&] { finite_inverse_limit(diagram); }, "NotInverseSystem"));

  // Missing composite relation.
  InverseDiagram chain;
  chain.objects = {qs3, qs3, qs3};
  chain.relations.push_back({0, 1, identity_algebra_hom(qs3)});
  chain.relations.push_back({1, 2, identity_algebra_hom(qs3)});
  CHECK(throws_code([&] { finite_inverse_limit(chain); }, "NotInverseSystem"));
}
