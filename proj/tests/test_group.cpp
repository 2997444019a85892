#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "gradekit/error.hpp"
#include "gradekit/group.hpp"

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

}  // namespace

TEST_CASE("order-2 cyclic table is forced by the axioms") {
  const GroupPtr g = build_group({{0, 1}, {1, 0}});
  CHECK(g->order == 2);
  CHECK(g->identity == 0);
  CHECK(g->inv(1) == 1);
}

TEST_CASE("composing all six permutations of three points yields a group of order 6") {
  const GroupPtr g = fixtures::s3();
  CHECK(g->order == 6);
  CHECK(g->identity == 0);
  // Spot values against cycle arithmetic: (12)(13) = (132), (13)(12) = (123).
  CHECK(g->mul(2, 5) == 4);
  CHECK(g->mul(5, 2) == 3);
  CHECK(g->inv(3) == 4);  // (123)^-1 = (132)
}

TEST_CASE("table without inverses is rejected with a witness") {
  CHECK(throws_code([] { build_group({{0, 1}, {1, 1}}); }, "NoInverse"));
}

TEST_CASE("broken associativity is caught with a witness triple") {
  // Tweak one C3 entry; the identity row/column stays intact.
  auto t = fixtures::cyclic_table(3);
  t[1][1] = 1;
  CHECK(throws_code([&] { build_group(t); }, "NotAssociative"));
}

TEST_CASE("oversized tables are refused") {
  const int n = kMaxGroupOrder + 1;
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  CHECK(throws_code([&] { build_group(t); }, "ValidationError"));
}

TEST_CASE("cancellation holds in every validated group") {
  for (const GroupPtr& g : {fixtures::c2(), fixtures::c3(), fixtures::s3(), fixtures::d4()}) {
    for (int a = 0; a < g->order; ++a) {
      std::vector<bool> row(g->order, false), col(g->order, false);
      for (int b = 0; b < g->order; ++b) {
        row[g->mul(a, b)] = true;
        col[g->mul(b, a)] = true;
      }
      for (int b = 0; b < g->order; ++b) {
        CHECK(row[b]);
        CHECK(col[b]);
      }
    }
  }
}

TEST_CASE("hom kinds are derived") {
  const GroupPtr s3 = fixtures::s3();
  const GroupPtr c3 = fixtures::c3();
  const GroupPtr c2 = fixtures::c2();

  CHECK(identity_hom(s3).kind == HomKind::iso);

  // Oracle for the embedding: check the hom law over all 9 pairs by hand.
  const std::vector<int> images{0, 3, 4};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(images[c3->mul(a, b)] == s3->mul(images[a], images[b]));
  CHECK(build_hom(c3, s3, images).kind == HomKind::mono);

  CHECK(build_hom(c2, c2, {0, 0}).kind == HomKind::general);
  CHECK(throws_code([&] { build_hom(c2, c2, {1, 0}); }, "NotHomomorphism"));
}

TEST_CASE("hom composition of validated homs validates") {
  const GroupPtr s3 = fixtures::s3();
  const GroupPtr c3 = fixtures::c3();
  const GroupHom theta = build_hom(c3, s3, {0, 3, 4});
  const auto [quotient, pi] = quotient_group(s3, build_normal_subgroup(s3, {0, 3, 4}));
  const GroupHom composite = compose(pi, theta);  // C3 -> S3/A3, kills everything
  CHECK(composite.kind == HomKind::general);
  for (int a = 0; a < 3; ++a) CHECK(composite.map(a) == quotient->identity);
}

TEST_CASE("quotient by the alternating subgroup") {
  const GroupPtr s3 = fixtures::s3();
  const NormalSubgroup a3 = build_normal_subgroup(s3, {0, 3, 4});
  const auto [quotient, pi] = quotient_group(s3, a3);
  CHECK(quotient->order == 2);
  CHECK(pi.kind == HomKind::epi);

  // Coset enumeration oracle: even permutations to the identity coset.
  const std::vector<int> expected{0, 1, 1, 0, 0, 1};
  CHECK(pi.images == expected);
}

TEST_CASE("quotient by the trivial subgroup is an isomorphism") {
  const GroupPtr s3 = fixtures::s3();
  const auto [quotient, pi] = quotient_group(s3, build_normal_subgroup(s3, {0}));
  CHECK(quotient->order == 6);
  CHECK(pi.kind == HomKind::iso);
  CHECK(*quotient == *s3);
}

TEST_CASE("quotient by the whole group is trivial") {
  const GroupPtr s3 = fixtures::s3();
  const auto [quotient, pi] =
      quotient_group(s3, build_normal_subgroup(s3, {0, 1, 2, 3, 4, 5}));
  CHECK(quotient->order == 1);
  CHECK(pi.kind == HomKind::epi);
}

TEST_CASE("non-normal subgroups are rejected with a conjugation witness") {
  const GroupPtr s3 = fixtures::s3();
  // {e, (12)} is a subgroup but not normal.
  CHECK(throws_code([&] { build_normal_subgroup(s3, {0, 2}); }, "NotNormal"));
  // Not even a subgroup: fails closure.
  CHECK(throws_code([&] { build_normal_subgroup(s3, {0, 3}); }, "ValidationError"));
}
