#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gradekit {

/// Exhaustive associativity validation is O(order^3); this caps it at desk scale.
inline constexpr int kMaxGroupOrder = 64;

/// A finite group given by its Cayley table over dense element indices
/// 0..order-1. Instances are only produced validated (see build_group) and
/// are immutable afterwards.
struct GroupTable {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[g][h] = g*h
  int identity = 0;
  std::vector<int> inverses;
  std::string name;

  int mul(int g, int h) const { return table[g][h]; }
  int inv(int g) const { return inverses[g]; }

  /// Structural equality; the name label is ignored.
  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order == b.order && a.identity == b.identity && a.table == b.table;
  }
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Validates a raw Cayley table and derives identity and inverses.
/// Throws NotAssociative (with witness triple), NoIdentity, NoInverse
/// (with witness element), or ValidationError for malformed input.
GroupPtr build_group(std::vector<std::vector<int>> table, std::string name = {});

enum class HomKind { mono, epi, iso, general };

std::string to_string(HomKind k);

/// A validated group homomorphism with its injectivity/surjectivity class.
struct GroupHom {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<int> images;  // images[g] in the codomain
  HomKind kind = HomKind::general;

  int map(int g) const { return images[g]; }
};

/// Checks images[g*h] = images[g]*images[h] on all pairs and derives the kind.
/// Throws NotHomomorphism with a witness pair.
GroupHom build_hom(GroupPtr domain, GroupPtr codomain, std::vector<int> images);

GroupHom identity_hom(GroupPtr g);

/// outer after inner; domains must match structurally.
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

/// A normal subgroup given by its sorted member set.
struct NormalSubgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted ascending, contains the identity

  bool contains(int g) const;
};

/// Validates closure, identity, inverses and normality (gng^{-1} in members).
/// Throws NotNormal with a witness conjugation, or ValidationError.
NormalSubgroup build_normal_subgroup(GroupPtr parent, std::vector<int> members);

/// The quotient G/N over coset representatives (cosets ordered by smallest
/// member, so the identity coset is index 0) together with the canonical
/// projection, which always has kind epi (iso when N is trivial).
std::pair<GroupPtr, GroupHom> quotient_group(const GroupPtr& g, const NormalSubgroup& n);

}  // namespace gradekit
