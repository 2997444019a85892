#include "gradekit/group.hpp"

#include <algorithm>
#include <set>

#include "gradekit/error.hpp"

namespace gradekit {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

std::string to_string(HomKind k) {
  switch (k) {
    case HomKind::mono: return "mono";
    case HomKind::epi: return "epi";
    case HomKind::iso: return "iso";
    case HomKind::general: return "general";
  }
  return "general";
}

GroupPtr build_group(std::vector<std::vector<int>> table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("ValidationError", "empty Cayley table");
  if (n > kMaxGroupOrder)
    throw Error("ValidationError", "group order " + std::to_string(n) + " exceeds the supported maximum " + std::to_string(kMaxGroupOrder));
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(table[g].size()) != n)
      throw Error("ValidationError", "row " + std::to_string(g) + " is not of length " + std::to_string(n));
    for (int h = 0; h < n; ++h)
      if (table[g][h] < 0 || table[g][h] >= n)
        throw Error("ValidationError", "entry at (" + std::to_string(g) + ", " + std::to_string(h) + ") is out of range");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error("NotAssociative", "witness triple " + triple(a, b, c));

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) { identity = e; break; }
  }
  if (identity < 0) throw Error("NoIdentity", "no two-sided identity element");

  std::vector<int> inverses(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      if (table[g][h] == identity && table[h][g] == identity) { inverses[g] = h; break; }
    if (inverses[g] < 0)
      throw Error("NoInverse", "witness element " + std::to_string(g));
  }

  auto out = std::make_shared<GroupTable>();
  out->order = n;
  out->table = std::move(table);
  out->identity = identity;
  out->inverses = std::move(inverses);
  out->name = std::move(name);
  return out;
}

GroupHom build_hom(GroupPtr domain, GroupPtr codomain, std::vector<int> images) {
  const int n = domain->order;
  if (static_cast<int>(images.size()) != n)
    throw Error("ValidationError", "image list length " + std::to_string(images.size()) + " does not match domain order " + std::to_string(n));
  for (int g = 0; g < n; ++g)
    if (images[g] < 0 || images[g] >= codomain->order)
      throw Error("ValidationError", "image of " + std::to_string(g) + " is out of range");

  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (images[domain->mul(g, h)] != codomain->mul(images[g], images[h]))
        throw Error("NotHomomorphism", "witness pair (" + std::to_string(g) + ", " + std::to_string(h) + ")");

  std::set<int> image_set(images.begin(), images.end());
  const bool injective = static_cast<int>(image_set.size()) == n;
  const bool surjective = static_cast<int>(image_set.size()) == codomain->order;

  GroupHom hom;
  hom.domain = std::move(domain);
  hom.codomain = std::move(codomain);
  hom.images = std::move(images);
  hom.kind = injective && surjective ? HomKind::iso
           : injective               ? HomKind::mono
           : surjective              ? HomKind::epi
                                     : HomKind::general;
  return hom;
}

GroupHom identity_hom(GroupPtr g) {
  std::vector<int> images(g->order);
  for (int i = 0; i < g->order; ++i) images[i] = i;
  return build_hom(g, g, std::move(images));
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!(*outer.domain == *inner.codomain))
    throw Error("ValidationError", "composition domain mismatch");
  std::vector<int> images(inner.domain->order);
  for (int g = 0; g < inner.domain->order; ++g) images[g] = outer.map(inner.map(g));
  return build_hom(inner.domain, outer.codomain, std::move(images));
}

bool NormalSubgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

NormalSubgroup build_normal_subgroup(GroupPtr parent, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw Error("ValidationError", "empty subgroup");
  for (int m : members)
    if (m < 0 || m >= parent->order)
      throw Error("ValidationError", "member " + std::to_string(m) + " is out of range");

  NormalSubgroup n;
  n.parent = parent;
  n.members = std::move(members);

  if (!n.contains(parent->identity))
    throw Error("ValidationError", "subgroup does not contain the identity");
  for (int a : n.members) {
    if (!n.contains(parent->inv(a)))
      throw Error("ValidationError", "not closed under inverse: " + std::to_string(a));
    for (int b : n.members)
      if (!n.contains(parent->mul(a, b)))
        throw Error("ValidationError", "not closed under product: (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  for (int g = 0; g < parent->order; ++g)
    for (int m : n.members) {
      const int conj = parent->mul(parent->mul(g, m), parent->inv(g));
      if (!n.contains(conj))
        throw Error("NotNormal", "witness conjugation " + std::to_string(g) + " * " + std::to_string(m) + " * " + std::to_string(g) + "^-1 = " + std::to_string(conj));
    }
  return n;
}

std::pair<GroupPtr, GroupHom> quotient_group(const GroupPtr& g, const NormalSubgroup& n) {
  if (!(*n.parent == *g)) throw Error("ValidationError", "subgroup parent mismatch");

  // Coset of x = { x*m : m in N }; representative = smallest member.
  const int order = g->order;
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    int rep = x;
    std::vector<int> coset;
    for (int m : n.members) {
      const int y = g->mul(x, m);
      coset.push_back(y);
      rep = std::min(rep, y);
    }
    const int index = static_cast<int>(reps.size());
    reps.push_back(rep);
    for (int y : coset) coset_of[y] = index;
  }

  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) table[a][b] = coset_of[g->mul(reps[a], reps[b])];

  auto quotient = build_group(std::move(table), g->name.empty() ? "quotient" : g->name + "/N");
  GroupHom projection = build_hom(g, quotient, coset_of);
  return {std::move(quotient), std::move(projection)};
}

}  // namespace gradekit
