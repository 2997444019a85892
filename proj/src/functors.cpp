#include "gradekit/functors.hpp"

#include <algorithm>

#include "gradekit/error.hpp"

namespace gradekit {

namespace {

void require_group(const GradedAlgebra& a, const GroupTable& g, const std::string& who) {
  if (!(*a.basis().group == g))
    throw Error("BasisMismatch", who + ": algebra is graded by a different group");
}

void require_mono(const GroupHom& theta) {
  if (theta.kind != HomKind::mono && theta.kind != HomKind::iso)
    throw Error("NotMono", "group map must be injective");
}

void require_epi(const GroupHom& pi) {
  if (pi.kind != HomKind::epi && pi.kind != HomKind::iso)
    throw Error("NotEpi", "group map must be surjective");
}

void require_classical(const GradedAlgebra& a, const std::string& who) {
  if (!a.grading(GradingMode::classical).holds)
    throw Error("NotClassicallyGraded", who + ": input must be classically graded");
}

}  // namespace

DeformationData DeformationData::constant(GroupPtr group, const Scalar& l, const Scalar& m) {
  const int n = group->order;
  DeformationData d;
  d.group = std::move(group);
  d.lambda.assign(n, std::vector<Scalar>(n, l));
  d.mu.assign(n, std::vector<Scalar>(n, m));
  return d;
}

DeformationData DeformationData::trivial(GroupPtr group) {
  return constant(std::move(group), 1, 0);
}

bool DeformationData::preserves_unit() const {
  const int e = group->identity;
  for (int g = 0; g < group->order; ++g) {
    if (lambda[g][e] + mu[e][g] != Scalar(1)) return false;
    if (lambda[e][g] + mu[g][e] != Scalar(1)) return false;
  }
  return true;
}

DeformationData make_deformation(GroupPtr group, std::vector<std::vector<Scalar>> lambda,
                                 std::vector<std::vector<Scalar>> mu) {
  const auto n = static_cast<std::size_t>(group->order);
  auto square = [n](const std::vector<std::vector<Scalar>>& t) {
    if (t.size() != n) return false;
    return std::all_of(t.begin(), t.end(),
                       [n](const auto& row) { return row.size() == n; });
  };
  if (!square(lambda) || !square(mu))
    throw Error("ValidationError", "deformation tables must be |G| x |G|");
  DeformationData d;
  d.group = std::move(group);
  d.lambda = std::move(lambda);
  d.mu = std::move(mu);
  return d;
}

GradedAlgebra deform(const GradedAlgebra& a, const DeformationData& d) {
  require_group(a, *d.group, "deform");
  require_classical(a, "deform");

  const int n = a.dim();
  GradedAlgebra::ConstantsMap constants;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int g = a.basis().degree(i);
      const int h = a.basis().degree(j);
      Vector v(a.basis_ptr());
      v.add_scaled(a.product(i, j), d.lambda[g][h]);
      v.add_scaled(a.product(j, i), d.mu[h][g]);
      if (!v.is_zero()) constants.emplace(std::make_pair(i, j), std::move(v));
    }
  return GradedAlgebra(a.basis_ptr(), std::move(constants), a.name() + ".deformed");
}

GradedAlgebra opposite(const GradedAlgebra& a) {
  const GroupTable& grp = *a.basis().group;
  std::vector<int> degrees(a.dim());
  for (int i = 0; i < a.dim(); ++i) degrees[i] = grp.inv(a.basis().degree(i));
  BasisPtr basis = make_basis(a.basis().group, std::move(degrees), a.basis().labels);

  GradedAlgebra::ConstantsMap constants;
  for (const auto& [key, value] : a.constants()) {
    Vector v(basis);
    for (const auto& [k, c] : value.coeffs()) v.set_coeff(k, c);
    constants.emplace(std::make_pair(key.second, key.first), std::move(v));
  }
  return GradedAlgebra(std::move(basis), std::move(constants), a.name() + ".op");
}

namespace {

/// Retained indices and their new positions when restricting along theta.
struct Retention {
  std::vector<int> kept;            // old indices, ascending
  std::vector<int> new_index;      // old index -> new index or -1
  std::vector<int> pulled_degrees;  // degree in H per kept element
};

Retention retained_along(const GradedAlgebra& a, const GroupHom& theta) {
  std::vector<int> preimage(theta.codomain->order, -1);
  for (int h = 0; h < theta.domain->order; ++h) preimage[theta.map(h)] = h;

  Retention r;
  r.new_index.assign(a.dim(), -1);
  for (int i = 0; i < a.dim(); ++i) {
    const int h = preimage[a.basis().degree(i)];
    if (h < 0) continue;
    r.new_index[i] = static_cast<int>(r.kept.size());
    r.kept.push_back(i);
    r.pulled_degrees.push_back(h);
  }
  return r;
}

}  // namespace

GradedAlgebra restrict_algebra(const GradedAlgebra& a, const GroupHom& theta) {
  require_mono(theta);
  require_group(a, *theta.codomain, "restrict");

  const Retention r = retained_along(a, theta);
  std::vector<std::string> labels;
  for (int i : r.kept) labels.push_back(a.basis().label(i));
  BasisPtr basis = make_basis(theta.domain, r.pulled_degrees, std::move(labels));

  GradedAlgebra::ConstantsMap constants;
  for (const auto& [key, value] : a.constants()) {
    if (r.new_index[key.first] < 0 || r.new_index[key.second] < 0) continue;
    Vector v(basis);
    for (const auto& [k, c] : value.coeffs()) {
      if (r.new_index[k] < 0)
        throw Error("NotClosed", "product of retained pair (" + std::to_string(key.first) +
                                     ", " + std::to_string(key.second) +
                                     ") has support outside the retained fibers at index " +
                                     std::to_string(k));
      v.set_coeff(r.new_index[k], c);
    }
    constants.emplace(std::make_pair(r.new_index[key.first], r.new_index[key.second]),
                      std::move(v));
  }
  return GradedAlgebra(std::move(basis), std::move(constants), a.name() + ".restricted");
}

namespace {

GradedAlgebra regrade(const GradedAlgebra& a, GroupPtr new_group, std::vector<int> degrees,
                      const std::string& name) {
  BasisPtr basis = make_basis(std::move(new_group), std::move(degrees), a.basis().labels);
  GradedAlgebra::ConstantsMap constants;
  for (const auto& [key, value] : a.constants()) {
    Vector v(basis);
    for (const auto& [k, c] : value.coeffs()) v.set_coeff(k, c);
    constants.emplace(key, std::move(v));
  }
  return GradedAlgebra(std::move(basis), std::move(constants), name);
}

}  // namespace

GradedAlgebra induce_algebra(const GradedAlgebra& a, const GroupHom& theta) {
  require_mono(theta);
  require_group(a, *theta.domain, "induce");
  std::vector<int> degrees(a.dim());
  for (int i = 0; i < a.dim(); ++i) degrees[i] = theta.map(a.basis().degree(i));
  return regrade(a, theta.codomain, std::move(degrees), a.name() + ".induced");
}

GradedAlgebra coarsen_algebra(const GradedAlgebra& a, const GroupHom& pi) {
  require_epi(pi);
  require_group(a, *pi.domain, "coarsen");
  std::vector<int> degrees(a.dim());
  for (int i = 0; i < a.dim(); ++i) degrees[i] = pi.map(a.basis().degree(i));
  return regrade(a, pi.codomain, std::move(degrees), a.name() + ".coarsened");
}

LiftedAlgebra group_ring_lift(const AlgebraPtr& a, const GroupHom& pi,
                              const DeformationData& d) {
  require_epi(pi);
  require_group(*a, *pi.codomain, "lift");
  require_classical(*a, "lift");
  if (!(*d.group == *pi.domain))
    throw Error("BasisMismatch", "lift: deformation tables indexed by a different group");

  const GroupTable& big = *pi.domain;
  LiftedAlgebra lifted;
  std::vector<int> degrees;
  std::vector<std::string> labels;
  for (int g = 0; g < big.order; ++g) {
    const int coset = pi.map(g);
    for (int b = 0; b < a->dim(); ++b) {
      if (a->basis().degree(b) != coset) continue;
      lifted.index_of_pair[{b, g}] = static_cast<int>(lifted.pair_of_index.size());
      lifted.pair_of_index.emplace_back(b, g);
      degrees.push_back(g);
      labels.push_back(a->basis().label(b) + "@" + std::to_string(g));
    }
  }
  BasisPtr basis = make_basis(pi.domain, std::move(degrees), std::move(labels));

  // (b, g) * (c, h) = lambda[g][h] (bc, gh) + mu[h][g] (cb, hg); the classical
  // grading of the base guarantees that the tagged pairs exist.
  auto tag = [&](const Vector& base_value, int g, Vector& out, const Scalar& weight) {
    for (const auto& [m, c] : base_value.coeffs())
      out.add_term(lifted.index_of_pair.at({m, g}), weight * c);
  };

  GradedAlgebra::ConstantsMap constants;
  const int total = static_cast<int>(lifted.pair_of_index.size());
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      const auto [b, g] = lifted.pair_of_index[i];
      const auto [c, h] = lifted.pair_of_index[j];
      Vector v(basis);
      tag(a->product(b, c), big.mul(g, h), v, d.lambda[g][h]);
      tag(a->product(c, b), big.mul(h, g), v, d.mu[h][g]);
      if (!v.is_zero()) constants.emplace(std::make_pair(i, j), std::move(v));
    }
  lifted.algebra =
      std::make_shared<GradedAlgebra>(std::move(basis), std::move(constants), a->name() + ".lifted");
  return lifted;
}

namespace {

AlgebraPtr shared(GradedAlgebra&& a) {
  return std::make_shared<GradedAlgebra>(std::move(a));
}

}  // namespace

GradedAlgebraHom restrict_hom(const GradedAlgebraHom& f, const GroupHom& theta) {
  const Retention rs = retained_along(*f.source, theta);
  const Retention rt = retained_along(*f.target, theta);
  GradedAlgebraHom out;
  out.source = shared(restrict_algebra(*f.source, theta));
  out.target = shared(restrict_algebra(*f.target, theta));
  for (int i : rs.kept) {
    Vector img(out.target->basis_ptr());
    for (const auto& [k, c] : f.images[i].coeffs()) {
      if (rt.new_index[k] < 0)
        throw Error("NotClosed", "hom image leaves the retained fibers at index " +
                                     std::to_string(k));
      img.set_coeff(rt.new_index[k], c);
    }
    out.images.push_back(std::move(img));
  }
  return out;
}

namespace {

GradedAlgebraHom rehoused_hom(AlgebraPtr source, AlgebraPtr target,
                              const std::vector<Vector>& images) {
  GradedAlgebraHom out;
  out.source = std::move(source);
  out.target = std::move(target);
  for (const auto& v : images) {
    Vector img(out.target->basis_ptr());
    for (const auto& [k, c] : v.coeffs()) img.set_coeff(k, c);
    out.images.push_back(std::move(img));
  }
  return out;
}

}  // namespace

GradedAlgebraHom induce_hom(const GradedAlgebraHom& f, const GroupHom& theta) {
  return rehoused_hom(shared(induce_algebra(*f.source, theta)),
                      shared(induce_algebra(*f.target, theta)), f.images);
}

GradedAlgebraHom coarsen_hom(const GradedAlgebraHom& f, const GroupHom& pi) {
  return rehoused_hom(shared(coarsen_algebra(*f.source, pi)),
                      shared(coarsen_algebra(*f.target, pi)), f.images);
}

GradedAlgebraHom lift_hom(const GradedAlgebraHom& f, const GroupHom& pi,
                          const DeformationData& d) {
  const LiftedAlgebra ls = group_ring_lift(f.source, pi, d);
  const LiftedAlgebra lt = group_ring_lift(f.target, pi, d);
  GradedAlgebraHom out;
  out.source = ls.algebra;
  out.target = lt.algebra;
  for (const auto& [b, g] : ls.pair_of_index) {
    Vector img(lt.algebra->basis_ptr());
    for (const auto& [m, c] : f.images[b].coeffs()) {
      auto it = lt.index_of_pair.find({m, g});
      if (it == lt.index_of_pair.end())
        throw Error("InvalidHom", "hom is not graded over the quotient; cannot lift");
      img.set_coeff(it->second, c);
    }
    out.images.push_back(std::move(img));
  }
  return out;
}

GradedAlgebraHom phi_transpose(const AlgebraPtr& a, const AlgebraPtr& b,
                               const GroupHom& theta, const GradedAlgebraHom& f) {
  GradedAlgebraHom out;
  out.source = a;
  out.target = shared(restrict_algebra(*b, theta));
  const Retention rb = retained_along(*b, theta);
  for (int i = 0; i < a->dim(); ++i) {
    Vector img(out.target->basis_ptr());
    for (const auto& [k, c] : f.images[i].coeffs()) {
      if (rb.new_index[k] < 0)
        throw Error("InvalidHom", "image support outside the restricted fibers");
      img.set_coeff(rb.new_index[k], c);
    }
    out.images.push_back(std::move(img));
  }
  return out;
}

GradedAlgebraHom phi_transpose_inverse(const AlgebraPtr& a, const AlgebraPtr& b,
                                       const GroupHom& theta, const GradedAlgebraHom& f_h) {
  const Retention rb = retained_along(*b, theta);
  GradedAlgebraHom out;
  out.source = shared(induce_algebra(*a, theta));
  out.target = b;
  for (int i = 0; i < a->dim(); ++i) {
    Vector img(b->basis_ptr());
    for (const auto& [k, c] : f_h.images[i].coeffs()) img.set_coeff(rb.kept[k], c);
    out.images.push_back(std::move(img));
  }
  return out;
}

AdjunctionReport adjunction_phi_roundtrip(const AlgebraPtr& a, const AlgebraPtr& b,
                                          const GroupHom& theta, const GradedAlgebraHom& f,
                                          const std::optional<NaturalitySample>& sample) {
  require_mono(theta);
  AdjunctionReport report;

  const AlgebraPtr induced = shared(induce_algebra(*a, theta));
  if (!f.source->basis().same_as(induced->basis()) ||
      !f.target->basis().same_as(b->basis()))
    throw Error("InvalidHom", "hom endpoints do not match induce(a) -> b");
  const HomReport fr = validate_hom(f);
  if (!fr.valid()) {
    report.hom_valid = false;
    report.witnesses.push_back("input hom fails validation");
    return report;
  }

  const GradedAlgebraHom transposed = phi_transpose(a, b, theta, f);
  const HomReport tr = validate_hom(transposed);
  if (!tr.valid()) {
    report.transposed_valid = false;
    report.witnesses.push_back("transpose fails validation");
  }

  const GradedAlgebraHom back = phi_transpose_inverse(a, b, theta, transposed);
  if (!same_hom(back, f)) {
    report.roundtrip_exact = false;
    report.witnesses.push_back("transpose round-trip is not the identity");
  }

  if (sample) {
    if (!validate_hom(sample->p).valid() || !validate_hom(sample->q).valid())
      throw Error("InvalidHom", "naturality sample morphisms fail validation");
    // One path: transpose of q . f . induce(p); other: restrict(q) . transpose . p.
    const GradedAlgebraHom eps = compose(compose(sample->q, f), induce_hom(sample->p, theta));
    const GradedAlgebraHom path1 =
        phi_transpose(sample->p.source, sample->q.target, theta, eps);
    const GradedAlgebraHom path2 =
        compose(compose(restrict_hom(sample->q, theta), transposed), sample->p);
    report.naturality = same_hom(path1, path2);
    if (!*report.naturality)
      report.witnesses.push_back("naturality square does not commute");
  }
  return report;
}

GradedAlgebraHom psi_transpose(const AlgebraPtr& a, const LiftedAlgebra& lifted_b,
                               const GroupHom& pi, const GradedAlgebraHom& f) {
  GradedAlgebraHom out;
  out.source = a;
  out.target = lifted_b.algebra;
  for (int i = 0; i < a->dim(); ++i) {
    const int g = a->basis().degree(i);
    Vector img(lifted_b.algebra->basis_ptr());
    for (const auto& [m, c] : f.images[i].coeffs()) {
      auto it = lifted_b.index_of_pair.find({m, g});
      if (it == lifted_b.index_of_pair.end())
        throw Error("InvalidHom", "image support incompatible with the quotient grading");
      img.set_coeff(it->second, c);
    }
    out.images.push_back(std::move(img));
  }
  return out;
}

GradedAlgebraHom psi_transpose_inverse(const AlgebraPtr& a, const AlgebraPtr& b,
                                       const LiftedAlgebra& lifted_b, const GroupHom& pi,
                                       const GradedAlgebraHom& g) {
  GradedAlgebraHom out;
  out.source = shared(coarsen_algebra(*a, pi));
  out.target = b;
  for (int i = 0; i < a->dim(); ++i) {
    const int deg = a->basis().degree(i);
    Vector img(b->basis_ptr());
    for (const auto& [k, c] : g.images[i].coeffs()) {
      const auto [m, tag] = lifted_b.pair_of_index[k];
      if (tag != deg)
        throw Error("InvalidHom", "image carries a tag of the wrong degree");
      img.set_coeff(m, c);
    }
    out.images.push_back(std::move(img));
  }
  return out;
}

AdjunctionReport adjunction_psi_roundtrip(const AlgebraPtr& a, const AlgebraPtr& b,
                                          const GroupHom& pi, const DeformationData& d,
                                          const GradedAlgebraHom& f,
                                          const std::optional<NaturalitySample>& sample) {
  require_epi(pi);
  AdjunctionReport report;

  const AlgebraPtr coarsened = shared(coarsen_algebra(*a, pi));
  if (!f.source->basis().same_as(coarsened->basis()) ||
      !f.target->basis().same_as(b->basis()))
    throw Error("InvalidHom", "hom endpoints do not match coarsen(a) -> b");
  const HomReport fr = validate_hom(f);
  if (!fr.valid()) {
    report.hom_valid = false;
    report.witnesses.push_back("input hom fails validation");
    return report;
  }

  const LiftedAlgebra lifted = group_ring_lift(b, pi, d);
  const GradedAlgebraHom transposed = psi_transpose(a, lifted, pi, f);

  // The transpose must respect the deformed products on both sides; the lift
  // already carries its deformed product, the source is deformed here.
  GradedAlgebraHom deformed_transpose;
  deformed_transpose.source = shared(deform(*a, d));
  deformed_transpose.target = lifted.algebra;
  deformed_transpose.images = transposed.images;
  const HomReport tr = validate_hom(deformed_transpose);
  if (!tr.valid()) {
    report.transposed_valid = false;
    report.witnesses.push_back("transpose fails validation for the deformed products");
  }

  const GradedAlgebraHom back = psi_transpose_inverse(a, b, lifted, pi, transposed);
  if (!same_hom(back, f)) {
    report.roundtrip_exact = false;
    report.witnesses.push_back("transpose round-trip is not the identity");
  }

  if (sample) {
    if (!validate_hom(sample->p).valid() || !validate_hom(sample->q).valid())
      throw Error("InvalidHom", "naturality sample morphisms fail validation");
    const GradedAlgebraHom eps = compose(compose(sample->q, f), coarsen_hom(sample->p, pi));
    const LiftedAlgebra lifted_bp = group_ring_lift(sample->q.target, pi, d);
    const GradedAlgebraHom path1 = psi_transpose(sample->p.source, lifted_bp, pi, eps);
    const GradedAlgebraHom path2 =
        compose(compose(lift_hom(sample->q, pi, d), transposed), sample->p);
    report.naturality = same_hom(path1, path2);
    if (!*report.naturality)
      report.witnesses.push_back("naturality square does not commute");
  }
  return report;
}

}  // namespace gradekit
