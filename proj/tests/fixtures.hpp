#pragma once

#include <random>
#include <vector>

#include "gradekit/algebra.hpp"
#include "gradekit/functors.hpp"
#include "gradekit/group.hpp"
#include "gradekit/lie.hpp"

// Shared fixture builders. Group tables are produced from first principles
// (permutation composition, rotation/reflection arithmetic) so they act as
// independent oracles for the JSON fixtures and for everything built on top.
namespace fixtures {

using namespace gradekit;

/// Cayley table of the cyclic group of the given order.
std::vector<std::vector<int>> cyclic_table(int order);

/// All six permutations of three points in lexicographic one-line order,
/// composed right to left: index 0 is the identity.
std::vector<std::vector<int>> symmetric3_table();

/// Dihedral group of order 2n: indices below n are rotations, the rest
/// reflections.
std::vector<std::vector<int>> dihedral_table(int n);

GroupPtr trivial_group();
GroupPtr c2();
GroupPtr c3();
GroupPtr s3();
GroupPtr d4();

/// Labels e, (23), (12), (123), (132), (13) matching symmetric3_table().
std::vector<std::string> s3_labels();

/// The group algebra: one basis element per group element, graded by itself.
AlgebraPtr group_algebra(const GroupPtr& g, std::vector<std::string> labels = {});

/// Sparse random structure constants with numerators drawn from {-2..2}.
/// When `respect_classical` is set, the product of fibers g and h is placed
/// inside the gh fiber, so the classical grading holds by construction.
AlgebraPtr random_algebra(const GroupPtr& g, std::mt19937_64& rng, bool respect_classical);

/// A random deformation with the unit-preserving boundary conditions; applied
/// to a group algebra it yields a unital noncommutatively graded algebra.
DeformationData random_unit_preserving_deformation(const GroupPtr& g, std::mt19937_64& rng);

/// Brackets [x1,x2] = x3 (and antisymmetric mirror), everything else zero;
/// trivially graded.
LiePtr heisenberg();

/// Two commuting generators graded by the two transpositions (12) and (13)
/// of the symmetric group fixture.
LiePtr abelian_rank2_s3();

/// Abelian Lie algebra of the given rank over the trivial group.
LiePtr abelian(int rank);

}  // namespace fixtures
