#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradekit/algebra.hpp"
#include "gradekit/functors.hpp"
#include "gradekit/group.hpp"
#include "gradekit/lie.hpp"

namespace gradekit::io {

using json = nlohmann::ordered_json;

// In-memory (de)serialization. Emission is canonical: stable key order,
// sparse entries sorted by index, so equal objects produce identical text.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);
json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j, const BasisPtr& basis);
json group_to_json(const GroupTable& g);
GroupPtr group_from_json(const json& j);
json algebra_to_json(const GradedAlgebra& a);
json lie_to_json(const GradedLieAlgebra& l);
json deformation_to_json(const DeformationData& d);

// File loaders. Relative references inside a file resolve against the file's
// directory. Parse problems raise ParseError, constructor failures are
// rethrown as ValidationError with the file and json path attached.
GroupPtr load_group(const std::string& path);
AlgebraPtr load_algebra(const std::string& path);
LiePtr load_lie(const std::string& path);
GroupHom load_group_hom(const std::string& path);
NormalSubgroup load_subgroup(const std::string& path, GroupPtr parent);
DeformationData load_deformation(const std::string& path);
GradedAlgebraHom load_algebra_hom(const std::string& path);
InverseDiagram load_diagram(const std::string& path);

std::string dump(const json& j);
void save_json(const json& j, const std::string& path);
/// Raw JSON of a file; ParseError on malformed input.
json load_raw(const std::string& path);

/// Named definition files plus run defaults; the user-facing configuration.
struct WorkspaceConfig {
  std::map<std::string, std::string> paths;
  int depth = 3;
  std::string output_format = "text";
  long seed = 0;
};

WorkspaceConfig load_workspace(const std::string& path);

/// Eagerly loads and validates every self-contained definition in the
/// workspace, classified by schema shape.
struct ParsedWorkspace {
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, LiePtr> lies;
  std::map<std::string, GroupHom> group_homs;
  std::map<std::string, DeformationData> deformations;
};

ParsedWorkspace parse_definitions(const WorkspaceConfig& config);

}  // namespace gradekit::io
