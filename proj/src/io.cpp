#include "gradekit/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gradekit/error.hpp"

namespace gradekit::io {

namespace fs = std::filesystem;

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ParseError", path + ": cannot open file");
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", path + ": " + e.what());
  }
  return j;
}

std::string resolve(const std::string& base_file, const std::string& ref) {
  const fs::path p(ref);
  if (p.is_absolute()) return ref;
  return (fs::path(base_file).parent_path() / p).string();
}

const json& field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw Error("ParseError", where + ": missing field '" + key + "'");
  return *it;
}

[[noreturn]] void rethrow_in(const Error& e, const std::string& path) {
  if (e.code() == "ParseError") throw Error("ParseError", path + ": " + e.what());
  throw Error("ValidationError", path + ": " + e.what());
}

}  // namespace

json scalar_to_json(const Scalar& s) {
  return json{{"num", s.num_str()}, {"den", s.den_str()}};
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_object()) throw Error("ParseError", "scalar must be an object");
  return Scalar(field(j, "num", "scalar").get<std::string>(),
                field(j, "den", "scalar").get<std::string>());
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& [i, c] : v.coeffs())
    out.push_back(json{{"basis", i}, {"num", c.num_str()}, {"den", c.den_str()}});
  return out;
}

Vector vector_from_json(const json& j, const BasisPtr& basis) {
  if (!j.is_array()) throw Error("ParseError", "sparse vector must be an array");
  Vector v(basis);
  for (const auto& entry : j) {
    const int index = field(entry, "basis", "vector entry").get<int>();
    v.add_term(index, Scalar(field(entry, "num", "vector entry").get<std::string>(),
                             field(entry, "den", "vector entry").get<std::string>()));
  }
  return v;
}

json group_to_json(const GroupTable& g) {
  return json{{"name", g.name}, {"order", g.order}, {"identity", g.identity},
              {"table", g.table}};
}

GroupPtr group_from_json(const json& j) {
  auto table = field(j, "table", "group").get<std::vector<std::vector<int>>>();
  std::string name = j.value("name", std::string{});
  GroupPtr g = build_group(std::move(table), std::move(name));
  if (j.contains("order") && j["order"].get<int>() != g->order)
    throw Error("ParseError", "declared order does not match the table");
  if (j.contains("identity") && j["identity"].get<int>() != g->identity)
    throw Error("ParseError", "declared identity does not match the table");
  return g;
}

namespace {

BasisPtr basis_from_json(const json& j, const GroupPtr& group) {
  std::vector<int> degrees;
  std::vector<std::string> labels;
  for (const auto& e : field(j, "basis", "algebra")) {
    degrees.push_back(field(e, "degree", "basis entry").get<int>());
    labels.push_back(e.value("label", std::string{}));
  }
  return make_basis(group, std::move(degrees), std::move(labels));
}

json basis_to_json(const GradedBasis& basis) {
  json out = json::array();
  for (int i = 0; i < basis.size(); ++i)
    out.push_back(json{{"label", basis.label(i)}, {"degree", basis.degree(i)}});
  return out;
}

json pairs_to_json(const std::map<std::pair<int, int>, Vector>& table) {
  json out = json::array();
  for (const auto& [key, value] : table)
    out.push_back(json{{"left", key.first},
                       {"right", key.second},
                       {"value", vector_to_json(value)}});
  return out;
}

std::map<std::pair<int, int>, Vector> pairs_from_json(const json& j, const BasisPtr& basis,
                                                      const char* key) {
  std::map<std::pair<int, int>, Vector> out;
  for (const auto& e : j[key]) {
    const int left = field(e, "left", key).get<int>();
    const int right = field(e, "right", key).get<int>();
    out.insert_or_assign({left, right},
                         vector_from_json(field(e, "value", key), basis));
  }
  return out;
}

GroupPtr group_field(const json& j, const std::string& path) {
  const json& g = field(j, "group", "definition");
  if (g.is_string()) return load_group(resolve(path, g.get<std::string>()));
  return group_from_json(g);
}

}  // namespace

json algebra_to_json(const GradedAlgebra& a) {
  return json{{"group", group_to_json(*a.basis().group)},
              {"basis", basis_to_json(a.basis())},
              {"products", pairs_to_json(a.constants())}};
}

json lie_to_json(const GradedLieAlgebra& l) {
  return json{{"group", group_to_json(*l.basis().group)},
              {"basis", basis_to_json(l.basis())},
              {"brackets", pairs_to_json(l.brackets())}};
}

json deformation_to_json(const DeformationData& d) {
  auto table = [](const std::vector<std::vector<Scalar>>& t) {
    json rows = json::array();
    for (const auto& row : t) {
      json cells = json::array();
      for (const auto& c : row) cells.push_back(scalar_to_json(c));
      rows.push_back(std::move(cells));
    }
    return rows;
  };
  return json{{"group", group_to_json(*d.group)},
              {"lambda", table(d.lambda)},
              {"mu", table(d.mu)}};
}

GroupPtr load_group(const std::string& path) {
  const json j = parse_file(path);
  try {
    return group_from_json(j);
  } catch (const Error& e) {
    rethrow_in(e, path);
  }
}

AlgebraPtr load_algebra(const std::string& path) {
  const json j = parse_file(path);
  try {
    const GroupPtr group = group_field(j, path);
    const BasisPtr basis = basis_from_json(j, group);
    if (!j.contains("products")) throw Error("ParseError", "missing field 'products'");
    return std::make_shared<GradedAlgebra>(
        basis, pairs_from_json(j, basis, "products"),
        fs::path(path).stem().string());
  } catch (const Error& e) {
    rethrow_in(e, path);
  }
}

LiePtr load_lie(const std::string& path) {
  const json j = parse_file(path);
  try {
    const GroupPtr group = group_field(j, path);
    const BasisPtr basis = basis_from_json(j, group);
    if (!j.contains("brackets")) throw Error("ParseError", "missing field 'brackets'");
    return std::make_shared<GradedLieAlgebra>(
        basis, pairs_from_json(j, basis, "brackets"),
        fs::path(path).stem().string());
  } catch (const Error& e) {
    rethrow_in(e, path);
  }
}

GroupHom load_group_hom(const std::string& path) {
  const json j = parse_file(path);
  try {
    GroupPtr domain = load_group(resolve(path, field(j, "domain", "hom").get<std::string>()));
    GroupPtr codomain =
        load_group(resolve(path, field(j, "codomain", "hom").get<std::string>()));
    return build_hom(std::move(domain), std::move(codomain),
                     field(j, "images", "hom").get<std::vector<int>>());
  } catch (const Error& e) {
    rethrow_in(e, path);
  }
}

NormalSubgroup load_subgroup(const std::string& path, GroupPtr parent) {
  const json j = parse_file(path);
  try {
    return build_normal_subgroup(std::move(parent),
                                 field(j, "members", "subgroup").get<std::vector<int>>());
  } catch (const Error& e) {
    rethrow_in(e, path);
  }
}

DeformationData load_deformation(const std::string& path) {
  const json j = parse_file(path);
  try {
    const GroupPtr group = group_field(j, path);
    auto table = [&](const char* key) {
      std::vector<std::vector<Scalar>> out;
      for (const auto& row : field(j, key, "deformation")) {
        std::vector<Scalar> cells;
        for (const auto& cell : row) cells.push_back(scalar_from_json(cell));
        out.push_back(std::move(cells));
      }
      return out;
    };
    return make_deformation(group, table("lambda"), table("mu"));
  } catch (const Error& e) {
    rethrow_in(e, path);
  }
}

GradedAlgebraHom load_algebra_hom(const std::string& path) {
  const json j = parse_file(path);
  try {
    GradedAlgebraHom f;
    f.source = load_algebra(resolve(path, field(j, "source", "hom").get<std::string>()));
    f.target = load_algebra(resolve(path, field(j, "target", "hom").get<std::string>()));
    for (const auto& img : field(j, "images", "hom"))
      f.images.push_back(vector_from_json(img, f.target->basis_ptr()));
    if (static_cast<int>(f.images.size()) != f.source->dim())
      throw Error("ParseError", "hom image count does not match the source dimension");
    return f;
  } catch (const Error& e) {
    rethrow_in(e, path);
  }
}

InverseDiagram load_diagram(const std::string& path) {
  const json j = parse_file(path);
  try {
    InverseDiagram d;
    for (const auto& ref : field(j, "algebras", "diagram"))
      d.objects.push_back(load_algebra(resolve(path, ref.get<std::string>())));
    for (const auto& rel : field(j, "relations", "diagram")) {
      InverseDiagram::Relation r;
      r.alpha = field(rel, "alpha", "relation").get<int>();
      r.beta = field(rel, "beta", "relation").get<int>();
      if (r.alpha < 0 || r.alpha >= static_cast<int>(d.objects.size()) || r.beta < 0 ||
          r.beta >= static_cast<int>(d.objects.size()))
        throw Error("ParseError", "relation index out of range");
      r.map.source = d.objects[r.beta];
      r.map.target = d.objects[r.alpha];
      for (const auto& img : field(rel, "images", "relation"))
        r.map.images.push_back(vector_from_json(img, r.map.target->basis_ptr()));
      if (static_cast<int>(r.map.images.size()) != r.map.source->dim())
        throw Error("ParseError", "relation image count does not match the source dimension");
      d.relations.push_back(std::move(r));
    }
    return d;
  } catch (const Error& e) {
    rethrow_in(e, path);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json load_raw(const std::string& path) { return parse_file(path); }

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("ValidationError", path + ": cannot open for writing");
  out << dump(j);
}

WorkspaceConfig load_workspace(const std::string& path) {
  const json j = parse_file(path);
  WorkspaceConfig cfg;
  try {
    if (j.contains("paths"))
      for (const auto& [name, file] : j["paths"].items())
        cfg.paths[name] = resolve(path, file.get<std::string>());
    cfg.depth = j.value("depth", 3);
    cfg.output_format = j.value("output_format", std::string{"text"});
    cfg.seed = j.value("seed", 0L);
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", path + ": " + e.what());
  }
  if (cfg.depth < 1) throw Error("ValidationError", path + ": depth must be >= 1");
  if (cfg.output_format != "text" && cfg.output_format != "json")
    throw Error("ValidationError", path + ": output_format must be text or json");
  for (const auto& [name, file] : cfg.paths)
    if (!fs::exists(file))
      throw Error("ValidationError", path + ": referenced file '" + file + "' (" + name +
                                         ") does not exist");
  return cfg;
}

ParsedWorkspace parse_definitions(const WorkspaceConfig& config) {
  ParsedWorkspace w;
  for (const auto& [name, file] : config.paths) {
    const json j = parse_file(file);
    if (j.contains("table") && !j.contains("basis")) {
      w.groups.emplace(name, load_group(file));
    } else if (j.contains("products")) {
      w.algebras.emplace(name, load_algebra(file));
    } else if (j.contains("brackets")) {
      w.lies.emplace(name, load_lie(file));
    } else if (j.contains("lambda")) {
      w.deformations.emplace(name, load_deformation(file));
    } else if (j.contains("domain") && j.contains("images")) {
      w.group_homs.emplace(name, load_group_hom(file));
    } else if (j.contains("members") || (j.contains("source") && j.contains("images")) ||
               j.contains("algebras")) {
      // Subgroups, algebra homs and diagrams need context to validate; they
      // are loaded by the command that uses them.
    } else {
      throw Error("ParseError", file + ": unrecognized definition shape");
    }
  }
  return w;
}

}  // namespace gradekit::io
