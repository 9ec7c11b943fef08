#include "lpl/model_io.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "lpl/errors.hpp"

namespace lpl {

using nlohmann::json;

namespace {

Rational rational_from(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError(where + ": bad rational (expected a string \"p\" or \"p/q\")");
}

std::size_t index_from(const json& j, const std::string& where, std::size_t bound) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw InputError(where + ": expected a nonnegative integer index");
  }
  const auto v = j.get<unsigned long long>();
  if (v >= bound) {
    throw InputError(where + ": index " + std::to_string(v) + " out of range for dimension " +
                     std::to_string(bound));
  }
  return static_cast<std::size_t>(v);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing \"" + key + "\"");
  return *it;
}

Vector vector_from(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  if (j.size() != n) {
    throw InputError(where + ": expected length " + std::to_string(n) + ", got " +
                     std::to_string(j.size()));
  }
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational_from(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<Vector> vectors_from(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of vectors");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(vector_from(j[i], n, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

LieAlgebra model_from_json(const json& doc, bool validate) {
  if (!doc.is_object()) throw InputError("model: expected a JSON object");
  const std::string name = doc.contains("name") ? doc["name"].get<std::string>() : std::string();
  const json& dim_j = require(doc, "dim", "model");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 0) {
    throw InputError("model: \"dim\" must be a nonnegative integer");
  }
  const auto n = dim_j.get<std::size_t>();
  const json& basis = require(doc, "basis", "model");
  if (!basis.is_array() || basis.size() != n) {
    throw InputError("model: \"basis\" must list " + std::to_string(n) + " labels");
  }
  std::vector<std::string> labels;
  for (const auto& l : basis) {
    if (!l.is_string()) throw InputError("model: basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }

  std::vector<StructureConstant> cs;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const json& brackets = require(doc, "brackets", "model");
  if (!brackets.is_array()) throw InputError("model: \"brackets\" must be an array");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string where = "model.brackets[" + std::to_string(b) + "]";
    const json& entry = brackets[b];
    if (!entry.is_object()) throw InputError(where + ": expected an object");
    const std::size_t i = index_from(require(entry, "i", where), where + ".i", n);
    const std::size_t j = index_from(require(entry, "j", where), where + ".j", n);
    if (i >= j) throw InputError(where + ": requires i < j");
    if (!seen.emplace(i, j).second) {
      throw InputError(where + ": duplicate bracket for (" + std::to_string(i) + ", " +
                       std::to_string(j) + ")");
    }
    const json& terms = require(entry, "terms", where);
    if (!terms.is_array()) throw InputError(where + ".terms: expected an array");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tw = where + ".terms[" + std::to_string(t) + "]";
      const std::size_t k = index_from(require(terms[t], "k", tw), tw + ".k", n);
      cs.push_back({i, j, k, rational_from(require(terms[t], "coefficient", tw), tw + ".coefficient")});
    }
  }
  LieAlgebra g(name, std::move(labels), cs);
  if (validate) {
    const auto rep = validate_jacobi(g);
    if (!rep.ok) {
      const auto& t = *rep.triple;
      throw InputError("model '" + name + "' violates the Jacobi identity at triple (" +
                       std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
                       std::to_string(t[2]) + "), residual " + to_string(rep.residual));
    }
  }
  return g;
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LieAlgebra parse_model(std::string_view text, bool validate) {
  const json doc = parse_json(text, "model");
  try {
    return model_from_json(doc, validate);
  } catch (const json::exception& e) {
    throw InputError(std::string("model: ") + e.what());
  }
}

LieAlgebra load_model(const std::filesystem::path& path, bool validate) {
  return parse_model(read_file(path), validate);
}

std::string serialize_model(const LieAlgebra& g) {
  json doc;
  doc["name"] = g.name();
  doc["dim"] = g.dim();
  doc["basis"] = g.labels();
  json brackets = json::array();
  const auto cs = g.structure_constants();
  for (std::size_t a = 0; a < cs.size();) {
    json entry;
    entry["i"] = cs[a].i;
    entry["j"] = cs[a].j;
    json terms = json::array();
    std::size_t b = a;
    for (; b < cs.size() && cs[b].i == cs[a].i && cs[b].j == cs[a].j; ++b) {
      terms.push_back({{"k", cs[b].k}, {"coefficient", cs[b].value.str()}});
    }
    entry["terms"] = std::move(terms);
    brackets.push_back(std::move(entry));
    a = b;
  }
  doc["brackets"] = std::move(brackets);
  return doc.dump(2) + "\n";
}

ProblemFile parse_problem(std::string_view text, const std::filesystem::path& base_dir,
                          const std::optional<LieAlgebra>& model_override, bool validate) {
  const json doc = parse_json(text, "problem");
  if (!doc.is_object()) throw InputError("problem: expected a JSON object");
  try {
    ProblemFile pf;
    if (model_override) {
      pf.model = *model_override;
    } else {
      const json& m = require(doc, "model", "problem");
      if (m.is_string()) {
        std::filesystem::path p = m.get<std::string>();
        if (p.is_relative()) {
          const auto candidate = base_dir / p;
          if (std::filesystem::exists(candidate) || !std::filesystem::exists(p)) p = candidate;
        }
        pf.model = load_model(p, validate);
      } else {
        pf.model = model_from_json(m, validate);
      }
    }
    const std::size_t n = pf.model.dim();
    if (doc.contains("h_basis")) pf.h_basis = vectors_from(doc["h_basis"], n, "problem.h_basis");
    pf.lambda = doc.contains("lambda") ? vector_from(doc["lambda"], n, "problem.lambda") : Vector(n);
    if (doc.contains("R_basis")) pf.r_basis = vectors_from(doc["R_basis"], n, "problem.R_basis");
    if (doc.contains("k_basis")) pf.k_basis = vectors_from(doc["k_basis"], n, "problem.k_basis");
    if (doc.contains("p_basis")) pf.p_basis = vectors_from(doc["p_basis"], n, "problem.p_basis");
    if (pf.k_basis.has_value() != pf.p_basis.has_value()) {
      throw InputError("problem: k_basis and p_basis must be given together");
    }
    if (doc.contains("samples")) pf.samples = doc["samples"].get<std::size_t>();
    if (doc.contains("seed")) pf.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("polynomials")) pf.polynomials = doc["polynomials"].get<std::vector<std::string>>();
    if (doc.contains("extra_points")) {
      pf.extra_points = vectors_from(doc["extra_points"], n, "problem.extra_points");
    }
    return pf;
  } catch (const json::exception& e) {
    throw InputError(std::string("problem: ") + e.what());
  }
}

}  // namespace lpl
