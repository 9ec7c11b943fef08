#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpl/lie.hpp"

namespace lpl {

/// Parses a model file:
///   {"name": "...", "dim": n, "basis": [labels],
///    "brackets": [{"i": 0, "j": 1, "terms": [{"k": 2, "coefficient": "-1"}]}]}
/// Indices are 0-based with i < j. Rationals are strings `p` or `p/q`.
/// When `validate` is set a Jacobi failure is an InputError naming the triple.
LieAlgebra parse_model(std::string_view text, bool validate = true);
LieAlgebra load_model(const std::filesystem::path& path, bool validate = true);

/// Inverse of parse_model; brackets in (i, j) order, terms in k order.
std::string serialize_model(const LieAlgebra& g);

struct ProblemFile {
  LieAlgebra model;
  std::vector<Vector> h_basis;
  Vector lambda;
  std::optional<std::vector<Vector>> r_basis;
  std::optional<std::vector<Vector>> k_basis;
  std::optional<std::vector<Vector>> p_basis;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> polynomials;
  std::vector<Vector> extra_points;
};

/// Parses a problem file. "model" is either an inline model object or a path
/// resolved against `base_dir`; `model_override` replaces it entirely.
ProblemFile parse_problem(std::string_view text, const std::filesystem::path& base_dir,
                          const std::optional<LieAlgebra>& model_override = std::nullopt,
                          bool validate = true);

std::string read_file(const std::filesystem::path& path);

}  // namespace lpl
