#pragma once

#include "rhom/liealg/lie_algebra.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace rhom::cli {

using Json = nlohmann::ordered_json;

/// A Lie algebra file: {name, basis, brackets: [{i, j, terms: [{k, c}]}]}
/// with c a rational string. An optional "s_element" names the splitting
/// element by basis name.
struct LieAlgebraFile {
  liealg::LieAlgebra algebra;
  std::optional<std::string> s_element;
};

/// Omitted brackets are zero; a record for (i, j) without one for (j, i)
/// also sets [e_j, e_i] = -[e_i, e_j]. Throws ParseError naming the record,
/// or ValidationError with the antisymmetry/Jacobi report.
LieAlgebraFile parse_lie_file(const std::string& text, const std::string& source = "<input>");
LieAlgebraFile load_file(const std::string& path);
liealg::LieAlgebra load(const std::string& path);

/// Brackets with i < j only, nonzero terms only.
Json to_json(const liealg::LieAlgebra& g, const std::optional<std::string>& s_element = std::nullopt);
std::string emit_lie_file(const liealg::LieAlgebra& g, const std::optional<std::string>& s_element = std::nullopt);

Json rational_json(const Rational& x);
/// Exponent -> coefficient, both as strings.
Json laurent_json(const Laurent& x);

}  // namespace rhom::cli
