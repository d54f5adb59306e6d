#include "rhom/cli/lie_file.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace rhom::cli {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw ParseError(source + ": " + where + ": " + what);
}

int index_field(const Json& rec, const char* key, int dim, const std::string& source, const std::string& where) {
  auto it = rec.find(key);
  if (it == rec.end()) fail(source, where, std::string("missing field '") + key + "'");
  if (!it->is_number_integer()) fail(source, where + "." + key, "expected an integer index");
  auto v = it->get<long long>();
  if (v < 0 || v >= dim) fail(source, where + "." + key, "index " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

LieAlgebraFile parse_lie_file(const std::string& text, const std::string& source) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  if (!doc.is_object()) fail(source, "document", "expected an object");
  if (!doc.contains("name") || !doc["name"].is_string()) fail(source, "name", "expected a string");
  if (!doc.contains("basis") || !doc["basis"].is_array() || doc["basis"].empty())
    fail(source, "basis", "expected a nonempty list of names");
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < doc["basis"].size(); ++i) {
    const auto& b = doc["basis"][i];
    if (!b.is_string() || b.get<std::string>().empty()) fail(source, "basis[" + std::to_string(i) + "]", "expected a name");
    basis.push_back(b.get<std::string>());
  }
  if (std::set<std::string>(basis.begin(), basis.end()).size() != basis.size())
    fail(source, "basis", "names must be unique");
  const int dim = static_cast<int>(basis.size());

  std::map<std::pair<int, int>, VectorQ> given;
  if (doc.contains("brackets")) {
    const auto& brackets = doc["brackets"];
    if (!brackets.is_array()) fail(source, "brackets", "expected a list");
    for (std::size_t r = 0; r < brackets.size(); ++r) {
      const std::string where = "brackets[" + std::to_string(r) + "]";
      const auto& rec = brackets[r];
      if (!rec.is_object()) fail(source, where, "expected an object");
      int i = index_field(rec, "i", dim, source, where);
      int j = index_field(rec, "j", dim, source, where);
      if (given.count({i, j})) fail(source, where, "duplicate record for (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!rec.contains("terms") || !rec["terms"].is_array()) fail(source, where + ".terms", "expected a list");
      VectorQ v = VectorQ::Zero(dim);
      std::set<int> seen;
      for (std::size_t t = 0; t < rec["terms"].size(); ++t) {
        const std::string tw = where + ".terms[" + std::to_string(t) + "]";
        const auto& term = rec["terms"][t];
        if (!term.is_object()) fail(source, tw, "expected an object");
        int k = index_field(term, "k", dim, source, tw);
        if (!seen.insert(k).second) fail(source, tw, "duplicate term for k = " + std::to_string(k));
        if (!term.contains("c") || !term["c"].is_string()) fail(source, tw + ".c", "expected a rational string");
        try {
          v(k) = parse_rational(term["c"].get<std::string>());
        } catch (const std::exception& e) {
          fail(source, tw + ".c", e.what());
        }
      }
      given.emplace(std::make_pair(i, j), std::move(v));
    }
  }

  LieAlgebraFile out{liealg::LieAlgebra(doc["name"].get<std::string>(), basis), std::nullopt};
  for (const auto& [ij, v] : given) out.algebra.set_bracket_raw(ij.first, ij.second, v);
  for (const auto& [ij, v] : given)
    if (ij.first != ij.second && !given.count({ij.second, ij.first})) out.algebra.set_bracket_raw(ij.second, ij.first, -v);

  if (doc.contains("s_element")) {
    if (!doc["s_element"].is_string()) fail(source, "s_element", "expected a basis name");
    auto s = doc["s_element"].get<std::string>();
    if (!out.algebra.index_of(s)) fail(source, "s_element", "'" + s + "' is not a basis name");
    out.s_element = s;
  }

  auto report = out.algebra.validate();
  if (!report.ok()) throw ValidationError(source + ": invalid Lie algebra " + out.algebra.name() + ":\n" + report.summary());
  return out;
}

LieAlgebraFile load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_lie_file(ss.str(), path);
}

liealg::LieAlgebra load(const std::string& path) { return load_file(path).algebra; }

Json to_json(const liealg::LieAlgebra& g, const std::optional<std::string>& s_element) {
  Json doc;
  doc["name"] = g.name();
  doc["basis"] = g.basis();
  if (s_element) doc["s_element"] = *s_element;
  Json brackets = Json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      const VectorQ& v = g.bracket(i, j);
      Json terms = Json::array();
      for (int k = 0; k < g.dim(); ++k)
        if (!is_zero(v(k))) terms.push_back(Json{{"k", k}, {"c", rhom::to_string(v(k))}});
      if (!terms.empty()) brackets.push_back(Json{{"i", i}, {"j", j}, {"terms", std::move(terms)}});
    }
  doc["brackets"] = std::move(brackets);
  return doc;
}

std::string emit_lie_file(const liealg::LieAlgebra& g, const std::optional<std::string>& s_element) {
  return to_json(g, s_element).dump(2) + "\n";
}

Json rational_json(const Rational& x) { return rhom::to_string(x); }

Json laurent_json(const Laurent& x) {
  Json out = Json::object();
  for (const auto& [e, c] : x.terms()) out[std::to_string(e)] = rhom::to_string(c);
  return out;
}

}  // namespace rhom::cli
