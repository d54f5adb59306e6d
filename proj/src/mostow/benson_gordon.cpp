#include "rhom/mostow/benson_gordon.hpp"

namespace rhom::mostow::bg {

const std::vector<std::vector<std::string>>& listed_labels() {
  static const std::vector<std::vector<std::string>> labels{
      {"1"},
      {"[x1]", "[y1]", "[x2]", "[y2]"},
      {"[x1z1]", "[y1z1]", "[x1][x2]", "[x1][y2]", "[y1][x2]", "[y1][y2]", "[x2z2]", "[y2z2]"},
      {"[x1z1][y1]", "[x1z1][x2]", "[x1z1][y2]", "[y1z1][x2]", "[x2z2][x1]", "[x2z2][y1]", "[x2z2][y2]",
       "[y2z2][x1]", "[y2z2][y1]", "[y1z1][y2]"},
      {"[x1y1z1][x2]", "[x1y1z1][y2]", "[x2y2z2][x1]", "[x2y2z2][y1]", "[x1z1][x2z2]", "[x1z1][y2z2]",
       "[y1z1][x2z2]", "[y1z1][y2z2]"},
      {"[x1y1z1][x2z2]", "[x1y1z1][y2z2]", "[x2y2z2][x1z1]", "[x2y2z2][y1z1]"},
      {"[x1y1z1][x2y2z2]"},
  };
  return labels;
}

OrderedBasis listed_basis(const gca::AlgebraPtr& a) {
  const auto& l = listed_labels();
  OrderedBasis out(8);
  for (int k = 0; k <= 7; ++k) {
    auto& deg = out[static_cast<std::size_t>(k)];
    if (k < static_cast<int>(l.size()))
      for (const auto& s : l[static_cast<std::size_t>(k)]) deg.push_back({s, parse_class_label(a, s)});
    if (k >= 1)
      for (const auto& s : l[static_cast<std::size_t>(k - 1)]) {
        std::string lab = s == "1" ? "[t]" : "[t]" + s;
        deg.push_back({lab, parse_class_label(a, lab)});
      }
  }
  return out;
}

std::vector<StarListEntry> star_entries(const gca::AlgebraPtr& a) {
  std::vector<StarListEntry> out;
  for (const char* s : {"[x1z1]", "[x1x2]", "[y1y2]", "[x2z2]", "[y1z1][y2z2]", "[x1y1z1][y2]", "[y1][x2y2z2]"})
    out.push_back({s, parse_class_label(a, s)});
  return out;
}

const std::vector<std::pair<std::string, std::string>>& u_generators() {
  static const std::vector<std::pair<std::string, std::string>> gens{
      {"b", "[t]"},           {"u1", "[x1z1]"},       {"u2", "[x2z2]"},       {"u3", "[x1x2]"},
      {"u4", "[y1y2]"},       {"v1", "[y1z1][y2z2]"}, {"v2", "[x1y1z1][y2]"}, {"v3", "[y1][x2y2z2]"},
  };
  return gens;
}

const std::vector<std::pair<std::string, std::string>>& claimed_relations() {
  static const std::vector<std::pair<std::string, std::string>> rels{
      {"u1", "u1"}, {"u2", "u2"}, {"u3", "u3"}, {"u4", "u4"}, {"u1", "u3"}, {"u2", "u3"}, {"u3", "u4"},
      {"u1", "v1"}, {"u1", "v2"}, {"u2", "v1"}, {"u3", "v2"}, {"u3", "v3"}, {"u4", "v1"}, {"u4", "v2"},
      {"u4", "v3"}, {"v1", "v1"}, {"v1", "v2"}, {"v1", "v3"}, {"v2", "v2"}, {"v2", "v3"}, {"v3", "v3"},
  };
  return rels;
}

}  // namespace rhom::mostow::bg
