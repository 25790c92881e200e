#pragma once

// Matrix-unit generators e_{ij} of gl_m and their structure constants.
//
// Generators carry a fixed total order used for PBW normal forms:
// lowering (i > j) < diagonal (i == j) < raising (i < j), and (i, j)
// lexicographic within each class. Words sorted non-decreasingly in this
// order are normal monomials; lowering factors then act first on highest
// weight vectors read right-to-left.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wcusp {

using GenCode = std::uint16_t;

inline int gen_class(int i, int j) { return i > j ? 0 : (i == j ? 1 : 2); }

inline GenCode gen_code(int m, int i, int j) {
  if (i < 1 || i > m || j < 1 || j > m) throw std::invalid_argument("gen_code: index out of range");
  return static_cast<GenCode>(gen_class(i, j) * m * m + (i - 1) * m + (j - 1));
}

inline std::pair<int, int> gen_rowcol(int m, GenCode c) {
  int t = c % (m * m);
  return {t / m + 1, t % m + 1};
}

inline std::string gen_str(int m, GenCode c) {
  auto [i, j] = gen_rowcol(m, c);
  return "e[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

// [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb; at most two terms.
struct BracketTerm {
  GenCode gen;
  int sign;  // +1 or -1
};

inline std::vector<BracketTerm> gl_bracket(int m, GenCode x, GenCode y) {
  auto [a, b] = gen_rowcol(m, x);
  auto [c, d] = gen_rowcol(m, y);
  std::vector<BracketTerm> out;
  if (b == c) out.push_back({gen_code(m, a, d), +1});
  if (d == a) out.push_back({gen_code(m, c, b), -1});
  // e_ad == e_cb happens only when x == y; bracket is then zero.
  if (out.size() == 2 && out[0].gen == out[1].gen) out.clear();
  return out;
}

inline std::vector<GenCode> all_generators(int m) {
  std::vector<GenCode> v;
  v.reserve(static_cast<std::size_t>(m) * m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) v.push_back(gen_code(m, i, j));
  return v;
}

}  // namespace wcusp
