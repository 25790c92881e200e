#pragma once

// Exact rational scalars. All arithmetic in the library is exact; no
// floating point anywhere.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcusp {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_nonneg_integer(const Rat& r) { return is_integer(r) && sgn(r) >= 0; }

inline bool is_pos_integer(const Rat& r) { return is_integer(r) && sgn(r) > 0; }

// Integer value of an exact-integer rational. Throws if not integral or
// out of long range.
inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("to_long: not an integer: " + r.get_str());
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("to_long: out of range");
  return r.get_num().get_si();
}

// Canonical text form: "p" or "p/q" with q > 0.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Strict parser for "p" / "-p" / "p/q". No floats, no whitespace.
inline std::optional<Rat> parse_rat(const std::string& raw) {
  if (raw.empty()) return std::nullopt;
  const std::string s = raw[0] == '+' ? raw.substr(1) : raw;  // mpq rejects a leading plus
  if (s.empty()) return std::nullopt;
  auto digits = [&](std::size_t from) {
    std::size_t k = from;
    while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
    return k;
  };
  std::size_t i = (s[0] == '-') ? 1 : 0;
  std::size_t num_end = digits(i);
  if (num_end == i) return std::nullopt;
  if (num_end != s.size()) {
    if (s[num_end] != '/') return std::nullopt;
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != s.size()) return std::nullopt;
  }
  Rat r(s, 10);
  if (r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

// Comma-separated rational list, e.g. "1,0,-3/2".
inline std::optional<std::vector<Rat>> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string piece = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto r = parse_rat(piece);
    if (!r) return std::nullopt;
    out.push_back(*r);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace wcusp
