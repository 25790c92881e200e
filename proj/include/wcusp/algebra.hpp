#pragma once

// PBW engine for U(gl_m): elements are rational combinations of
// non-decreasing words in the matrix units, rewritten to normal form with
// the gl_m structure constants. Elements are immutable values; the only
// shared state is a thread-local rewrite cache, so concurrent use is safe.

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gl.hpp"
#include "rational.hpp"

namespace wcusp {

using Monomial = std::vector<GenCode>;  // sorted non-decreasing; empty = 1

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using TermMap = std::map<Monomial, Rat, MonoLess>;

inline bool is_normal_word(const Monomial& w) {
  return std::is_sorted(w.begin(), w.end());
}

namespace detail {

struct WordHash {
  std::size_t operator()(const std::vector<GenCode>& w) const {
    std::size_t h = 1469598103934665603ull;
    for (GenCode c : w) {
      h ^= static_cast<std::size_t>(c) + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline void add_term(TermMap& m, const Monomial& mono, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = m.find(mono);
  if (it == m.end()) {
    m.emplace(mono, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) m.erase(it);
  }
}

// Memoized rewriting of an arbitrary word to normal form. The cache key
// prefixes the word with the rank so ranks never collide.
inline const TermMap& normal_form_cached(int m, const std::vector<GenCode>& word) {
  thread_local std::unordered_map<std::vector<GenCode>, std::shared_ptr<const TermMap>, WordHash>
      cache;
  std::vector<GenCode> key;
  key.reserve(word.size() + 1);
  key.push_back(static_cast<GenCode>(m));
  key.insert(key.end(), word.begin(), word.end());
  if (auto it = cache.find(key); it != cache.end()) return *it->second;

  auto out = std::make_shared<TermMap>();
  std::size_t p = 0;
  bool sorted = true;
  for (std::size_t t = 0; t + 1 < word.size(); ++t) {
    if (word[t] > word[t + 1]) {
      p = t;
      sorted = false;
      break;
    }
  }
  if (sorted) {
    (*out)[word] = 1;
  } else {
    std::vector<GenCode> swapped = word;
    std::swap(swapped[p], swapped[p + 1]);
    for (const auto& [mono, c] : normal_form_cached(m, swapped)) add_term(*out, mono, c);
    for (const BracketTerm& bt : gl_bracket(m, word[p], word[p + 1])) {
      std::vector<GenCode> shorter;
      shorter.reserve(word.size() - 1);
      shorter.insert(shorter.end(), word.begin(), word.begin() + p);
      shorter.push_back(bt.gen);
      shorter.insert(shorter.end(), word.begin() + p + 2, word.end());
      for (const auto& [mono, c] : normal_form_cached(m, shorter))
        add_term(*out, mono, c * bt.sign);
    }
  }
  auto [it, inserted] = cache.emplace(std::move(key), std::move(out));
  (void)inserted;
  return *it->second;
}

}  // namespace detail

class AlgebraElement {
 public:
  AlgebraElement() : rank_(0) {}
  explicit AlgebraElement(int rank) : rank_(rank) {}

  static AlgebraElement zero(int rank) { return AlgebraElement(rank); }

  static AlgebraElement one(int rank) {
    AlgebraElement e(rank);
    e.terms_[Monomial{}] = 1;
    return e;
  }

  static AlgebraElement scalar(int rank, const Rat& c) {
    AlgebraElement e(rank);
    if (sgn(c) != 0) e.terms_[Monomial{}] = c;
    return e;
  }

  static AlgebraElement gen(int rank, int i, int j) {
    AlgebraElement e(rank);
    e.terms_[Monomial{gen_code(rank, i, j)}] = 1;
    return e;
  }

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [mono, c] : terms_) d = std::max<int>(d, static_cast<int>(mono.size()));
    return d;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_rank(o);
    for (const auto& [mono, c] : o.terms_) detail::add_term(terms_, mono, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_rank(o);
    for (const auto& [mono, c] : o.terms_) detail::add_term(terms_, mono, -c);
    return *this;
  }
  AlgebraElement& operator*=(const Rat& c) {
    if (sgn(c) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [mono, v] : terms_) v *= c;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rat& c) { return a *= c; }
  friend AlgebraElement operator*(const Rat& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rat(-1); }

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_rank(b);
    AlgebraElement out(a.rank_);
    std::vector<GenCode> word;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        word.clear();
        word.insert(word.end(), ma.begin(), ma.end());
        word.insert(word.end(), mb.begin(), mb.end());
        Rat c = ca * cb;
        for (const auto& [mono, k] : detail::normal_form_cached(a.rank_, word))
          detail::add_term(out.terms_, mono, c * k);
      }
    }
    return out;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  // Canonical text form: terms in monomial order, "coeff * e[i,j]*e[k,l]";
  // the identity monomial prints as the bare coefficient.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << rat_str(c);
      if (!mono.empty()) {
        os << " *";
        for (std::size_t t = 0; t < mono.size(); ++t)
          os << (t == 0 ? " " : "*") << gen_str(rank_, mono[t]);
      }
    }
    return os.str();
  }

 private:
  void check_rank(const AlgebraElement& o) const {
    if (rank_ != o.rank_)
      throw std::invalid_argument("AlgebraElement: rank mismatch (" + std::to_string(rank_) +
                                  " vs " + std::to_string(o.rank_) + ")");
  }

  int rank_;
  TermMap terms_;
};

// Normal form of an arbitrary word of generators (all of rank m).
inline AlgebraElement normal_order(int m, const std::vector<GenCode>& word) {
  AlgebraElement out = AlgebraElement::one(m);
  for (GenCode g : word) {
    auto [i, j] = gen_rowcol(m, g);
    out = out * AlgebraElement::gen(m, i, j);
  }
  return out;
}

inline AlgebraElement normal_order(int m, const std::vector<std::pair<int, int>>& word) {
  std::vector<GenCode> codes;
  codes.reserve(word.size());
  for (auto [i, j] : word) codes.push_back(gen_code(m, i, j));
  return normal_order(m, codes);
}

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return a * b - b * a;
}

}  // namespace wcusp
