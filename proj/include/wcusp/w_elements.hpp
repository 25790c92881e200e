#pragma once

// Distinguished elements of U(gl_n): the images of the minimal-nilpotent
// W-algebra generators under the embeddings, and the inner automorphism
// sigma = exp(-ad X) with X = sum_{k<n} e_{kn}.

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "algebra.hpp"

namespace wcusp {

inline AlgebraElement identity_sum(int n) {  // I_n = sum e_tt
  AlgebraElement s(n);
  s = AlgebraElement::zero(n);
  for (int t = 1; t <= n; ++t) s += AlgebraElement::gen(n, t, t);
  return s;
}

inline AlgebraElement identity_sum_upto(int n, int top) {  // I_top inside gl_n
  AlgebraElement s = AlgebraElement::zero(n);
  for (int t = 1; t <= top; ++t) s += AlgebraElement::gen(n, t, t);
  return s;
}

// gamma_i = sum_j (e_ij e_jj - e_ij), the image of the k-th raising-type
// W generator omega_i under tau.
inline AlgebraElement gamma_elem(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("gamma_elem: index out of range");
  AlgebraElement s = AlgebraElement::zero(n);
  for (int j = 1; j <= n; ++j) {
    s += AlgebraElement::gen(n, i, j) * AlgebraElement::gen(n, j, j);
    s -= AlgebraElement::gen(n, i, j);
  }
  return s;
}

// tau: x_ij -> e_ij - e_ii (i != j), omega_i -> gamma_i.
inline AlgebraElement tau_x(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("tau_x: requires i != j");
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("tau_x: index out of range");
  return AlgebraElement::gen(n, i, j) - AlgebraElement::gen(n, i, i);
}

inline AlgebraElement tau_omega(int n, int i) { return gamma_elem(n, i); }

// y_k = e_kn (I_n - n) + sum_{j<n} e_kj e_jn, 1 <= k <= n.
inline AlgebraElement y_elem(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("y_elem: index out of range");
  AlgebraElement ekn = AlgebraElement::gen(n, k, n);
  AlgebraElement s = ekn * (identity_sum(n) - AlgebraElement::scalar(n, n));
  for (int j = 1; j <= n - 1; ++j)
    s += AlgebraElement::gen(n, k, j) * AlgebraElement::gen(n, j, n);
  return s;
}

inline AlgebraElement x_sum(int n) {  // X = sum_{k<n} e_{kn}
  AlgebraElement s = AlgebraElement::zero(n);
  for (int k = 1; k <= n - 1; ++k) s += AlgebraElement::gen(n, k, n);
  return s;
}

// sigma(a) = sum_k (-ad X)^k(a)/k!, a finite sum since ad X is locally
// nilpotent; `inverse` applies sigma^{-1}. The iteration cap only guards
// against structure-constant bugs: reaching it raises, never truncates.
inline AlgebraElement apply_sigma(const AlgebraElement& a, bool inverse = false) {
  const int n = a.rank();
  AlgebraElement X = x_sum(n);
  AlgebraElement acc = a;
  AlgebraElement cur = a;
  Rat factorial(1);
  const int bound = 2 * a.degree() * n + 2;
  for (int k = 1; !cur.is_zero(); ++k) {
    if (k > bound)
      throw std::runtime_error("apply_sigma: ad-power exceeded nilpotency bound " +
                               std::to_string(bound));
    cur = inverse ? commutator(X, cur) : commutator(cur, X);  // (-ad X)(u) = [u, X]
    factorial *= k;
    acc += cur * (Rat(1) / factorial);
  }
  return acc;
}

// Generators of the sigma-twisted image: e_ij (i,j < n), e_ni (i < n), y_k.
enum class WGenKind { E, En, Y };

struct WGen {
  WGenKind kind;
  int i = 0, j = 0;  // E: e_ij; En: e_ni (j unused); Y: y_i (j unused)

  std::string name() const {
    switch (kind) {
      case WGenKind::E:
        return "e[" + std::to_string(i) + "," + std::to_string(j) + "]";
      case WGenKind::En:
        return "e[n," + std::to_string(i) + "]";
      default:
        return "y[" + std::to_string(i) + "]";
    }
  }
  friend bool operator<(const WGen& a, const WGen& b) {
    return std::tie(a.kind, a.i, a.j) < std::tie(b.kind, b.i, b.j);
  }
  friend bool operator==(const WGen& a, const WGen& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j;
  }
};

inline AlgebraElement sigma_tau_generator(int n, const WGen& g) {
  switch (g.kind) {
    case WGenKind::E:
      if (g.i < 1 || g.i > n - 1 || g.j < 1 || g.j > n - 1)
        throw std::invalid_argument("sigma_tau_generator: e_ij index out of range");
      return AlgebraElement::gen(n, g.i, g.j);
    case WGenKind::En:
      if (g.i < 1 || g.i > n - 1)
        throw std::invalid_argument("sigma_tau_generator: e_ni index out of range");
      return AlgebraElement::gen(n, n, g.i);
    default:
      return y_elem(n, g.i);  // y_elem validates
  }
}

inline std::vector<WGen> w_generator_list(int n) {
  std::vector<WGen> gens;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) gens.push_back({WGenKind::E, i, j});
  for (int i = 1; i <= n - 1; ++i) gens.push_back({WGenKind::En, i});
  for (int k = 1; k <= n; ++k) gens.push_back({WGenKind::Y, k});
  return gens;
}

// Triangular split of the generator list: positive {y_1..y_{n-1}, e_ij i<j},
// zero {y_n, e_ii}, negative {e_n1..e_{n,n-1}, e_ij i>j}.
inline std::vector<WGen> w_positive_part(int n) {
  std::vector<WGen> gens;
  for (int k = 1; k <= n - 1; ++k) gens.push_back({WGenKind::Y, k});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) gens.push_back({WGenKind::E, i, j});
  return gens;
}

inline std::vector<WGen> w_zero_part(int n) {
  std::vector<WGen> gens;
  gens.push_back({WGenKind::Y, n});
  for (int i = 1; i <= n - 1; ++i) gens.push_back({WGenKind::E, i, i});
  return gens;
}

inline std::vector<WGen> w_negative_part(int n) {
  std::vector<WGen> gens;
  for (int i = 1; i <= n - 1; ++i) gens.push_back({WGenKind::En, i});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j < i; ++j) gens.push_back({WGenKind::E, i, j});
  return gens;
}

// Unique constant c such that y_2 + e_11^2 + c e_11 is central in the n=2
// presentation, solved from the generator commutators. Returns nullopt if
// the linear conditions are inconsistent or do not pin c down.
inline std::optional<Rat> central_constant_rank2() {
  const int n = 2;
  AlgebraElement base = y_elem(n, 2) + AlgebraElement::gen(n, 1, 1) * AlgebraElement::gen(n, 1, 1);
  AlgebraElement e11 = AlgebraElement::gen(n, 1, 1);
  std::vector<AlgebraElement> probes = {AlgebraElement::gen(n, 2, 1), y_elem(n, 1), e11,
                                        y_elem(n, 2)};
  bool have = false;
  Rat c;
  for (const auto& g : probes) {
    AlgebraElement a = commutator(base, g);  // constant part
    AlgebraElement b = commutator(e11, g);   // coefficient of c
    // need a + c*b == 0
    for (const auto& [mono, bc] : b.terms()) {
      Rat ac = 0;
      if (auto it = a.terms().find(mono); it != a.terms().end()) ac = it->second;
      Rat cand = -ac / bc;
      if (have && cand != c) return std::nullopt;
      c = cand;
      have = true;
    }
    if (!b.is_zero()) {
      // consistency: a must vanish outside supp(b) after fixing c
      continue;
    }
    if (!a.is_zero()) return std::nullopt;
  }
  if (!have) return std::nullopt;
  for (const auto& g : probes)
    if (!(commutator(base + c * e11, g)).is_zero()) return std::nullopt;
  return c;
}

}  // namespace wcusp
