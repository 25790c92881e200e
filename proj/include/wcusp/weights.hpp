#pragma once

// Weight bookkeeping for gl_n: dominance, the Weyl dimension formula,
// interlacing (branching) enumeration, and test grids.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace wcusp {

using Weight = std::vector<Rat>;

inline Rat weight_sum(const Weight& w) {
  Rat s(0);
  for (const auto& x : w) s += x;
  return s;
}

inline std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + rat_str(w[i]);
  return s + ")";
}

// lambda in Lambda_n^+: consecutive differences are non-negative integers.
inline bool is_dominant(const Weight& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!is_nonneg_integer(w[i] - w[i + 1])) return false;
  return true;
}

inline Weight weight_add_scalar(Weight w, const Rat& c) {
  for (auto& x : w) x += c;
  return w;
}

// dim V(lambda) = prod_{i<j} (lambda_i - lambda_j + j - i)/(j - i).
inline Rat weyl_dimension(const Weight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dimension: non-dominant weight");
  const int n = static_cast<int>(lambda.size());
  Rat num(1), den(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= lambda[i] - lambda[j] + (j - i);
      den *= j - i;
    }
  Rat d = num / den;
  return d;
}

// I(lambda): all mu with lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_{n-1} >= lambda_n,
// every ">=" an integer gap. Enumerated in lexicographically decreasing order.
inline std::vector<Weight> interlacings(const Weight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("interlacings: non-dominant weight");
  const int n = static_cast<int>(lambda.size());
  std::vector<Weight> out;
  Weight mu(static_cast<std::size_t>(n - 1));
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n - 1) {
      out.push_back(mu);
      return;
    }
    long steps = to_long(lambda[k] - lambda[k + 1]);
    for (long t = 0; t <= steps; ++t) {
      mu[k] = lambda[k] - t;
      self(self, k + 1);
    }
  };
  if (n >= 2) rec(rec, 0);
  return out;
}

inline bool interlaces(const Weight& mu, const Weight& lambda) {
  if (mu.size() + 1 != lambda.size()) return false;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!is_nonneg_integer(lambda[i] - mu[i])) return false;
    if (!is_nonneg_integer(mu[i] - lambda[i + 1])) return false;
  }
  return true;
}

// All partition-shaped base weights (last entry 0) with n parts and size
// bound: the finite parametrization of {lambda : |lambda - lambda_n| <= bound}.
inline std::vector<Weight> base_weight_grid(int n, int max_size) {
  std::vector<Weight> out;
  std::vector<long> cur(static_cast<std::size_t>(n), 0);
  // entries non-increasing, last forced 0, total <= max_size
  auto rec = [&](auto&& self, int k, long remaining, long cap) -> void {
    if (k == n - 1) {
      cur[k] = 0;
      Weight w;
      for (long v : cur) w.push_back(Rat(v));
      out.push_back(std::move(w));
      return;
    }
    for (long v = std::min(remaining, cap); v >= 0; --v) {
      cur[k] = v;
      self(self, k + 1, remaining - v, v);
    }
  };
  rec(rec, 0, max_size, max_size);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    Rat sa = weight_sum(a), sb = weight_sum(b);
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rat& x, const Rat& y) { return x > y; });
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace wcusp
