#pragma once

// Exact sparse matrices and rational Gaussian elimination. Matrices are
// row-major lists of (col, value) pairs sorted by column; elimination is
// deterministic (left-to-right columns, smallest row index pivot) so bases
// and reports reproduce byte-identically.

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace wcusp {

using Vec = std::vector<Rat>;

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline Vec vec_zero(int d) { return Vec(static_cast<std::size_t>(d), Rat(0)); }

class SparseMat {
 public:
  SparseMat() : rows_(0), cols_(0) {}
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMat identity(int d) {
    SparseMat m(d, d);
    for (int i = 0; i < d; ++i) m.data_[i].push_back({i, Rat(1)});
    return m;
  }

  static SparseMat scalar(int d, const Rat& c) {
    SparseMat m(d, d);
    if (sgn(c) != 0)
      for (int i = 0; i < d; ++i) m.data_[i].push_back({i, c});
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, const Rat& v) {
    if (sgn(v) == 0) return;
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != row.end() && it->first == c) {
      it->second += v;
      if (sgn(it->second) == 0) row.erase(it);
    } else {
      row.insert(it, {c, v});
    }
  }

  Rat get(int r, int c) const {
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rat(0);
  }

  const std::vector<std::pair<int, Rat>>& row(int r) const { return data_[r]; }

  bool is_zero() const {
    for (const auto& r : data_)
      if (!r.empty()) return false;
    return true;
  }

  Vec apply(const Vec& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    Vec out = vec_zero(rows_);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, val] : data_[r])
        if (sgn(v[c]) != 0) out[r] += val * v[c];
    return out;
  }

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    assert(a.cols_ == b.rows_);
    SparseMat out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
      // accumulate row r of a*b
      std::vector<Rat> acc;
      std::vector<int> touched;
      acc.assign(b.cols_, Rat(0));
      for (const auto& [k, av] : a.data_[r]) {
        for (const auto& [c, bv] : b.data_[k]) {
          if (sgn(acc[c]) == 0) touched.push_back(c);
          acc[c] += av * bv;
        }
      }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (int c : touched)
        if (sgn(acc[c]) != 0) out.data_[r].push_back({c, acc[c]});
    }
    return out;
  }

  friend SparseMat operator+(const SparseMat& a, const SparseMat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    SparseMat out = a;
    for (int r = 0; r < b.rows_; ++r)
      for (const auto& [c, v] : b.data_[r]) out.add(r, c, v);
    return out;
  }

  friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    SparseMat out = a;
    for (int r = 0; r < b.rows_; ++r)
      for (const auto& [c, v] : b.data_[r]) out.add(r, c, -v);
    return out;
  }

  friend SparseMat operator*(const Rat& c, const SparseMat& a) {
    SparseMat out = a;
    if (sgn(c) == 0) return SparseMat(a.rows_, a.cols_);
    for (auto& row : out.data_)
      for (auto& [col, v] : row) v *= c;
    return out;
  }

  friend bool operator==(const SparseMat& a, const SparseMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  SparseMat transpose() const {
    SparseMat out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) out.data_[c].push_back({r, v});
    return out;
  }

  std::vector<std::tuple<int, int, Rat>> triples() const {
    std::vector<std::tuple<int, int, Rat>> t;
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) t.emplace_back(r, c, v);
    return t;
  }

 private:
  int rows_, cols_;
  std::vector<std::vector<std::pair<int, Rat>>> data_;
};

inline SparseMat commutator(const SparseMat& a, const SparseMat& b) { return a * b - b * a; }

// Incremental reduced row echelon basis of a subspace; used for closures
// and rank bookkeeping.
class RowSpace {
 public:
  explicit RowSpace(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduces v against the basis; returns the remainder.
  Vec reduce(Vec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rat& c = v[pivots_[k]];
      if (sgn(c) != 0) {
        Rat f = c;  // pivot entries are 1
        for (std::size_t t = 0; t < v.size(); ++t)
          if (sgn(rows_[k][t]) != 0) v[t] -= f * rows_[k][t];
      }
    }
    return v;
  }

  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

  // Inserts v; returns true if the rank grew.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    int p = -1;
    for (int t = 0; t < dim_; ++t)
      if (sgn(v[t]) != 0) {
        p = t;
        break;
      }
    if (p < 0) return false;
    Rat inv = Rat(1) / v[p];
    for (auto& x : v) x *= inv;
    // back-substitute into existing rows
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rat& c = rows_[k][p];
      if (sgn(c) != 0) {
        Rat f = c;
        for (int t = 0; t < dim_; ++t)
          if (sgn(v[t]) != 0) rows_[k][t] -= f * v[t];
      }
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, p);
    return true;
  }

 private:
  int dim_;
  std::vector<Vec> rows_;    // reduced echelon, pivot entries 1
  std::vector<int> pivots_;  // increasing
};

// In-place reduced row echelon form of a dense matrix; returns pivot columns.
inline std::vector<int> rref(std::vector<Vec>& a, int ncols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols && r < static_cast<int>(a.size()); ++c) {
    int pr = -1;
    for (int k = r; k < static_cast<int>(a.size()); ++k)
      if (sgn(a[k][c]) != 0) {
        pr = k;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[r], a[pr]);
    Rat inv = Rat(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (int k = 0; k < static_cast<int>(a.size()); ++k) {
      if (k == r) continue;
      const Rat f = a[k][c];
      if (sgn(f) == 0) continue;
      for (int t = c; t < ncols; ++t)
        if (sgn(a[r][t]) != 0) a[k][t] -= f * a[r][t];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank_of(std::vector<Vec> a, int ncols) {
  return static_cast<int>(rref(a, ncols).size());
}

// Null space basis of the linear map given by rows (each row a functional).
inline std::vector<Vec> kernel_basis(std::vector<Vec> rows, int ncols) {
  std::vector<int> pivots = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (int c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    Vec v = vec_zero(ncols);
    v[c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][c];
    out.push_back(std::move(v));
  }
  return out;
}

// Solves A x = b exactly; nullopt when inconsistent. A given dense by rows.
inline std::optional<Vec> solve_linear(std::vector<Vec> a, Vec b, int ncols) {
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  std::vector<int> pivots = rref(a, ncols + 1);
  Vec x = vec_zero(ncols);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == ncols) return std::nullopt;  // 0 = 1 row
    x[pivots[k]] = a[k][ncols];
  }
  return x;
}

// Exact inverse of a square dense matrix; throws if singular.
inline std::vector<Vec> invert_dense(std::vector<Vec> a) {
  const int d = static_cast<int>(a.size());
  for (int r = 0; r < d; ++r) {
    a[r].resize(2 * d, Rat(0));
    a[r][d + r] = 1;
  }
  std::vector<int> pivots = rref(a, 2 * d);
  for (int k = 0; k < d; ++k)
    if (k >= static_cast<int>(pivots.size()) || pivots[k] != k)
      throw std::invalid_argument("invert_dense: singular matrix");
  std::vector<Vec> inv(d, vec_zero(d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) inv[r][c] = a[r][d + c];
  return inv;
}

}  // namespace wcusp
