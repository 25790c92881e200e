#pragma once

// Finite-dimensional irreducible gl_n-modules V(lambda) with exact sparse
// action matrices. Construction: shift lambda to a partition, enumerate
// Verma weight spaces as PBW lowering monomials, quotient each space by
// the radical of the contravariant form, then re-add the determinant
// twist on the diagonal. The Weyl dimension formula is the built-in
// cross-check; a mismatch aborts the build.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "sparse.hpp"
#include "weights.hpp"

namespace wcusp {

struct Representation {
  int n = 0;
  Weight lambda;                   // highest weight
  int dim = 0;
  std::vector<Weight> weights;     // weight of each basis vector
  std::vector<std::string> labels; // lowering-monomial labels
  int hw_index = 0;
  std::map<std::pair<int, int>, SparseMat> act;

  const SparseMat& action(int i, int j) const {
    auto it = act.find({i, j});
    if (it == act.end()) throw std::invalid_argument("Representation::action: no such generator");
    return it->second;
  }

  Vec apply_gen(int i, int j, const Vec& v) const { return action(i, j).apply(v); }

  // Evaluates an algebra element through the action matrices; the
  // rightmost factor of each monomial acts first.
  Vec apply_element(const AlgebraElement& a, const Vec& v) const {
    if (a.rank() != n) throw std::invalid_argument("apply_element: rank mismatch");
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument("apply_element: dimension mismatch");
    Vec out = vec_zero(dim);
    for (const auto& [mono, c] : a.terms()) {
      Vec w = v;
      for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
        auto [i, j] = gen_rowcol(n, *it);
        w = apply_gen(i, j, w);
      }
      for (int t = 0; t < dim; ++t)
        if (sgn(w[t]) != 0) out[t] += c * w[t];
    }
    return out;
  }

  SparseMat element_matrix(const AlgebraElement& a) const {
    if (a.rank() != n) throw std::invalid_argument("element_matrix: rank mismatch");
    SparseMat out(dim, dim);
    for (const auto& [mono, c] : a.terms()) {
      SparseMat m = SparseMat::identity(dim);
      for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
        auto [i, j] = gen_rowcol(n, *it);
        m = action(i, j) * m;
      }
      out = out + c * m;
    }
    return out;
  }

  Vec hw_vector() const {
    Vec v = vec_zero(dim);
    v[hw_index] = 1;
    return v;
  }

  // Basis indices grouped by weight, in basis order.
  std::map<Weight, std::vector<int>> weight_blocks() const {
    std::map<Weight, std::vector<int>> blocks;
    for (int t = 0; t < dim; ++t) blocks[weights[t]].push_back(t);
    return blocks;
  }

  // V(lambda + c*(1,...,1)): identical off-diagonal action, diagonal and
  // weights shifted by c.
  Representation det_twist(const Rat& c) const {
    Representation out = *this;
    for (auto& x : out.lambda) x += c;
    for (auto& w : out.weights)
      for (auto& x : w) x += c;
    for (int i = 1; i <= n; ++i) {
      auto& m = out.act.at({i, i});
      m = m + SparseMat::scalar(dim, c);
    }
    return out;
  }
};

namespace detail {

inline std::vector<GenCode> lowering_generators(int n) {
  std::vector<GenCode> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) gens.push_back(gen_code(n, i, j));
  std::sort(gens.begin(), gens.end());
  return gens;
}

// Simple-root coordinates of the weight drop of e_ab (a > b): ones on [b, a-1].
inline void add_root_coords(std::vector<long>& c, int a, int b, long mult) {
  for (int t = b; t <= a - 1; ++t) c[static_cast<std::size_t>(t - 1)] += mult;
}

// Applies one generator to a Verma basis monomial over v_{lam_bar}:
// normal-orders g*M, kills raising tails, evaluates Cartan factors.
// Results are combinations of pure-lowering sorted monomials.
inline std::vector<std::pair<Monomial, Rat>> verma_apply_one(int n, const std::vector<long>& lam_bar,
                                                             GenCode g, const Monomial& M) {
  std::vector<GenCode> word;
  word.reserve(M.size() + 1);
  word.push_back(g);
  word.insert(word.end(), M.begin(), M.end());
  std::vector<std::pair<Monomial, Rat>> out;
  for (const auto& [mono, c] : detail::normal_form_cached(n, word)) {
    std::size_t t = 0;
    while (t < mono.size() && gen_class(gen_rowcol(n, mono[t]).first, gen_rowcol(n, mono[t]).second) == 0)
      ++t;
    std::size_t low_end = t;
    Rat scalar = c;
    bool killed = false;
    for (; t < mono.size(); ++t) {
      auto [i, j] = gen_rowcol(n, mono[t]);
      int cls = gen_class(i, j);
      if (cls == 2) {
        killed = true;  // raising factor hits the highest weight vector
        break;
      }
      scalar *= Rat(lam_bar[static_cast<std::size_t>(i - 1)]);
      if (sgn(scalar) == 0) {
        killed = true;
        break;
      }
    }
    if (killed) continue;
    out.emplace_back(Monomial(mono.begin(), mono.begin() + low_end), scalar);
  }
  return out;
}

}  // namespace detail

inline Representation build_irreducible(int n, const Weight& lambda);

namespace detail {

struct WeightSpace {
  std::vector<long> c;                 // depth coordinates
  Weight mu;                           // gl_n weight before the twist
  std::vector<Monomial> monos;         // Verma basis, monomial order
  std::map<Monomial, int, MonoLess> mono_index;
  std::vector<Vec> gram;               // full contravariant Gram matrix
  std::vector<int> pivots;             // positions whose images form a basis
  std::vector<Vec> gram_pp_inv;        // inverse of the pivot submatrix
  int offset = -1;                     // global index of first basis vector
};

class VermaBuilder {
 public:
  VermaBuilder(int n, const Weight& lambda) : n_(n), lambda_(lambda) {
    if (n < 1) throw std::invalid_argument("build_irreducible: rank must be positive");
    if (static_cast<int>(lambda.size()) != n)
      throw std::invalid_argument("build_irreducible: weight length != rank");
    if (!is_dominant(lambda))
      throw std::invalid_argument("build_irreducible: non-dominant highest weight");
    for (const auto& x : lambda) lam_bar_.push_back(to_long(x - lambda.back()));
    lowering_ = lowering_generators(n);
  }

  Representation build() {
    enumerate_weights();
    for (auto& ws : spaces_) fill_weight_space(ws);
    assign_offsets();
    Representation rep = assemble();
    Rat expect = weyl_dimension(lambda_);
    if (Rat(rep.dim) != expect)
      throw std::runtime_error("build_irreducible: construction bug, dimension " +
                               std::to_string(rep.dim) + " != Weyl value " + rat_str(expect));
    return rep;
  }

 private:
  void enumerate_weights() {
    const int r = n_ - 1;
    std::vector<long> bound(static_cast<std::size_t>(std::max(r, 0)), 0);
    for (int i = 1; i <= r; ++i) {
      long s = 0;
      for (int j = 1; j <= i; ++j) s += lam_bar_[j - 1] - lam_bar_[static_cast<std::size_t>(n_ - j)];
      bound[i - 1] = s;
    }
    std::vector<long> c(static_cast<std::size_t>(std::max(r, 0)), 0);
    auto rec = [&](auto&& self, int k) -> void {
      if (k == r) {
        spaces_.push_back(WeightSpace{});
        spaces_.back().c = c;
        return;
      }
      for (long v = 0; v <= bound[k]; ++v) {
        c[k] = v;
        self(self, k + 1);
      }
      c[k] = 0;
    };
    rec(rec, 0);
    std::sort(spaces_.begin(), spaces_.end(), [](const WeightSpace& a, const WeightSpace& b) {
      long da = 0, db = 0;
      for (long x : a.c) da += x;
      for (long x : b.c) db += x;
      if (da != db) return da < db;
      return a.c < b.c;
    });
    for (std::size_t k = 0; k < spaces_.size(); ++k) {
      auto& ws = spaces_[k];
      ws.mu.assign(static_cast<std::size_t>(n_), Rat(0));
      for (int t = 1; t <= n_; ++t) {
        long v = lam_bar_[t - 1];
        if (t <= r) v -= ws.c[t - 1];
        if (t >= 2) v += ws.c[t - 2];
        ws.mu[t - 1] = Rat(v);
      }
      index_[ws.c] = static_cast<int>(k);
      enumerate_monomials(ws);
    }
  }

  void enumerate_monomials(WeightSpace& ws) {
    Monomial cur;
    std::vector<long> rem = ws.c;
    auto rec = [&](auto&& self, std::size_t gi) -> void {
      if (gi == lowering_.size()) {
        for (long x : rem)
          if (x != 0) return;
        ws.monos.push_back(cur);
        return;
      }
      auto [a, b] = gen_rowcol(n_, lowering_[gi]);
      long cap = rem.empty() ? 0 : rem[b - 1];
      for (int t = b; t <= a - 1; ++t) cap = std::min(cap, rem[t - 1]);
      // zero-exponent branch first keeps recursion tight
      std::size_t before = cur.size();
      for (long e = 0; e <= cap; ++e) {
        if (e > 0) {
          cur.push_back(lowering_[gi]);
          add_root_coords(rem, a, b, -1);
        }
        self(self, gi + 1);
      }
      add_root_coords(rem, a, b, static_cast<long>(cur.size() - before));
      cur.resize(before);
    };
    if (n_ >= 2) {
      bool at_top = true;
      for (long x : ws.c)
        if (x != 0) at_top = false;
      if (at_top) {
        ws.monos.push_back(Monomial{});
      } else {
        rec(rec, 0);
      }
    } else {
      ws.monos.push_back(Monomial{});
    }
    std::sort(ws.monos.begin(), ws.monos.end(), MonoLess{});
    for (std::size_t t = 0; t < ws.monos.size(); ++t)
      ws.mono_index[ws.monos[t]] = static_cast<int>(t);
  }

  // Gram of the contravariant form by descent: <f A', B> = <A', f^T B>,
  // pairing against the already-computed space one root higher.
  void fill_weight_space(WeightSpace& ws) {
    const int d = static_cast<int>(ws.monos.size());
    ws.gram.assign(d, vec_zero(d));
    bool top = true;
    for (long x : ws.c)
      if (x != 0) top = false;
    if (top) {
      ws.gram[0][0] = 1;
    } else {
      // group rows by leading factor
      std::map<GenCode, std::vector<int>> by_first;
      for (int ia = 0; ia < d; ++ia) by_first[ws.monos[ia][0]].push_back(ia);
      for (const auto& [f, rows] : by_first) {
        auto [a, b] = gen_rowcol(n_, f);
        GenCode ft = gen_code(n_, b, a);
        std::vector<long> cp = ws.c;
        add_root_coords(cp, a, b, -1);
        const WeightSpace& up = spaces_[index_.at(cp)];
        for (int ib = 0; ib < d; ++ib) {
          auto combo = verma_apply_one(n_, lam_bar_, ft, ws.monos[ib]);
          if (combo.empty()) continue;
          for (int ia : rows) {
            if (ib < ia) continue;  // symmetric fill below
            Monomial ap(ws.monos[ia].begin() + 1, ws.monos[ia].end());
            int iap = up.mono_index.at(ap);
            Rat s(0);
            for (const auto& [T, val] : combo) s += val * up.gram[iap][up.mono_index.at(T)];
            ws.gram[ia][ib] = s;
          }
        }
      }
      for (int ia = 0; ia < d; ++ia)
        for (int ib = 0; ib < ia; ++ib) ws.gram[ia][ib] = ws.gram[ib][ia];
    }
    std::vector<Vec> work = ws.gram;
    ws.pivots = rref(work, d);
    if (!ws.pivots.empty()) {
      std::vector<Vec> pp(ws.pivots.size(), vec_zero(static_cast<int>(ws.pivots.size())));
      for (std::size_t r = 0; r < ws.pivots.size(); ++r)
        for (std::size_t c = 0; c < ws.pivots.size(); ++c)
          pp[r][c] = ws.gram[ws.pivots[r]][ws.pivots[c]];
      ws.gram_pp_inv = invert_dense(std::move(pp));
    }
  }

  void assign_offsets() {
    int off = 0;
    for (auto& ws : spaces_) {
      ws.offset = off;
      off += static_cast<int>(ws.pivots.size());
    }
    total_dim_ = off;
  }

  // Coordinates in the quotient basis of a Verma combination at `ws`.
  Vec quotient_coords(const WeightSpace& ws,
                      const std::vector<std::pair<Monomial, Rat>>& combo) const {
    const int r = static_cast<int>(ws.pivots.size());
    Vec y = vec_zero(r);
    for (const auto& [T, val] : combo) {
      int it = ws.mono_index.at(T);
      for (int p = 0; p < r; ++p) y[p] += val * ws.gram[ws.pivots[p]][it];
    }
    Vec x = vec_zero(r);
    for (int p = 0; p < r; ++p)
      for (int q = 0; q < r; ++q)
        if (sgn(y[q]) != 0) x[p] += ws.gram_pp_inv[p][q] * y[q];
    return x;
  }

  Representation assemble() {
    Representation rep;
    rep.n = n_;
    rep.lambda = lambda_;
    rep.dim = total_dim_;
    const Rat twist = lambda_.back();
    for (const auto& ws : spaces_) {
      for (std::size_t p = 0; p < ws.pivots.size(); ++p) {
        Weight w = ws.mu;
        for (auto& x : w) x += twist;
        rep.weights.push_back(std::move(w));
        const Monomial& m = ws.monos[ws.pivots[p]];
        std::string label;
        if (m.empty()) {
          label = "v+";
        } else {
          for (std::size_t t = 0; t < m.size(); ++t)
            label += (t ? "*" : "") + gen_str(n_, m[t]);
          label += "*v+";
        }
        rep.labels.push_back(std::move(label));
        bool top = true;
        for (long x : ws.c)
          if (x != 0) top = false;
        if (top) rep.hw_index = ws.offset + static_cast<int>(p);
      }
    }
    for (int i = 1; i <= n_; ++i) {
      for (int j = 1; j <= n_; ++j) {
        SparseMat m(total_dim_, total_dim_);
        if (i == j) {
          for (int t = 0; t < total_dim_; ++t) m.add(t, t, rep.weights[t][i - 1]);
        } else {
          GenCode g = gen_code(n_, i, j);
          for (const auto& ws : spaces_) {
            std::vector<long> ct = ws.c;
            bool in_range = true;
            if (i > j) {
              add_root_coords(ct, i, j, 1);
              for (int t = j; t <= i - 1 && in_range; ++t) {
                long s = 0;
                for (int u = 1; u <= t; ++u)
                  s += lam_bar_[u - 1] - lam_bar_[static_cast<std::size_t>(n_ - u)];
                if (ct[t - 1] > s) in_range = false;
              }
            } else {
              add_root_coords(ct, j, i, -1);
              for (long x : ct)
                if (x < 0) in_range = false;
            }
            const WeightSpace* target = nullptr;
            if (in_range) {
              auto it = index_.find(ct);
              if (it != index_.end()) target = &spaces_[it->second];
            }
            if (!target || target->pivots.empty()) continue;
            for (std::size_t q = 0; q < ws.pivots.size(); ++q) {
              auto combo = verma_apply_one_combo(g, ws, static_cast<int>(q));
              if (combo.empty()) continue;
              Vec x = quotient_coords(*target, combo);
              for (std::size_t p = 0; p < x.size(); ++p)
                m.add(target->offset + static_cast<int>(p), ws.offset + static_cast<int>(q), x[p]);
            }
          }
        }
        rep.act.emplace(std::make_pair(i, j), std::move(m));
      }
    }
    return rep;
  }

  std::vector<std::pair<Monomial, Rat>> verma_apply_one_combo(GenCode g, const WeightSpace& ws,
                                                              int q) const {
    return verma_apply_one(n_, lam_bar_, g, ws.monos[ws.pivots[q]]);
  }

  int n_;
  Weight lambda_;
  std::vector<long> lam_bar_;
  std::vector<GenCode> lowering_;
  std::vector<WeightSpace> spaces_;
  std::map<std::vector<long>, int> index_;
  int total_dim_ = 0;
};

}  // namespace detail

inline Representation build_irreducible(int n, const Weight& lambda) {
  detail::VermaBuilder builder(n, lambda);
  return builder.build();
}

// The k-th fundamental module realized on k-subsets of {1..n}; isomorphic
// to build_irreducible(delta_k).
inline Representation wedge_module(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("wedge_module: k out of range");
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::map<std::vector<int>, int> idx;
  for (std::size_t t = 0; t < subsets.size(); ++t) idx[subsets[t]] = static_cast<int>(t);

  Representation rep;
  rep.n = n;
  rep.lambda.assign(static_cast<std::size_t>(n), Rat(0));
  for (int t = 0; t < k; ++t) rep.lambda[t] = 1;
  rep.dim = static_cast<int>(subsets.size());
  rep.hw_index = 0;  // {1..k} is lexicographically first
  for (const auto& s : subsets) {
    Weight w(static_cast<std::size_t>(n), Rat(0));
    std::string label = "e(";
    for (std::size_t t = 0; t < s.size(); ++t) {
      w[s[t] - 1] = 1;
      label += (t ? "," : "") + std::to_string(s[t]);
    }
    label += ")";
    rep.weights.push_back(std::move(w));
    rep.labels.push_back(std::move(label));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      SparseMat m(rep.dim, rep.dim);
      for (std::size_t t = 0; t < subsets.size(); ++t) {
        const auto& s = subsets[t];
        bool has_j = std::find(s.begin(), s.end(), j) != s.end();
        if (!has_j) continue;
        if (i == j) {
          m.add(static_cast<int>(t), static_cast<int>(t), Rat(1));
          continue;
        }
        if (std::find(s.begin(), s.end(), i) != s.end()) continue;
        std::vector<int> target;
        int sign_moves = 0;
        for (int v : s)
          if (v != j) target.push_back(v);
        // insert i keeping the list sorted; sign counts transpositions
        int pos_j = 0, pos_i = 0;
        for (std::size_t u = 0; u < s.size(); ++u)
          if (s[u] == j) pos_j = static_cast<int>(u);
        target.push_back(i);
        std::sort(target.begin(), target.end());
        for (std::size_t u = 0; u < target.size(); ++u)
          if (target[u] == i) pos_i = static_cast<int>(u);
        sign_moves = pos_j - pos_i;
        Rat sign = (sign_moves % 2 == 0) ? Rat(1) : Rat(-1);
        m.add(idx.at(target), static_cast<int>(t), sign);
      }
      rep.act.emplace(std::make_pair(i, j), std::move(m));
    }
  }
  return rep;
}

// gl_{n-1} highest weight vectors of rep: pairs (mu, vector), mu the
// gl_{n-1} weight. For an irreducible V(lambda) this is exactly I(lambda).
inline std::vector<std::pair<Weight, Vec>> branch_restriction(const Representation& rep) {
  const int n = rep.n;
  std::vector<std::pair<int, int>> raisings;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) raisings.push_back({i, j});
  std::vector<SparseMat> transposed;
  for (auto [i, j] : raisings) transposed.push_back(rep.action(i, j).transpose());

  std::vector<std::pair<Weight, Vec>> out;
  for (const auto& [alpha, idx] : rep.weight_blocks()) {
    const int d = static_cast<int>(idx.size());
    std::vector<Vec> ker;
    if (raisings.empty()) {
      for (int c = 0; c < d; ++c) {
        Vec v = vec_zero(d);
        v[c] = 1;
        ker.push_back(std::move(v));
      }
    } else {
      std::vector<Vec> rows;
      for (const auto& mt : transposed) {
        std::map<int, Vec> by_row;  // constraint per target row
        for (int c = 0; c < d; ++c)
          for (const auto& [r, v] : mt.row(idx[c])) by_row.try_emplace(r, vec_zero(d)).first->second[c] = v;
        for (auto& [r, row] : by_row) rows.push_back(std::move(row));
      }
      ker = rows.empty() ? [&] {
        std::vector<Vec> full;
        for (int c = 0; c < d; ++c) {
          Vec v = vec_zero(d);
          v[c] = 1;
          full.push_back(std::move(v));
        }
        return full;
      }()
                         : kernel_basis(std::move(rows), d);
    }
    for (const auto& kv : ker) {
      Vec v = vec_zero(rep.dim);
      for (int c = 0; c < d; ++c) v[idx[c]] = kv[c];
      Weight mu(alpha.begin(), alpha.end() - 1);
      out.emplace_back(std::move(mu), std::move(v));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

// Exact bracket identity check over all generator pairs.
inline bool verify_gl_brackets(const Representation& rep) {
  const int n = rep.n;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          SparseMat lhs = commutator(rep.action(a, b), rep.action(c, d));
          SparseMat rhs(rep.dim, rep.dim);
          if (b == c) rhs = rhs + rep.action(a, d);
          if (d == a) rhs = rhs - rep.action(c, b);
          if (!(lhs == rhs)) return false;
        }
  return true;
}

// Highest weight vector is killed by every raising generator and carries
// weight lambda; diagonal actions match the recorded weights.
inline bool verify_highest_weight(const Representation& rep) {
  Vec v = rep.hw_vector();
  for (int i = 1; i <= rep.n; ++i)
    for (int j = i + 1; j <= rep.n; ++j)
      if (!vec_is_zero(rep.apply_gen(i, j, v))) return false;
  if (rep.weights[rep.hw_index] != rep.lambda) return false;
  for (int i = 1; i <= rep.n; ++i) {
    const SparseMat& m = rep.action(i, i);
    for (int t = 0; t < rep.dim; ++t) {
      for (const auto& [c, val] : m.row(t))
        if (c != t) return false;
      if (m.get(t, t) != rep.weights[t][i - 1]) return false;
    }
  }
  return true;
}

}  // namespace wcusp
