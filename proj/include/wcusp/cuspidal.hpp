#pragma once

// Truncated realizations of the induced weight modules over sl_{n+1} on a
// lattice box: the Laurent-shift picture G and the polynomial-twist
// picture T, with exact relation sweeps, injectivity tests, and the
// explicit fiber-wise isomorphism between the two. All operators are
// partial on the box; every assertion is made on an interior whose depth
// covers the operators' displacement.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "representation.hpp"
#include "w_elements.hpp"
#include "wstructure.hpp"

namespace wcusp {

using LatticePoint = std::vector<int>;

struct LatticeBox {
  int n = 0;
  int radius = 0;

  bool contains(const LatticePoint& r, int depth = 0) const {
    for (int x : r)
      if (x < -(radius - depth) || x > radius - depth) return false;
    return true;
  }

  std::vector<LatticePoint> points(int depth = 0) const {
    const int lo = -(radius - depth), hi = radius - depth;
    std::vector<LatticePoint> out;
    LatticePoint cur(static_cast<std::size_t>(n), lo);
    if (hi < lo) return out;
    while (true) {
      out.push_back(cur);
      int t = n - 1;
      while (t >= 0 && cur[t] == hi) {
        cur[t] = lo;
        --t;
      }
      if (t < 0) break;
      ++cur[t];
    }
    return out;
  }

  long count(int depth = 0) const {
    long side = 2l * (radius - depth) + 1;
    if (side <= 0) return 0;
    long c = 1;
    for (int t = 0; t < n; ++t) c *= side;
    return c;
  }
};

// sl_{n+1} basis element: Cartan h_i (1 <= i <= n) or root vector e_ij
// with 0 <= i != j <= n.
struct SlElem {
  bool cartan = false;
  int i = 0, j = 0;

  std::string name() const {
    if (cartan) return "h[" + std::to_string(i) + "]";
    return "e[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }
  friend bool operator<(const SlElem& a, const SlElem& b) {
    return std::tie(a.cartan, a.i, a.j) < std::tie(b.cartan, b.i, b.j);
  }
};

inline std::vector<SlElem> sl_basis(int n) {
  std::vector<SlElem> out;
  for (int k = 1; k <= n; ++k) out.push_back({true, k, 0});
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j) out.push_back({false, i, j});
  return out;
}

// Bracket expanded over the basis; diagonal differences are re-expressed
// through the h_k with h_0 = -(h_1 + ... + h_n).
inline std::vector<std::pair<SlElem, Rat>> sl_bracket(int n, const SlElem& a, const SlElem& b) {
  std::vector<std::pair<SlElem, Rat>> out;
  auto add_h = [&](int idx, const Rat& c) {
    // contribution of E_{idx,idx} as a traceless Cartan combination,
    // coalesced so every basis element appears at most once
    auto push = [&](const SlElem& x, const Rat& v) {
      for (auto& [y, w] : out)
        if (y.cartan == x.cartan && y.i == x.i && y.j == x.j) {
          w += v;
          return;
        }
      out.push_back({x, v});
    };
    if (idx == 0) {
      for (int k = 1; k <= n; ++k) push({true, k, 0}, -c);
    } else {
      push({true, idx, 0}, c);
    }
  };
  if (a.cartan && b.cartan) return out;
  if (a.cartan && !b.cartan) {
    Rat c = Rat((a.i == b.i ? 1 : 0) - (a.i == b.j ? 1 : 0));
    if (sgn(c) != 0) out.push_back({b, c});
    return out;
  }
  if (!a.cartan && b.cartan) {
    Rat c = Rat((b.i == a.j ? 1 : 0) - (b.i == a.i ? 1 : 0));
    if (sgn(c) != 0) out.push_back({a, c});
    return out;
  }
  // two root vectors
  if (a.j == b.i && b.j == a.i) {
    add_h(a.i, Rat(1));
    add_h(a.j, Rat(-1));
    return out;
  }
  if (a.j == b.i) out.push_back({{false, a.i, b.j}, Rat(1)});
  if (b.j == a.i) out.push_back({{false, b.i, a.j}, Rat(-1)});
  return out;
}

// Sparse module vector: fiber vectors attached to lattice points.
using BoxVec = std::map<LatticePoint, Vec>;

inline void boxvec_add(BoxVec& acc, const LatticePoint& r, const Vec& v, const Rat& scale = Rat(1)) {
  if (vec_is_zero(v)) return;
  auto [it, fresh] = acc.try_emplace(r, vec_zero(static_cast<int>(v.size())));
  for (std::size_t t = 0; t < v.size(); ++t) it->second[t] += scale * v[t];
  if (vec_is_zero(it->second)) acc.erase(it);
}

inline bool boxvec_equal(const BoxVec& a, const BoxVec& b) { return a == b; }

// ---------------------------------------------------------------------------
// G: Laurent-shift realization over a W-twisted fiber.

struct CuspidalModule {
  int n = 0;
  Weight mu;
  std::shared_ptr<const Representation> fiber;
  LatticeBox box;
  std::vector<SparseMat> xmat;   // tau-images e_ij - e_ii, flattened (i-1)*n + (j-1); diagonal unused
  std::vector<SparseMat> gamma;  // gamma_i fiber matrices

  const SparseMat& x_of(int i, int j) const { return xmat[(i - 1) * n + (j - 1)]; }

  LatticePoint shift(const SlElem& g) const {
    LatticePoint s(static_cast<std::size_t>(n), 0);
    if (g.cartan) return s;
    if (g.i == 0) {
      s[g.j - 1] = 1;  // e_0k shifts up
    } else if (g.j == 0) {
      s[g.i - 1] = -1;
    } else {
      s[g.i - 1] = -1;
      s[g.j - 1] = 1;
    }
    return s;
  }

  SparseMat fiber_matrix(const SlElem& g, const LatticePoint& r) const {
    const int d = fiber->dim;
    if (g.cartan) return SparseMat::scalar(d, mu[g.i - 1] - r[g.i - 1]);
    if (g.i == 0) return SparseMat::identity(d);
    if (g.j == 0) {
      Rat rsum(0), musum = weight_sum(mu);
      for (int x : r) rsum += x;
      SparseMat m = gamma[g.i - 1];
      for (int j = 1; j <= n; ++j) {
        if (j == g.i) continue;  // x_ii := 0
        Rat c = mu[j - 1] - r[j - 1];
        if (sgn(c) != 0) m = m - c * x_of(g.i, j);
      }
      m = m - SparseMat::scalar(d, (musum - rsum) * (mu[g.i - 1] - r[g.i - 1] + 1));
      return m;
    }
    return x_of(g.i, g.j) + SparseMat::scalar(d, mu[g.i - 1] - r[g.i - 1] + 1);
  }

  // Applies g to a fiber vector at r; nullopt when the target leaves the box.
  std::optional<std::pair<LatticePoint, Vec>> apply_point(const SlElem& g, const LatticePoint& r,
                                                          const Vec& v) const {
    LatticePoint target = r;
    LatticePoint s = shift(g);
    for (int t = 0; t < n; ++t) target[t] += s[t];
    if (!box.contains(target)) return std::nullopt;
    return std::make_pair(std::move(target), fiber_matrix(g, r).apply(v));
  }

  std::optional<BoxVec> apply(const SlElem& g, const BoxVec& v) const {
    BoxVec out;
    for (const auto& [r, w] : v) {
      auto res = apply_point(g, r, w);
      if (!res) return std::nullopt;
      boxvec_add(out, res->first, res->second);
    }
    return out;
  }
};

inline bool cuspidality_criterion(const Weight& mu, const Weight& lambda) {
  const Rat musum = weight_sum(mu);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (is_integer(mu[i] - lambda[i])) return false;
    if (is_integer(musum + lambda[i])) return false;
  }
  return true;
}

inline CuspidalModule build_G(const Weight& mu, std::shared_ptr<const Representation> rep,
                              int radius) {
  CuspidalModule g;
  g.n = rep->n;
  if (static_cast<int>(mu.size()) != g.n) throw std::invalid_argument("build_G: mu length != rank");
  g.mu = mu;
  g.fiber = std::move(rep);
  g.box = LatticeBox{g.n, radius};
  for (int i = 1; i <= g.n; ++i)
    for (int j = 1; j <= g.n; ++j)
      g.xmat.push_back(i == j ? SparseMat(g.fiber->dim, g.fiber->dim)
                              : g.fiber->element_matrix(tau_x(g.n, i, j)));
  for (int i = 1; i <= g.n; ++i) g.gamma.push_back(g.fiber->element_matrix(gamma_elem(g.n, i)));
  return g;
}

// ---------------------------------------------------------------------------
// T: polynomial-twist realization; exponents mu - lambda + m for m in box.

struct ShenLarssonModule {
  int n = 0;
  Weight mu;      // target weight at m = lambda - alpha ... exponent base mu - lambda
  Weight lambda;  // fiber highest weight
  std::shared_ptr<const Representation> fiber;
  LatticeBox box;

  Rat exponent(const LatticePoint& m, int j) const {
    return mu[j - 1] - lambda[j - 1] + m[j - 1];
  }

  // Multi-target application to a fiber vector at m.
  std::optional<BoxVec> apply_point(const SlElem& g, const LatticePoint& m, const Vec& v) const {
    const int d = fiber->dim;
    BoxVec out;
    auto shifted = [&](int coord, int delta) {
      LatticePoint t = m;
      t[coord - 1] += delta;
      return t;
    };
    if (g.cartan) {
      Vec w = fiber->apply_gen(g.i, g.i, v);
      Rat a = exponent(m, g.i);
      for (int t = 0; t < d; ++t) w[t] += a * v[t];
      boxvec_add(out, m, w);
      return out;
    }
    if (g.i == 0) {
      LatticePoint t = shifted(g.j, -1);
      if (!box.contains(t)) return std::nullopt;
      Rat a = exponent(m, g.j);
      Vec w = v;
      for (auto& x : w) x *= -a;
      boxvec_add(out, t, w);
      return out;
    }
    if (g.j == 0) {
      for (int q = 1; q <= n; ++q) {
        LatticePoint t = shifted(q, +1);
        if (!box.contains(t)) return std::nullopt;
        boxvec_add(out, t, fiber->apply_gen(g.i, q, v));
      }
      LatticePoint t = shifted(g.i, +1);
      Rat asum(0);
      for (int q = 1; q <= n; ++q) asum += exponent(m, q);
      Vec w = v;
      for (auto& x : w) x *= asum;
      Vec iw = vec_zero(d);
      for (int q = 1; q <= n; ++q) {
        Vec u = fiber->apply_gen(q, q, v);
        for (int s = 0; s < d; ++s) iw[s] += u[s];
      }
      for (int s = 0; s < d; ++s) w[s] += iw[s];
      boxvec_add(out, t, w);
      return out;
    }
    // e_ij, both nonzero
    boxvec_add(out, m, fiber->apply_gen(g.i, g.j, v));
    LatticePoint t = m;
    t[g.i - 1] += 1;
    t[g.j - 1] -= 1;
    if (!box.contains(t)) return std::nullopt;
    Rat a = exponent(m, g.j);
    if (sgn(a) != 0) {
      Vec w = v;
      for (auto& x : w) x *= a;
      boxvec_add(out, t, w);
    }
    return out;
  }

  std::optional<BoxVec> apply(const SlElem& g, const BoxVec& v) const {
    BoxVec out;
    for (const auto& [m, w] : v) {
      auto res = apply_point(g, m, w);
      if (!res) return std::nullopt;
      for (const auto& [t, u] : *res) boxvec_add(out, t, u);
    }
    return out;
  }
};

inline ShenLarssonModule build_T(const Weight& mu, std::shared_ptr<const Representation> rep,
                                 int radius) {
  ShenLarssonModule t;
  t.n = rep->n;
  if (static_cast<int>(mu.size()) != t.n) throw std::invalid_argument("build_T: mu length != rank");
  t.mu = mu;
  t.lambda = rep->lambda;
  t.fiber = std::move(rep);
  t.box = LatticeBox{t.n, radius};
  return t;
}

// ---------------------------------------------------------------------------
// Relation sweep: [A, B] = A B - B A against the abstract bracket, exact,
// on interior(depth).

struct RelationReport {
  long pairs_checked = 0;
  std::vector<std::string> violations;
};

template <typename Module>
RelationReport check_sl_relations(const Module& mod, int depth) {
  if (depth < 2) throw std::invalid_argument("check_sl_relations: depth must be >= 2");
  RelationReport report;
  const auto basis = sl_basis(mod.n);
  const auto interior = mod.box.points(depth);
  const int d = mod.fiber->dim;
  for (std::size_t ai = 0; ai < basis.size(); ++ai) {
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
      if (bi >= ai) continue;  // antisymmetric; check each unordered pair once
      const SlElem& a = basis[ai];
      const SlElem& b = basis[bi];
      auto br = sl_bracket(mod.n, a, b);
      bool bad = false;
      for (const auto& r : interior) {
        for (int t = 0; t < d && !bad; ++t) {
          Vec e = vec_zero(d);
          e[t] = 1;
          BoxVec start;
          start[r] = e;
          auto bv = mod.apply(b, start);
          auto av = mod.apply(a, start);
          if (!bv || !av) {
            report.violations.push_back("undefined composition at interior point for [" +
                                        a.name() + "," + b.name() + "]");
            bad = true;
            break;
          }
          auto ab = mod.apply(a, *bv);
          auto ba = mod.apply(b, *av);
          if (!ab || !ba) {
            report.violations.push_back("undefined composition at interior point for [" +
                                        a.name() + "," + b.name() + "]");
            bad = true;
            break;
          }
          BoxVec lhs = *ab;
          for (const auto& [pt, w] : *ba) boxvec_add(lhs, pt, w, Rat(-1));
          BoxVec rhs;
          for (const auto& [x, c] : br) {
            auto xv = mod.apply(x, start);
            if (!xv) {
              report.violations.push_back("undefined bracket image for [" + a.name() + "," +
                                          b.name() + "]");
              bad = true;
              break;
            }
            for (const auto& [pt, w] : *xv) boxvec_add(rhs, pt, w, c);
          }
          if (bad) break;
          if (!boxvec_equal(lhs, rhs)) {
            report.violations.push_back("relation [" + a.name() + "," + b.name() +
                                        "] fails at lattice point");
            bad = true;
          }
        }
        if (bad) break;
      }
      ++report.pairs_checked;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Injectivity of a root vector restricted to sources in interior(1).

inline bool injectivity_check(const CuspidalModule& g, const SlElem& root) {
  if (root.cartan) throw std::invalid_argument("injectivity_check: expects a root vector");
  for (const auto& r : g.box.points(1)) {
    const SparseMat m = g.fiber_matrix(root, r);
    std::vector<Vec> rows;
    for (int t = 0; t < m.rows(); ++t) {
      Vec row = vec_zero(m.cols());
      for (const auto& [c, v] : m.row(t)) row[c] = v;
      rows.push_back(std::move(row));
    }
    if (rank_of(std::move(rows), m.cols()) < g.fiber->dim) return false;
  }
  return true;
}

inline bool injectivity_check(const ShenLarssonModule& t, const SlElem& root) {
  if (root.cartan) throw std::invalid_argument("injectivity_check: expects a root vector");
  const auto sources = t.box.points(1);
  const int d = t.fiber->dim;
  std::vector<BoxVec> images;
  std::map<LatticePoint, int> target_index;
  for (const auto& m : sources) {
    for (int b = 0; b < d; ++b) {
      Vec e = vec_zero(d);
      e[b] = 1;
      auto img = t.apply_point(root, m, e);
      if (!img) throw std::runtime_error("injectivity_check: operator undefined on interior(1)");
      for (const auto& [pt, w] : *img) target_index.try_emplace(pt, 0);
      images.push_back(std::move(*img));
    }
  }
  int idx = 0;
  for (auto& [pt, val] : target_index) val = idx++;
  const int ncols = static_cast<int>(images.size());
  const int nrows = idx * d;
  // rows of the flattened map, skipping all-zero rows
  std::vector<Vec> rows(static_cast<std::size_t>(nrows), Vec());
  for (int c = 0; c < ncols; ++c)
    for (const auto& [pt, w] : images[c])
      for (int u = 0; u < d; ++u) {
        if (sgn(w[u]) == 0) continue;
        Vec& row = rows[target_index[pt] * d + u];
        if (row.empty()) row = vec_zero(ncols);
        row[c] = w[u];
      }
  std::vector<Vec> dense;
  for (auto& row : rows)
    if (!row.empty()) dense.push_back(std::move(row));
  return kernel_basis(std::move(dense), ncols).empty();
}

// ---------------------------------------------------------------------------
// The explicit isomorphism G -> T. On the graded piece (r, fiber weight
// alpha) the map is the scalar
//   phi(r, alpha) = c_alpha * prod_j q(mu_j - alpha_j, r_j),
// where q encodes the action of the inverted shift operators and c_alpha
// rescales the fiber so the twisted action matches the polynomial one.
// Cuspidality keeps every denominator away from zero.

struct Intertwiner {
  std::vector<Rat> scale;        // per fiber basis index: c_{alpha_b}
  const Representation* fiber = nullptr;
  Weight mu;
  Weight lambda;

  // q(b, t): coefficient of the t-fold shift acting on the exponent b.
  static Rat q_factor(const Rat& b, int t) {
    Rat out(1);
    if (t >= 0) {
      for (int s = 0; s < t; ++s) out *= -(b - s);
    } else {
      for (int s = 1; s <= -t; ++s) out /= -(b + s);
    }
    return out;
  }

  Rat phi(const LatticePoint& r, int basis_index) const {
    const Weight& alpha = fiber->weights[basis_index];
    Rat out = scale[basis_index];
    for (std::size_t j = 0; j < alpha.size(); ++j) out *= q_factor(mu[j] - alpha[j], r[j]);
    return out;
  }

  // Target lattice point in T of the piece (r, alpha): m = lambda - alpha - r.
  LatticePoint target(const LatticePoint& r, int basis_index) const {
    const Weight& alpha = fiber->weights[basis_index];
    LatticePoint m(alpha.size());
    for (std::size_t j = 0; j < alpha.size(); ++j)
      m[j] = static_cast<int>(to_long(lambda[j] - alpha[j])) - r[j];
    return m;
  }

  // Image of a single-point G vector; nullopt if it leaves the T box.
  std::optional<BoxVec> map_point(const ShenLarssonModule& t, const LatticePoint& r,
                                  const Vec& v) const {
    BoxVec out;
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (sgn(v[b]) == 0) continue;
      LatticePoint m = target(r, static_cast<int>(b));
      if (!t.box.contains(m)) return std::nullopt;
      Vec piece = vec_zero(fiber->dim);
      piece[b] = v[b] * phi(r, static_cast<int>(b));
      boxvec_add(out, m, piece);
    }
    return out;
  }
};

// Builds the fiber rescaling by propagating the defining ratio
//   c_{alpha + e_i - e_j} / c_alpha = (mu_i - alpha_i) / (mu_j - alpha_j + 1)
// down the weight graph from the highest weight; the relation sweep in
// intertwiner_check certifies path-independence.
inline Intertwiner build_intertwiner(const CuspidalModule& g, const ShenLarssonModule& t) {
  if (!cuspidality_criterion(g.mu, g.fiber->lambda))
    throw std::invalid_argument("build_intertwiner: parameters violate the cuspidality criterion");
  if (g.mu != t.mu || !(g.fiber->lambda == t.lambda))
    throw std::invalid_argument("build_intertwiner: mismatched parameters");
  const Representation& rep = *g.fiber;
  const int n = rep.n;
  Intertwiner out;
  out.fiber = &rep;
  out.mu = g.mu;
  out.lambda = rep.lambda;

  std::map<Weight, Rat> c;
  std::vector<Weight> queue;
  c[rep.lambda] = 1;
  queue.push_back(rep.lambda);
  std::set<Weight> seen_all;
  for (const auto& w : rep.weights) seen_all.insert(w);
  while (!queue.empty()) {
    Weight alpha = queue.back();
    queue.pop_back();
    const Rat base = c.at(alpha);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        Weight next = alpha;
        next[i - 1] += 1;
        next[j - 1] -= 1;
        if (!seen_all.count(next) || c.count(next)) continue;
        Rat num = g.mu[i - 1] - alpha[i - 1];
        Rat den = g.mu[j - 1] - alpha[j - 1] + 1;
        if (sgn(den) == 0) throw std::runtime_error("build_intertwiner: zero denominator");
        c[next] = base * num / den;
        queue.push_back(next);
      }
  }
  for (int b = 0; b < rep.dim; ++b) out.scale.push_back(c.at(rep.weights[b]));
  return out;
}

struct IntertwinerReport {
  bool commutes = false;
  bool fiberwise_invertible = false;
  std::vector<std::string> violations;
};

// Verifies that the assembled map commutes with every sl_{n+1} generator on
// interior(2) of G and that every graded scalar is nonzero.
inline IntertwinerReport intertwiner_check(const CuspidalModule& g, const ShenLarssonModule& t) {
  IntertwinerReport report;
  Intertwiner phi = build_intertwiner(g, t);
  report.fiberwise_invertible = true;
  for (const auto& r : g.box.points()) {
    for (int b = 0; b < g.fiber->dim; ++b)
      if (sgn(phi.phi(r, b)) == 0) {
        report.fiberwise_invertible = false;
        report.violations.push_back("vanishing scale factor inside the box");
      }
    if (!report.fiberwise_invertible) break;
  }
  report.commutes = true;
  const int d = g.fiber->dim;
  for (const SlElem& x : sl_basis(g.n)) {
    for (const auto& r : g.box.points(2)) {
      for (int b = 0; b < d; ++b) {
        Vec e = vec_zero(d);
        e[b] = 1;
        auto gstep = g.apply_point(x, r, e);
        if (!gstep) {
          report.violations.push_back("G operator " + x.name() + " undefined on interior(2)");
          report.commutes = false;
          continue;
        }
        auto lhs = phi.map_point(t, gstep->first, gstep->second);
        auto base = phi.map_point(t, r, e);
        if (!lhs || !base) {
          report.violations.push_back("map image leaves the T box for " + x.name());
          report.commutes = false;
          continue;
        }
        auto rhs = t.apply(x, *base);
        if (!rhs) {
          report.violations.push_back("T operator " + x.name() + " undefined on mapped image");
          report.commutes = false;
          continue;
        }
        if (!boxvec_equal(*lhs, *rhs)) {
          report.violations.push_back("map fails to intertwine " + x.name());
          report.commutes = false;
        }
      }
      if (!report.commutes) break;
    }
    if (!report.commutes) break;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Fiber-level W-action (untwisted): x_ij as e_ij - e_ii and omega_k as the
// gamma elements; closures decide irreducibility of the fiber.

inline std::vector<SparseMat> fiber_w_action(const Representation& rep) {
  std::vector<SparseMat> ops;
  for (int i = 1; i <= rep.n; ++i)
    for (int j = 1; j <= rep.n; ++j)
      if (i != j) ops.push_back(rep.element_matrix(tau_x(rep.n, i, j)));
  for (int k = 1; k <= rep.n; ++k) ops.push_back(rep.element_matrix(gamma_elem(rep.n, k)));
  return ops;
}

inline RowSpace fiber_closure(const std::vector<SparseMat>& ops, int dim,
                              const std::vector<Vec>& seeds) {
  RowSpace space(dim);
  std::vector<Vec> work;
  for (const Vec& s : seeds)
    if (space.insert(s)) work.push_back(s);
  while (!work.empty()) {
    Vec v = std::move(work.back());
    work.pop_back();
    for (const SparseMat& m : ops) {
      Vec w = m.apply(v);
      if (space.insert(w)) work.push_back(std::move(w));
    }
  }
  return space;
}

// Decides irreducibility of the fiber under the W-action exactly: the
// unital algebra generated by the action matrices spans all of End(V)
// precisely when every nonzero vector generates the whole fiber. The span
// is computed by rank-stabilizing iteration over flattened matrices.
inline bool fiber_w_irreducibility(const Representation& rep) {
  auto ops = fiber_w_action(rep);
  const int d = rep.dim;
  auto flatten = [&](const SparseMat& m) {
    Vec v = vec_zero(d * d);
    for (int r = 0; r < d; ++r)
      for (const auto& [c, val] : m.row(r)) v[r * d + c] = val;
    return v;
  };
  RowSpace span(d * d);
  std::vector<SparseMat> work;
  SparseMat id = SparseMat::identity(d);
  span.insert(flatten(id));
  work.push_back(id);
  while (!work.empty()) {
    SparseMat m = std::move(work.back());
    work.pop_back();
    for (const SparseMat& g : ops) {
      SparseMat prod = g * m;
      if (span.insert(flatten(prod))) work.push_back(std::move(prod));
    }
    if (span.rank() == d * d) return true;
  }
  return span.rank() == d * d;
}

// For a reducible fiber the candidate proper subspace is the exp(X)-twist
// of the singular-vector submodule; returns its closure when proper.
inline std::optional<RowSpace> fiber_proper_subspace(std::shared_ptr<const Representation> rep_ptr) {
  const Representation& rep = *rep_ptr;
  WOperatorSet ops = build_operator_set(rep_ptr, WFlavor::SigmaTau);
  SparseMat expX = matrix_exp_nilpotent(rep.element_matrix(x_sum(rep.n)));
  auto fops = fiber_w_action(rep);
  for (int s = 1; s <= rep.n - 1; ++s) {
    auto sv = singular_vector_test(ops, s);
    if (!sv.condition_holds || !sv.verified) continue;
    RowSpace cl = fiber_closure(fops, rep.dim, {expX.apply(sv.witness)});
    if (cl.rank() < rep.dim) return cl;
  }
  return std::nullopt;
}

// Desk-scale surrogate for irreducibility of the full module: the closure
// of a single box vector under all partial operators, restricted to
// interior(depth), must span every interior fiber.
inline bool box_closure_spans_interior(const CuspidalModule& g, const BoxVec& seed, int depth) {
  const auto box_points = g.box.points();
  std::map<LatticePoint, int> pidx;
  int np = 0;
  for (const auto& p : box_points) pidx[p] = np++;
  const int d = g.fiber->dim;
  const int total = np * d;
  auto flatten = [&](const BoxVec& v) {
    Vec out = vec_zero(total);
    for (const auto& [p, w] : v)
      for (int u = 0; u < d; ++u) out[pidx.at(p) * d + u] = w[u];
    return out;
  };
  RowSpace space(total);
  std::vector<BoxVec> work;
  if (space.insert(flatten(seed))) work.push_back(seed);
  const auto basis = sl_basis(g.n);
  while (!work.empty()) {
    BoxVec v = std::move(work.back());
    work.pop_back();
    for (const SlElem& x : basis) {
      // partial application: skip pieces that would leave the box
      BoxVec out;
      bool any = false;
      for (const auto& [r, w] : v) {
        auto res = g.apply_point(x, r, w);
        if (res) {
          boxvec_add(out, res->first, res->second);
          any = true;
        }
      }
      if (!any || out.empty()) continue;
      if (space.insert(flatten(out))) work.push_back(std::move(out));
    }
  }
  // restrict to interior coordinates and compare ranks
  const auto interior = g.box.points(depth);
  std::set<int> keep;
  for (const auto& p : interior)
    for (int u = 0; u < d; ++u) keep.insert(pidx.at(p) * d + u);
  std::vector<Vec> restricted;
  for (const Vec& row : space.rows()) {
    Vec r;
    r.reserve(keep.size());
    for (int kcol : keep) r.push_back(row[kcol]);
    if (!vec_is_zero(r)) restricted.push_back(std::move(r));
  }
  return rank_of(std::move(restricted), static_cast<int>(keep.size())) ==
         static_cast<int>(keep.size());
}

}  // namespace wcusp
