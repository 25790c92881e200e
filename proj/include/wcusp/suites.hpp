#pragma once

// Named verification suites over the library: each check evaluates one
// mathematical statement exactly and reports pass/fail with a stable
// identifier. The CLI and the acceptance harness both drive these.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "report.hpp"
#include "rng.hpp"

namespace wcusp {

struct RunConfig {
  int n = 2;
  std::optional<Weight> lambda;
  std::optional<Weight> mu;
  int radius = 3;
  std::string suite = "all";
  std::string format = "text";
  std::uint64_t seed = 0;
  std::optional<std::string> out;
};

inline Weight default_lambda(int n) {
  Weight w(static_cast<std::size_t>(n), Rat(0));
  w[0] = 1;
  return w;
}

inline Weight default_mu(int n) {
  Weight w;
  for (int i = 0; i < n; ++i) w.push_back(Rat(1, 2 * i + 3));  // 1/3, 1/5, 1/7, ...
  return w;
}

class CheckRunner {
 public:
  void run(const std::string& id, const std::string& anchor,
           const std::function<std::pair<bool, std::string>()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult c;
    c.id = id;
    c.anchor = anchor;
    try {
      auto [ok, detail] = fn();
      c.pass = ok;
      c.detail = detail;
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
    results_.push_back(std::move(c));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

inline AlgebraElement random_element(SplitMix64& rng, int n, int max_deg, int terms) {
  AlgebraElement out = AlgebraElement::zero(n);
  for (int t = 0; t < terms; ++t) {
    AlgebraElement mono = AlgebraElement::one(n);
    long deg = rng.range(0, max_deg);
    for (long d = 0; d < deg; ++d) {
      int i = static_cast<int>(rng.range(1, n));
      int j = static_cast<int>(rng.range(1, n));
      mono = mono * AlgebraElement::gen(n, i, j);
    }
    long c = rng.range(-2, 2);
    if (c == 0) c = 1;
    out += mono * Rat(c);
  }
  return out;
}

// Independent rewriting route for confluence checks: resolves a randomly
// chosen adjacent inversion at every step instead of the first one.
inline AlgebraElement random_order_normalize(SplitMix64& rng, int m, std::vector<GenCode> word) {
  std::map<std::vector<GenCode>, Rat> pending;
  pending[std::move(word)] = 1;
  AlgebraElement out = AlgebraElement::zero(m);
  while (!pending.empty()) {
    auto it = pending.begin();
    std::vector<GenCode> w = it->first;
    Rat c = it->second;
    pending.erase(it);
    if (sgn(c) == 0) continue;
    std::vector<std::size_t> inversions;
    for (std::size_t t = 0; t + 1 < w.size(); ++t)
      if (w[t] > w[t + 1]) inversions.push_back(t);
    if (inversions.empty()) {
      AlgebraElement mono = AlgebraElement::one(m);
      for (GenCode g : w) {
        auto [i, j] = gen_rowcol(m, g);
        mono = mono * AlgebraElement::gen(m, i, j);
      }
      out += mono * c;
      continue;
    }
    std::size_t p = inversions[rng.below(inversions.size())];
    std::vector<GenCode> swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    pending[swapped] += c;
    for (const BracketTerm& bt : gl_bracket(m, w[p], w[p + 1])) {
      std::vector<GenCode> shorter;
      shorter.insert(shorter.end(), w.begin(), w.begin() + p);
      shorter.push_back(bt.gen);
      shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
      pending[shorter] += c * bt.sign;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

inline void suite_identities(CheckRunner& r, int n, std::uint64_t seed) {
  const std::string pre = "identities.n" + std::to_string(n) + ".";

  r.run(pre + "01-pbw-normal-form", "pbw-normal-form", [&]() {
    if (!(normal_order(n, std::vector<GenCode>{}) == AlgebraElement::one(n)))
      return std::make_pair(false, std::string("empty word is not the identity"));
    auto br = commutator(AlgebraElement::gen(n, 2, 1), AlgebraElement::gen(n, 1, 2));
    if (!(br == AlgebraElement::gen(n, 2, 2) - AlgebraElement::gen(n, 1, 1)))
      return std::make_pair(false, std::string("[e21,e12] != e22 - e11"));
    auto e11 = AlgebraElement::gen(n, 1, 1);
    auto e21 = AlgebraElement::gen(n, 2, 1);
    auto lhs = e11 * e11 * e21;
    auto rhs = e21 * e11 * e11 - Rat(2) * e21 * e11 + e21;
    if (!(lhs == rhs)) return std::make_pair(false, std::string("e11*e11*e21 straightening wrong"));
    return std::make_pair(true, std::string("unit, bracket and straightening forms agree"));
  });

  r.run(pre + "02-sigma-twist-images", "sigma-twist-images", [&]() {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        auto lhs = apply_sigma(AlgebraElement::gen(n, i, j) - AlgebraElement::gen(n, i, n));
        if (!(lhs == AlgebraElement::gen(n, i, j)))
          return std::make_pair(false, "image of e[" + std::to_string(i) + "," +
                                           std::to_string(j) + "]-e[i,n] wrong");
      }
    for (int j = 1; j <= n - 1; ++j) {
      auto lhs = apply_sigma(AlgebraElement::gen(n, n, j) - AlgebraElement::gen(n, n, n));
      auto rhs = AlgebraElement::gen(n, n, j);
      for (int k = 1; k <= n - 1; ++k) rhs -= AlgebraElement::gen(n, k, j);
      if (!(lhs == rhs)) return std::make_pair(false, std::string("bottom-row image wrong"));
    }
    auto in1 = identity_sum_upto(n, n - 1);
    for (int i = 1; i <= n - 1; ++i) {
      auto lhs = apply_sigma(gamma_elem(n, i));
      auto rhs = gamma_elem(n, i) +
                 AlgebraElement::gen(n, i, n) * (in1 - AlgebraElement::scalar(n, n - 1));
      for (int j = 1; j <= n - 1; ++j)
        rhs += AlgebraElement::gen(n, i, j) * AlgebraElement::gen(n, j, n);
      if (!(lhs == rhs)) return std::make_pair(false, "gamma image wrong at i=" + std::to_string(i));
    }
    {
      auto lhs = apply_sigma(gamma_elem(n, n));
      auto rhs = gamma_elem(n, n) +
                 AlgebraElement::gen(n, n, n) * (in1 - AlgebraElement::scalar(n, n - 1));
      for (int k = 1; k <= n - 1; ++k) {
        rhs += AlgebraElement::gen(n, n, k) * AlgebraElement::gen(n, k, n);
        rhs -= apply_sigma(gamma_elem(n, k));
      }
      if (!(lhs == rhs)) return std::make_pair(false, std::string("gamma image wrong at i=n"));
    }
    return std::make_pair(true, std::string("all twist images match the closed forms"));
  });

  r.run(pre + "03-sigma-automorphism", "sigma-automorphism", [&]() {
    SplitMix64 rng(seed ^ 0x5151u);
    for (int t = 0; t < 3; ++t) {
      auto a = random_element(rng, n, 3, 2);
      auto b = random_element(rng, n, 3, 2);
      if (!(apply_sigma(a * b) == apply_sigma(a) * apply_sigma(b)))
        return std::make_pair(false, std::string("multiplicativity fails"));
      if (!(apply_sigma(apply_sigma(a), true) == a))
        return std::make_pair(false, std::string("inverse round trip fails"));
    }
    return std::make_pair(true, std::string("multiplicative, invertible on sampled elements"));
  });

  r.run(pre + "04-w-generator-commutators", "w-commutation-table", [&]() {
    auto in1 = identity_sum_upto(n, n - 1);
    auto nn = AlgebraElement::scalar(n, n);
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        for (int k = 1; k <= n - 1; ++k) {
          auto lhs = commutator(AlgebraElement::gen(n, i, j), y_elem(n, k));
          auto rhs = (j == k) ? y_elem(n, i) : AlgebraElement::zero(n);
          if (!(lhs == rhs)) return std::make_pair(false, std::string("[e_ij, y_k] wrong"));
        }
        if (!commutator(AlgebraElement::gen(n, i, j), y_elem(n, n)).is_zero())
          return std::make_pair(false, std::string("[e_ij, y_n] nonzero"));
      }
    for (int i = 1; i <= n - 1; ++i)
      for (int k = 1; k <= n - 1; ++k)
        if (!commutator(y_elem(n, i), y_elem(n, k)).is_zero())
          return std::make_pair(false, std::string("[y_i, y_k] nonzero"));
    for (int j = 1; j <= n - 1; ++j) {
      for (int k = 1; k <= n - 1; ++k) {
        auto lhs = commutator(AlgebraElement::gen(n, n, j), y_elem(n, k));
        auto rhs = AlgebraElement::zero(n);
        if (j == k) rhs += y_elem(n, n);
        rhs -= AlgebraElement::gen(n, k, j) * (in1 - nn);
        for (int l = 1; l <= n - 1; ++l)
          rhs -= AlgebraElement::gen(n, k, l) * AlgebraElement::gen(n, l, j);
        if (!(lhs == rhs)) return std::make_pair(false, std::string("[e_nj, y_k] wrong"));
      }
      auto lhs = commutator(AlgebraElement::gen(n, n, j), y_elem(n, n));
      auto rhs = AlgebraElement::zero(n) - AlgebraElement::gen(n, n, j) * (in1 - nn);
      for (int l = 1; l <= n - 1; ++l)
        rhs -= AlgebraElement::gen(n, n, l) * AlgebraElement::gen(n, l, j);
      if (!(lhs == rhs)) return std::make_pair(false, std::string("[e_nj, y_n] wrong"));
    }
    return std::make_pair(true, std::string("full commutation table verified"));
  });

  r.run(pre + "05-twisted-generator-span", "twisted-generator-span", [&]() {
    for (int k = 1; k <= n - 1; ++k) {
      auto lhs = apply_sigma(gamma_elem(n, k));
      auto rhs = y_elem(n, k);
      for (int j = 1; j <= n - 1; ++j) {
        rhs += AlgebraElement::gen(n, k, j) * AlgebraElement::gen(n, j, j);
        rhs -= AlgebraElement::gen(n, k, j);
      }
      if (!(lhs == rhs))
        return std::make_pair(false, "twist of gamma_" + std::to_string(k) + " misses y_k");
    }
    auto lhs = apply_sigma(gamma_elem(n, n));
    for (int k = 1; k <= n - 1; ++k) lhs += apply_sigma(gamma_elem(n, k));
    auto rhs = y_elem(n, n);
    for (int j = 1; j <= n - 1; ++j) {
      rhs += AlgebraElement::gen(n, n, j) * AlgebraElement::gen(n, j, j);
      rhs -= AlgebraElement::gen(n, n, j);
    }
    if (!(lhs == rhs)) return std::make_pair(false, std::string("twist sum misses y_n"));
    return std::make_pair(true, std::string("generators lie in the twisted image"));
  });

  if (n == 2) {
    r.run(pre + "06-rank2-presentation", "rank2-presentation", [&]() {
      auto e11 = AlgebraElement::gen(2, 1, 1);
      auto e21 = AlgebraElement::gen(2, 2, 1);
      auto y1 = y_elem(2, 1), y2 = y_elem(2, 2);
      auto one = AlgebraElement::one(2);
      if (!(commutator(e11, y1) == y1)) return std::make_pair(false, std::string("[e11,y1] != y1"));
      if (!(commutator(y1, e21) == Rat(2) * e11 * (e11 - one) - y2))
        return std::make_pair(false, std::string("[y1,e21] wrong"));
      if (!(commutator(e11, e21) == -e21))
        return std::make_pair(false, std::string("[e11,e21] != -e21"));
      if (!commutator(e11, y2).is_zero())
        return std::make_pair(false, std::string("[e11,y2] nonzero"));
      if (!(commutator(y2, e21) == Rat(2) * e21 * (e11 - one)))
        return std::make_pair(false, std::string("[y2,e21] wrong"));
      return std::make_pair(true, std::string("all five presentation relations hold"));
    });

    r.run(pre + "07-central-element-constant", "central-element", [&]() {
      auto c = central_constant_rank2();
      if (!c) return std::make_pair(false, std::string("no unique centralizing constant"));
      auto e11 = AlgebraElement::gen(2, 1, 1);
      AlgebraElement center = y_elem(2, 2) + e11 * e11 + (*c) * e11;
      std::string detail = "y2 + e11^2 + c*e11 is central for the unique c = " + rat_str(*c) +
                           "; canonical form " + center.to_string();
      if (*c != Rat(-1, 2)) detail += "; differs from the commonly quoted -1/2";
      return std::make_pair(true, detail);
    });
  }

  r.run(pre + "08-pbw-confluence", "pbw-confluence", [&]() {
    SplitMix64 rng(seed ^ 0xC0FFEEu);
    const int m = 3;
    auto gens = all_generators(m);
    for (int t = 0; t < 40; ++t) {
      std::vector<GenCode> word;
      long len = rng.range(2, 4);
      for (long u = 0; u < len; ++u) word.push_back(gens[rng.below(gens.size())]);
      auto reference = normal_order(m, word);
      for (int route = 0; route < 3; ++route)
        if (!(random_order_normalize(rng, m, word) == reference))
          return std::make_pair(false, std::string("rewriting routes disagree"));
    }
    return std::make_pair(true, std::string("all rewriting routes reach one normal form"));
  });

  r.run(pre + "09-jacobi", "jacobi-identity", [&]() {
    SplitMix64 rng(seed ^ 0x1ACB1u);
    for (int t = 0; t < 15; ++t) {
      auto a = random_element(rng, n, 2, 2);
      auto b = random_element(rng, n, 2, 2);
      auto c = random_element(rng, n, 2, 2);
      auto jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                 commutator(c, commutator(a, b));
      if (!jac.is_zero()) return std::make_pair(false, std::string("Jacobi sum nonzero"));
    }
    return std::make_pair(true, std::string("Jacobi identity holds on sampled triples"));
  });
}

// ---------------------------------------------------------------------------

inline void suite_glrep(CheckRunner& r, int n, const Weight& lambda) {
  const std::string pre = "glrep.n" + std::to_string(n) + ".";
  auto rep = std::make_shared<Representation>(build_irreducible(n, lambda));

  r.run(pre + "01-weyl-dimension", "weyl-dimension", [&]() {
    Rat expect = weyl_dimension(lambda);
    if (Rat(rep->dim) != expect)
      return std::make_pair(false, "dim " + std::to_string(rep->dim) + " != " + rat_str(expect));
    return std::make_pair(true, "dim V" + weight_str(lambda) + " = " + std::to_string(rep->dim));
  });

  r.run(pre + "02-module-brackets", "module-brackets", [&]() {
    return std::make_pair(verify_gl_brackets(*rep), std::string("all generator pairs"));
  });

  r.run(pre + "03-highest-weight", "highest-weight-structure", [&]() {
    return std::make_pair(verify_highest_weight(*rep),
                          std::string("raising operators kill it; diagonals match weights"));
  });

  r.run(pre + "04-branching-rule", "branching-rule", [&]() {
    auto branches = branch_restriction(*rep);
    auto expected = interlacings(lambda);
    if (branches.size() != expected.size())
      return std::make_pair(false, "found " + std::to_string(branches.size()) +
                                       " components, expected " + std::to_string(expected.size()));
    std::set<Weight> got, want;
    for (const auto& [mu, v] : branches) got.insert(mu);
    for (const auto& mu : expected) want.insert(mu);
    if (got != want) return std::make_pair(false, std::string("component sets differ"));
    Rat dims(0);
    for (const auto& mu : expected) dims += weyl_dimension(mu);
    if (dims != Rat(rep->dim))
      return std::make_pair(false, std::string("component dimensions do not sum to dim"));
    return std::make_pair(true, std::to_string(branches.size()) + " components, dims sum to " +
                                    std::to_string(rep->dim));
  });

  r.run(pre + "05-det-twist", "det-twist", [&]() {
    Representation tw = rep->det_twist(Rat(1, 2));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        if (!(tw.action(i, j) == rep->action(i, j)))
          return std::make_pair(false, std::string("off-diagonal action changed"));
      }
    for (int i = 1; i <= n; ++i)
      if (!(tw.action(i, i) == rep->action(i, i) + SparseMat::scalar(rep->dim, Rat(1, 2))))
        return std::make_pair(false, std::string("diagonal shift wrong"));
    return std::make_pair(true, std::string("twist by 1/2 shifts diagonals only"));
  });

  r.run(pre + "06-wedge-fundamental", "wedge-modules", [&]() {
    for (int k = 0; k <= n; ++k) {
      Representation w = wedge_module(n, k);
      Weight delta(static_cast<std::size_t>(n), Rat(0));
      for (int t = 0; t < k; ++t) delta[t] = 1;
      if (Rat(w.dim) != weyl_dimension(delta))
        return std::make_pair(false, "wedge " + std::to_string(k) + " dimension wrong");
      if (!(w.weights[w.hw_index] == delta))
        return std::make_pair(false, "wedge " + std::to_string(k) + " highest weight wrong");
      if (!verify_gl_brackets(w))
        return std::make_pair(false, "wedge " + std::to_string(k) + " brackets fail");
    }
    return std::make_pair(true, std::string("wedge realizations match the fundamental weights"));
  });

  r.run(pre + "07-apply-homomorphism", "action-homomorphism", [&]() {
    SplitMix64 rng(0xA11CEu);
    for (int t = 0; t < 4; ++t) {
      auto a = random_element(rng, n, 2, 2);
      auto b = random_element(rng, n, 2, 2);
      Vec v = vec_zero(rep->dim);
      v[static_cast<int>(rng.below(static_cast<std::uint64_t>(rep->dim)))] = 1;
      Vec lhs = rep->apply_element(a * b, v);
      Vec rhs = rep->apply_element(a, rep->apply_element(b, v));
      if (!(lhs == rhs)) return std::make_pair(false, std::string("apply(ab) != apply(a)apply(b)"));
    }
    return std::make_pair(true, std::string("action respects products"));
  });

  if (rep->dim <= 200) {
    r.run(pre + "08-irreducibility-witness", "irreducibility-witness", [&]() {
      std::vector<SparseMat> all;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) all.push_back(rep->action(i, j));
      Vec seed = vec_zero(rep->dim);
      seed[rep->dim - 1] = 1;
      RowSpace cl = fiber_closure(all, rep->dim, {seed});
      if (cl.rank() != rep->dim)
        return std::make_pair(false, std::string("single weight vector does not generate"));
      return std::make_pair(true, std::string("one weight vector generates the module"));
    });
  }
}

// ---------------------------------------------------------------------------

inline void suite_wstructure(CheckRunner& r, int n, const Weight& lambda) {
  const std::string pre = "wstructure.n" + std::to_string(n) + ".";
  auto rep = std::make_shared<Representation>(build_irreducible(n, lambda));

  std::optional<WOperatorSet> ops;
  r.run(pre + "01-operator-set", "w-operator-set", [&]() {
    ops = build_operator_set(rep, WFlavor::SigmaTau);  // relation check inside
    return std::make_pair(true, "commutation table verified on dim " + std::to_string(rep->dim));
  });
  if (!ops) return;

  r.run(pre + "02-eta-invariant", "eta-invariant", [&]() {
    EtaInvariant eta = eta_invariant(lambda);
    Vec v = rep->hw_vector();
    Vec yv = ops->y(n).apply(v);
    for (int t = 0; t < rep->dim; ++t)
      if (yv[t] != eta.eta * v[t])
        return std::make_pair(false, std::string("y_n is not the expected scalar on v+"));
    return std::make_pair(true,
                          "eta = " + rat_str(eta.eta) + ", k-witness = " + std::to_string(eta.k));
  });

  r.run(pre + "03-singular-vectors", "singular-vectors", [&]() {
    std::string detail;
    for (int s = 1; s <= n - 1; ++s) {
      auto sv = singular_vector_test(*ops, s);
      if (sv.condition_holds) {
        if (!sv.verified)
          return std::make_pair(false, "condition holds at s=" + std::to_string(s) +
                                           " but the vector check fails");
        detail += (detail.empty() ? "" : "; ") + std::string("s=") + std::to_string(s) +
                  " k=" + std::to_string(sv.k);
      }
    }
    if (detail.empty()) detail = "condition holds at no s";
    return std::make_pair(true, detail);
  });

  r.run(pre + "04-key-operator-identity", "key-operator-identity", [&]() {
    for (int s = 1; s <= n - 1; ++s)
      for (long k = 1; k <= 2; ++k)
        if (!key_identity_check(*ops, s, k))
          return std::make_pair(false,
                                "fails at s=" + std::to_string(s) + " k=" + std::to_string(k));
    return std::make_pair(true, std::string("identity holds for sampled (s,k)"));
  });

  std::optional<CompositionReport> comp;
  r.run(pre + "05-composition", "composition-classification", [&]() {
    comp = composition_structure(rep);
    std::string detail = "case " + std::to_string(static_cast<int>(comp->cls.tag)) + ", length " +
                         std::to_string(comp->length);
    if (comp->length == 2) detail += ", submodule dim " + std::to_string(comp->submodule_dim);
    return std::make_pair(comp->violations.empty(),
                          comp->violations.empty() ? detail : comp->violations.front());
  });

  r.run(pre + "06-dot-orbit", "dot-orbit-classes", [&]() {
    auto cls = dot_orbit_class(lambda);  // self-validating
    std::string detail = "case " + std::to_string(static_cast<int>(cls.tag));
    if (cls.tag == CentralCase::Chain) {
      detail += ", position " + std::to_string(cls.position) + ", chain";
      for (const auto& w : cls.chain) detail += " " + weight_str(w);
    }
    return std::make_pair(true, detail);
  });

  if (comp) {
    r.run(pre + "07-flavor-equivalence", "flavor-equivalence", [&]() {
      int lt = composition_length_tau(rep);
      if (lt != comp->length)
        return std::make_pair(false, "untwisted length " + std::to_string(lt) +
                                         " != " + std::to_string(comp->length));
      return std::make_pair(true, std::string("lengths agree across the twist"));
    });
  }

  r.run(pre + "08-fundamental-sequence", "fundamental-sequence", [&]() {
    auto fs = fundamental_sequence_check(n);
    std::string detail = "image dims";
    for (int d : fs.image_dims) detail += " " + std::to_string(d);
    return std::make_pair(fs.intertwines && fs.exact, detail);
  });

  auto cls = dot_orbit_class(lambda);
  if (cls.tag == CentralCase::Chain) {
    Rat total(0);
    for (const auto& w : cls.chain) total += weyl_dimension(w);
    if (total <= 120) {
      r.run(pre + "09-chain-sequence", "chain-sequence", [&]() {
        auto ch = chain_sequence_check(cls.mu);
        std::string detail = "dims";
        for (int d : ch.dims) detail += " " + std::to_string(d);
        return std::make_pair(ch.intertwines && ch.exact, detail);
      });
    }
  }
}

// ---------------------------------------------------------------------------

inline void suite_cuspidal(CheckRunner& r, int n, const Weight& lambda, const Weight& mu,
                           int radius) {
  const std::string pre = "cuspidal.n" + std::to_string(n) + ".";
  auto rep = std::make_shared<Representation>(build_irreducible(n, lambda));
  const bool cusp = cuspidality_criterion(mu, lambda);

  r.run(pre + "01-criterion", "cuspidality-criterion", [&]() {
    return std::make_pair(true, std::string("criterion evaluates to ") + (cusp ? "true" : "false"));
  });

  CuspidalModule g = build_G(mu, rep, radius);

  r.run(pre + "02-sl-relations", "sl-relations", [&]() {
    auto rel = check_sl_relations(g, 2);
    return std::make_pair(rel.violations.empty(),
                          std::to_string(rel.pairs_checked) + " pairs, " +
                              std::to_string(rel.violations.size()) + " violations");
  });

  r.run(pre + "03-root-injectivity", "root-injectivity", [&]() {
    bool all = true;
    std::string failed;
    for (const SlElem& x : sl_basis(n)) {
      if (x.cartan) continue;
      if (!injectivity_check(g, x)) {
        all = false;
        failed += " " + x.name();
      }
    }
    if (all != cusp)
      return std::make_pair(false, std::string("injectivity does not match the criterion") +
                                       (failed.empty() ? "" : ";" + failed));
    std::string detail = all ? "all root vectors injective on interior(1)"
                             : "kernel found (parameters not cuspidal):" + failed;
    return std::make_pair(true, detail);
  });

  r.run(pre + "04-weight-spaces", "weight-spaces", [&]() {
    for (const auto& p : g.box.points()) {
      for (int k = 1; k <= n; ++k) {
        SparseMat h = g.fiber_matrix({true, k, 0}, p);
        if (!(h == SparseMat::scalar(rep->dim, mu[k - 1] - p[k - 1])))
          return std::make_pair(false, std::string("h_k not the expected scalar at a point"));
      }
    }
    return std::make_pair(true, "every lattice point carries a fiber of dim " +
                                    std::to_string(rep->dim));
  });

  // depth of the fiber weight poset fixes the enlarged radius of T needed
  // by the isomorphism; the relation sweep itself is local and runs on the
  // base radius
  int dmax = 0;
  for (const auto& w : rep->weights)
    for (std::size_t t = 0; t < w.size(); ++t)
      dmax = std::max(dmax, static_cast<int>(std::abs(to_long(lambda[t] - w[t]))));
  ShenLarssonModule tmod = build_T(mu, rep, radius + dmax + 1);

  r.run(pre + "05-shen-larsson-relations", "sl-relations-polynomial", [&]() {
    ShenLarssonModule tsmall = build_T(mu, rep, radius);
    auto rel = check_sl_relations(tsmall, 2);
    return std::make_pair(rel.violations.empty(),
                          std::to_string(rel.pairs_checked) + " pairs, " +
                              std::to_string(rel.violations.size()) + " violations");
  });

  if (cusp) {
    r.run(pre + "06-module-isomorphism", "module-isomorphism", [&]() {
      auto iw = intertwiner_check(g, tmod);
      if (!iw.commutes || !iw.fiberwise_invertible)
        return std::make_pair(false,
                              iw.violations.empty() ? std::string("failed") : iw.violations.front());
      return std::make_pair(true, std::string("commutes with every generator; invertible fibers"));
    });
  }

  r.run(pre + "07-fiber-irreducibility", "fiber-irreducibility", [&]() {
    auto cls = dot_orbit_class(lambda);
    const bool predicted_irreducible =
        !(cls.tag == CentralCase::Chain && cls.position >= 1 && cls.position <= n - 1);
    bool computed = fiber_w_irreducibility(*rep);
    if (computed != predicted_irreducible)
      return std::make_pair(false, std::string("disagrees with the case classification"));
    if (!computed) {
      auto proper = fiber_proper_subspace(rep);
      if (!proper) return std::make_pair(false, std::string("no proper stable subspace found"));
      return std::make_pair(true, "reducible fiber; proper stable subspace of dim " +
                                      std::to_string(proper->rank()));
    }
    return std::make_pair(true, std::string("fiber irreducible under the W-action"));
  });

  if (cusp && fiber_w_irreducibility(*rep) && g.box.count(0) * rep->dim <= 300) {
    r.run(pre + "08-box-irreducibility", "box-irreducibility", [&]() {
      BoxVec seed;
      seed[LatticePoint(static_cast<std::size_t>(n), 0)] = rep->hw_vector();
      bool ok = box_closure_spans_interior(g, seed, 2);
      return std::make_pair(ok, std::string("closure of one box vector spans interior(2)"));
    });
  }
}

// ---------------------------------------------------------------------------

struct SuiteReport {
  RunConfig config;
  std::vector<CheckResult> checks;

  int violations() const {
    int v = 0;
    for (const auto& c : checks)
      if (!c.pass) ++v;
    return v;
  }
};

inline SuiteReport run_config(const RunConfig& cfg) {
  CheckRunner runner;
  Weight lambda = cfg.lambda.value_or(default_lambda(cfg.n));
  Weight mu = cfg.mu.value_or(default_mu(cfg.n));
  if (cfg.suite == "identities" || cfg.suite == "all") suite_identities(runner, cfg.n, cfg.seed);
  if (cfg.suite == "glrep" || cfg.suite == "all") suite_glrep(runner, cfg.n, lambda);
  if (cfg.suite == "wstructure" || cfg.suite == "all") suite_wstructure(runner, cfg.n, lambda);
  if (cfg.suite == "cuspidal" || cfg.suite == "all")
    suite_cuspidal(runner, cfg.n, lambda, mu, cfg.radius);
  SuiteReport report;
  report.config = cfg;
  report.checks = runner.take();
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return report;
}

inline Json config_json(const RunConfig& cfg) {
  Json j;
  j["n"] = cfg.n;
  j["lambda"] = weight_json(cfg.lambda.value_or(default_lambda(cfg.n)));
  j["mu"] = weight_json(cfg.mu.value_or(default_mu(cfg.n)));
  j["radius"] = cfg.radius;
  j["suite"] = cfg.suite;
  j["format"] = cfg.format;
  j["seed"] = cfg.seed;
  return j;
}

inline Json suite_report_json(const SuiteReport& report) {
  Json j;
  j["config"] = config_json(report.config);
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(check_json(c));
  j["checks"] = std::move(checks);
  j["violations"] = report.violations();
  return j;
}

inline std::string suite_report_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks)
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << " :: " << c.anchor << " :: " << c.detail
       << " (" << c.millis << " ms)\n";
  os << report.checks.size() << " checks, " << report.violations() << " violation(s)\n";
  return os.str();
}

}  // namespace wcusp
