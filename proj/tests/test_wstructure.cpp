#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wcusp/wstructure.hpp"

using namespace wcusp;

namespace {

std::shared_ptr<const Representation> module_of(const Weight& lambda) {
  return std::make_shared<Representation>(
      build_irreducible(static_cast<int>(lambda.size()), lambda));
}

// Dot-orbit oracle: walk all permutations of the shifted entries and keep
// the ones that reassemble into a dominant weight with matching size.
std::set<Weight> dot_orbit_by_permutations(const Weight& lambda) {
  const int n = static_cast<int>(lambda.size());
  std::vector<Rat> b = shifted_multiset(lambda);
  std::sort(b.begin(), b.end());
  std::set<Weight> found;
  std::vector<int> perm(b.size());
  for (std::size_t t = 0; t < perm.size(); ++t) perm[t] = static_cast<int>(t);
  do {
    Weight nu;
    for (int t = 1; t <= n; ++t) nu.push_back(b[perm[t]] + t);
    Rat nu0 = b[perm[0]];
    if (!is_dominant(nu)) continue;
    if (nu0 != -weight_sum(nu)) continue;
    found.insert(nu);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

}  // namespace

TEST_CASE("operator sets on small modules") {
  auto triv = module_of({Rat(0), Rat(0)});
  auto ops = build_operator_set(triv, WFlavor::SigmaTau);
  CHECK(ops.y(2).is_zero());
  CHECK(ops.e(1, 1).is_zero());

  auto nat = module_of({Rat(1), Rat(0)});
  auto ops2 = build_operator_set(nat, WFlavor::SigmaTau);
  CHECK(vec_is_zero(ops2.y(2).apply(nat->hw_vector())));

  auto r = module_of({Rat(1), Rat(-1)});
  auto ops3 = build_operator_set(r, WFlavor::SigmaTau);
  Vec v = r->hw_vector();
  Vec y = ops3.y(2).apply(v);
  for (int t = 0; t < r->dim; ++t) CHECK(y[t] == Rat(2) * v[t]);

  // both flavors pass the commutation table on a rank-3 module
  auto r3 = module_of({Rat(1), Rat(0), Rat(0)});
  CHECK_NOTHROW(build_operator_set(r3, WFlavor::SigmaTau));
  CHECK_NOTHROW(build_operator_set(r3, WFlavor::Tau));
}

TEST_CASE("triangular split covers the generator list") {
  for (int n = 2; n <= 4; ++n) {
    auto pos = w_positive_part(n), zer = w_zero_part(n), neg = w_negative_part(n);
    CHECK(pos.size() + zer.size() + neg.size() == w_generator_list(n).size());
  }
}

TEST_CASE("submodule closures") {
  auto nat = module_of({Rat(1), Rat(0)});
  auto ops = build_operator_set(nat, WFlavor::SigmaTau);
  // the highest weight vector is cyclic
  CHECK(submodule_closure(ops, {nat->hw_vector()}).rank() == 2);
  // the lowered vector spans the proper submodule
  Vec low = nat->apply_gen(2, 1, nat->hw_vector());
  CHECK(submodule_closure(ops, {low}).rank() == 1);

  // wedge module: wedges containing the last index form a stable subspace
  auto w = std::make_shared<Representation>(wedge_module(3, 2));
  auto wops = build_operator_set(w, WFlavor::SigmaTau);
  int seed_idx = -1;
  for (int t = 0; t < w->dim; ++t)
    if (w->weights[t][2] == 1) seed_idx = t;
  Vec seed = vec_zero(w->dim);
  seed[seed_idx] = 1;
  CHECK(submodule_closure(wops, {seed}).rank() == 2);  // C(n-1, k-1) = C(2,1)
}

TEST_CASE("singular vector detection") {
  auto nat = module_of({Rat(1), Rat(0)});
  auto ops = build_operator_set(nat, WFlavor::SigmaTau);
  auto sv = singular_vector_test(ops, 1);
  CHECK(sv.condition_holds);
  CHECK(sv.verified);
  CHECK(sv.k == 1);
  CHECK(sv.witness == nat->apply_gen(2, 1, nat->hw_vector()));

  auto triv = module_of({Rat(0), Rat(0)});
  auto ops0 = build_operator_set(triv, WFlavor::SigmaTau);
  CHECK_FALSE(singular_vector_test(ops0, 1).condition_holds);

  auto half = module_of({Rat(3, 2), Rat(1, 2)});
  auto opsh = build_operator_set(half, WFlavor::SigmaTau);
  CHECK_FALSE(singular_vector_test(opsh, 1).condition_holds);
}

TEST_CASE("key operator identity") {
  auto nat = module_of({Rat(1), Rat(0)});
  auto ops = build_operator_set(nat, WFlavor::SigmaTau);
  CHECK(key_identity_check(ops, 1, 1));

  auto r20 = module_of({Rat(2), Rat(0)});
  auto ops2 = build_operator_set(r20, WFlavor::SigmaTau);
  CHECK(key_identity_check(ops2, 1, 1));
  CHECK(key_identity_check(ops2, 1, 2));

  auto r3 = module_of({Rat(2), Rat(1), Rat(0)});
  auto ops3 = build_operator_set(r3, WFlavor::SigmaTau);
  for (int s = 1; s <= 2; ++s)
    for (long k = 1; k <= 3; ++k) CHECK(key_identity_check(ops3, s, k));

  // rational highest weights satisfy the identity as well
  auto rq = module_of({Rat(5, 2), Rat(1, 2)});
  auto opsq = build_operator_set(rq, WFlavor::SigmaTau);
  for (long k = 1; k <= 2; ++k) CHECK(key_identity_check(opsq, 1, k));
  CHECK_THROWS_AS(key_identity_check(opsq, 0, 1), std::invalid_argument);
}

TEST_CASE("eta invariant") {
  auto e0 = eta_invariant({Rat(0), Rat(0), Rat(0)});
  CHECK(e0.eta == Rat(0));
  CHECK(e0.k == 1);
  auto e1 = eta_invariant({Rat(1), Rat(0)});
  CHECK(e1.eta == Rat(0));
  CHECK(e1.k == 2);
  auto e2 = eta_invariant({Rat(1), Rat(-1)});
  CHECK(e2.eta == Rat(2));
  CHECK(e2.k == 3);

  // matrix cross-check on a module with nonzero eta
  auto rep = module_of({Rat(1), Rat(-1)});
  auto ops = build_operator_set(rep, WFlavor::SigmaTau);
  Vec v = rep->hw_vector();
  Vec y = ops.y(2).apply(v);
  for (int t = 0; t < rep->dim; ++t) CHECK(y[t] == e2.eta * v[t]);
}

TEST_CASE("dot orbit classes") {
  auto c1 = dot_orbit_class({Rat(3, 2), Rat(1, 2)});
  CHECK(c1.tag == CentralCase::Nonintegral);
  CHECK(c1.mu == Weight{Rat(3, 2), Rat(1, 2)});

  auto c2 = dot_orbit_class({Rat(1), Rat(-1)});
  CHECK(c2.tag == CentralCase::Degenerate);

  auto c3 = dot_orbit_class({Rat(0), Rat(-3)});
  CHECK(c3.tag == CentralCase::Chain);
  CHECK(c3.position == 0);
  REQUIRE(c3.chain.size() == 3);
  CHECK(c3.chain[1] == Weight{Rat(4), Rat(-3)});
  CHECK(c3.chain[2] == Weight{Rat(4), Rat(1)});
  std::vector<Rat> ms = shifted_multiset({Rat(0), Rat(-3)});
  CHECK(ms == std::vector<Rat>{Rat(-5), Rat(-1), Rat(3)});
  for (const auto& w : c3.chain) CHECK(shifted_multiset(w) == ms);

  // the element (1,0) sits at position 1 of the chain based at (0,0)
  auto c4 = dot_orbit_class({Rat(1), Rat(0)});
  CHECK(c4.tag == CentralCase::Chain);
  CHECK(c4.position == 1);
  CHECK(c4.mu == Weight{Rat(0), Rat(0)});
}

TEST_CASE("dot orbit matches the permutation oracle") {
  for (const Weight& lambda : std::vector<Weight>{{Rat(0), Rat(-3)},
                                                  {Rat(4), Rat(-3)},
                                                  {Rat(1), Rat(0)},
                                                  {Rat(0), Rat(0), Rat(0)},
                                                  {Rat(2), Rat(1), Rat(-4)}}) {
    auto cls = dot_orbit_class(lambda);
    if (cls.tag != CentralCase::Chain) continue;
    std::set<Weight> expected(cls.chain.begin(), cls.chain.end());
    CHECK(dot_orbit_by_permutations(lambda) == expected);
  }
  // singleton classes stay singletons under the oracle
  CHECK(dot_orbit_by_permutations({Rat(1), Rat(-1)}) == std::set<Weight>{{Rat(1), Rat(-1)}});
}

TEST_CASE("composition structure on the named examples") {
  auto rep1 = module_of({Rat(3, 2), Rat(1, 2)});
  auto c1 = composition_structure(rep1);
  CHECK(c1.length == 1);
  CHECK(c1.violations.empty());

  auto rep2 = module_of({Rat(1), Rat(-1)});
  auto c2 = composition_structure(rep2);
  CHECK(c2.length == 1);
  CHECK(c2.violations.empty());

  auto rep3 = module_of({Rat(1), Rat(0)});
  auto c3 = composition_structure(rep3);
  CHECK(c3.length == 2);
  CHECK(c3.submodule_dim == 1);
  CHECK(c3.violations.empty());
  REQUIRE(c3.factors.size() == 2);
  CHECK(c3.factors[0].dim + c3.factors[1].dim == rep3->dim);
  // top factor highest weight carries (lambda_1, eta_n)
  CHECK(c3.factors[1].hw == Weight{Rat(1), Rat(0)});
}

TEST_CASE("composition along the chain from (0,-3)") {
  auto cls = dot_orbit_class({Rat(0), Rat(-3)});
  std::vector<int> lengths;
  for (const Weight& w : cls.chain) {
    auto rep = module_of(w);
    lengths.push_back(composition_structure(rep).length);
  }
  CHECK(lengths == std::vector<int>{1, 2, 1});
}

TEST_CASE("reducibility condition is sharp at desk scale") {
  // weights where no index satisfies the condition: every branching vector
  // generates everything
  for (const Weight& lambda : std::vector<Weight>{{Rat(0), Rat(0)},
                                                  {Rat(2), Rat(0)},
                                                  {Rat(3, 2), Rat(1, 2)},
                                                  {Rat(1), Rat(-1)},
                                                  {Rat(1), Rat(1), Rat(0)}}) {
    const int n = static_cast<int>(lambda.size());
    bool any = false;
    for (int s = 1; s <= n - 1; ++s) any = any || reducibility_condition(lambda, s);
    if (any) continue;
    auto rep = module_of(lambda);
    auto ops = build_operator_set(rep, WFlavor::SigmaTau);
    for (auto& [mu, v] : branch_restriction(*rep))
      CHECK(submodule_closure(ops, {v}).rank() == rep->dim);
  }
}

TEST_CASE("twisted and untwisted flavors give the same lengths") {
  for (const Weight& lambda : std::vector<Weight>{{Rat(1), Rat(0)},
                                                  {Rat(1), Rat(-1)},
                                                  {Rat(3, 2), Rat(1, 2)},
                                                  {Rat(1), Rat(0), Rat(0)},
                                                  {Rat(1), Rat(1), Rat(0)}}) {
    auto rep = module_of(lambda);
    CHECK(composition_length_tau(rep) == composition_structure(rep).length);
  }
}

TEST_CASE("fundamental sequence is exact for n = 2, 3, 4") {
  for (int n = 2; n <= 4; ++n) {
    auto fs = fundamental_sequence_check(n);
    CHECK(fs.intertwines);
    CHECK(fs.exact);
    REQUIRE(static_cast<int>(fs.image_dims.size()) == n);
    long binom = 1;  // C(n-1, k-1) for k = 1..n
    for (int k = 1; k <= n; ++k) {
      CHECK(fs.image_dims[k - 1] == binom);
      binom = binom * (n - k) / k;
    }
    int alternating = 0, sign = 1;
    for (int d : fs.dims) {
      alternating += sign * d;
      sign = -sign;
    }
    CHECK(alternating == 0);
  }
}

TEST_CASE("chain sequences are exact") {
  auto ch = chain_sequence_check({Rat(0), Rat(-3)});
  CHECK(ch.intertwines);
  CHECK(ch.exact);
  CHECK(ch.dims == std::vector<int>{4, 8, 4});
  CHECK(ch.image_dims == std::vector<int>{4, 4});

  auto ch3 = chain_sequence_check({Rat(0), Rat(0), Rat(0)});
  CHECK(ch3.intertwines);
  CHECK(ch3.exact);
  CHECK(ch3.dims == std::vector<int>{1, 3, 3, 1});

  CHECK_THROWS_AS(chain_sequence_check({Rat(3), Rat(0)}), std::invalid_argument);
}

TEST_CASE("chain middle terms have composition length 2") {
  auto rep = module_of({Rat(4), Rat(-3)});
  auto comp = composition_structure(rep);
  CHECK(comp.length == 2);
  CHECK(comp.submodule_dim == 4);
  CHECK(comp.violations.empty());
}

TEST_CASE("the monomial witness can miss the submodule head off the last column") {
  // At (2,0,-1) the condition holds at s = 1 with k = 2, and the module is
  // reducible, but e_31^2 v+ itself is not singular: e_12 maps it onto
  // -2 e_31 e_32 v+, which is nonzero since lambda_2 - lambda_3 = 1. The
  // submodule head is the branching vector at (0,0) instead. For s = n-1
  // the monomial vector is the head, as on (4,-3) above.
  Weight lambda{Rat(2), Rat(0), Rat(-1)};
  long k = 0;
  REQUIRE(reducibility_condition(lambda, 1, &k));
  CHECK(k == 2);
  auto rep = module_of(lambda);
  auto ops = build_operator_set(rep, WFlavor::SigmaTau);
  auto sv = singular_vector_test(ops, 1);
  CHECK(sv.condition_holds);
  CHECK_FALSE(sv.verified);
  Vec w = sv.witness;
  CHECK_FALSE(vec_is_zero(w));
  CHECK_FALSE(vec_is_zero(rep->apply_gen(1, 2, w)));
  CHECK(submodule_closure(ops, {w}).rank() == rep->dim);  // generates everything

  auto comp = composition_structure(rep);
  CHECK(comp.length == 2);
  CHECK(comp.submodule_dim == 3);
  CHECK(comp.violations.empty());
  // the actual head: the branching vector of weight (0,0), singular and proper
  for (auto& [mu, v] : branch_restriction(*rep)) {
    if (mu != Weight{Rat(0), Rat(0)}) continue;
    for (const WGen& g : ops.positive) CHECK(vec_is_zero(ops.mat(g).apply(v)));
    CHECK(submodule_closure(ops, {v}).rank() == 3);
  }
}
