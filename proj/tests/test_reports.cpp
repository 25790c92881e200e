#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wcusp/suites.hpp"

using namespace wcusp;

TEST_CASE("representation export") {
  auto rep = build_irreducible(2, {Rat(1), Rat(0)});
  Json j = representation_json(rep);
  CHECK(j["n"] == 2);
  CHECK(j["dimension"] == 2);
  CHECK(j["lambda"] == Json::array({"1", "0"}));
  CHECK(j["weights"].size() == 2);
  // e_21 maps the highest weight vector to the lowered one with coefficient 1
  Json e21 = j["action"]["e[2,1]"];
  REQUIRE(e21.size() == 1);
  CHECK(e21[0] == Json::array({1, 0, "1"}));
  // diagonal entries carry the weights as p/q strings
  Json e11 = j["action"]["e[1,1]"];
  REQUIRE(e11.size() == 1);
  CHECK(e11[0] == Json::array({0, 0, "1"}));
}

TEST_CASE("composition report schema") {
  auto rep = std::make_shared<Representation>(build_irreducible(2, {Rat(1), Rat(0)}));
  Json j = composition_json(composition_structure(rep));
  CHECK(j["lambda"] == Json::array({"1", "0"}));
  CHECK(j["case"] == 3);
  CHECK(j["eta_n"] == "0");
  CHECK(j["length"] == 2);
  CHECK(j["submodule_dim"] == 1);
  REQUIRE(j["factors"].size() == 2);
  CHECK(j["factors"][0].contains("hw"));
  CHECK(j["factors"][0].contains("dim"));
  CHECK(j["violations"].empty());
}

TEST_CASE("cuspidal report schema") {
  auto rep = std::make_shared<Representation>(build_irreducible(2, {Rat(1), Rat(0)}));
  Weight mu{Rat(1, 3), Rat(1, 5)};
  auto g = build_G(mu, rep, 3);
  auto rel = check_sl_relations(g, 2);
  std::map<std::string, bool> inj;
  for (const SlElem& x : sl_basis(2))
    if (!x.cartan) inj[x.name()] = injectivity_check(g, x);
  Json j = cuspidal_report_json(g, rel, inj, true);
  CHECK(j["params"]["n"] == 2);
  CHECK(j["radius"] == 3);
  CHECK(j["violations"].empty());
  CHECK(j["injectivity"].size() == 6);
  CHECK(j["intertwiner_ok"] == true);

  Json ops = cuspidal_operators_json(g);
  CHECK(ops.contains("e[0,1]"));
  CHECK(ops.contains("h[1]"));
  // shift blocks carry source/target keys
  CHECK(ops["e[0,1]"][0].contains("source"));
  CHECK(ops["e[0,1]"][0].contains("target"));
}

TEST_CASE("suite reports are deterministic for a fixed config and seed") {
  RunConfig cfg;
  cfg.n = 2;
  cfg.suite = "identities";
  cfg.seed = 12345;
  Json a = suite_report_json(run_config(cfg));
  Json b = suite_report_json(run_config(cfg));
  normalize_timing(a);
  normalize_timing(b);
  CHECK(a.dump() == b.dump());
  CHECK(a["violations"] == 0);
}

TEST_CASE("suite text output carries one line per check") {
  RunConfig cfg;
  cfg.n = 2;
  cfg.suite = "identities";
  SuiteReport rep = run_config(cfg);
  std::string text = suite_report_text(rep);
  std::size_t lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == rep.checks.size() + 1);  // one per check plus the summary
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);
}

TEST_CASE("check ids are sorted and unique") {
  RunConfig cfg;
  cfg.n = 2;
  cfg.suite = "all";
  SuiteReport rep = run_config(cfg);
  for (std::size_t t = 0; t + 1 < rep.checks.size(); ++t)
    CHECK(rep.checks[t].id < rep.checks[t + 1].id);
}
