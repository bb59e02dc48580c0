#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gradix/run.hpp"
#include "gradix/selftest.hpp"

using namespace gradix;
using io::json;

namespace {

json load(const std::string& name) {
  std::ifstream in(std::string(GRADIX_REQUESTS_DIR) + "/" + name);
  return io::parse_json(in, name);
}

std::string error_text(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, ParseErrorsCarryLineAndColumn) {
  auto msg = error_text([] { io::parse_json("{\n  \"a\": 1,,\n}", "req.json"); });
  EXPECT_EQ(msg.rfind("ParseError: req.json:2:", 0), 0u) << msg;
  auto bad = error_text([] { load("bad_syntax.json"); });
  EXPECT_NE(bad.find("bad_syntax.json:3:"), std::string::npos) << bad;
}

TEST(Io, ValidationMessages) {
  auto p4 = error_text([] { run(load("bad_p_not_prime.json"), {}); });
  EXPECT_NE(p4.find("NotPrime"), std::string::npos) << p4;
  EXPECT_NE(p4.find("p = 4"), std::string::npos) << p4;
  auto n2 = error_text([] { run(load("bad_n2_violation.json"), {}); });
  EXPECT_EQ(n2.find("N2Violation"), 0u) << n2;
  EXPECT_NE(n2.find("(g,h,s) = ("), std::string::npos) << n2;
  auto missing = error_text([] { run(json{{"kind", "algebra"}, {"payload", json::object()}}, {}); });
  EXPECT_NE(missing.find("ValidationError"), std::string::npos) << missing;
  auto kind = error_text([] { run(json{{"kind", "ring"}, {"payload", json::object()}}, {}); });
  EXPECT_NE(kind.find("request.kind"), std::string::npos) << kind;
}

TEST(Io, AlgebraRoundTrip) {
  PrimeField f3(3);
  auto o = catalog::octonions(f3);
  auto j = io::to_json(o);
  auto back = io::algebra_from_json(f3, j);
  EXPECT_EQ(back.entries().size(), o.entries().size());
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) EXPECT_EQ(back.basis_product(a, b), o.basis_product(a, b));
  EXPECT_EQ(back.involution(), o.involution());
  EXPECT_EQ(io::to_json(back), j);

  RationalField q;
  auto h = catalog::quaternion(q, boost::multiprecision::cpp_rational(-1, 2), boost::multiprecision::cpp_rational(3));
  auto hb = io::algebra_from_json(q, io::to_json(h));
  EXPECT_EQ(io::to_json(hb), io::to_json(h));
}

TEST(Io, SystemsRoundTrip) {
  auto sys = catalog::quaternion_cocycle_system();
  auto j = io::to_json(sys);
  auto back = io::crossed_from_json(PrimeField(3), j);
  EXPECT_EQ(io::to_json(back), j);
  LaurentRing<PrimeField> ring(catalog::f4(), {catalog::f4_frobenius()});
  auto lj = io::to_json(ring);
  EXPECT_EQ(io::to_json(io::laurent_from_json(PrimeField(2), lj)), lj);
  auto x = laurent_add(ring, ring.one(), ring.monomial(Vec<PrimeField>{0, 1}, {-3}));
  auto xj = io::to_json(ring, x);
  EXPECT_TRUE(laurent_equal(ring, io::laurent_element_from_json(ring, xj, "x"), x));
}

TEST(Run, GradedGroupRing) {
  auto rep = run(load("f2z2_graded.json"), {});
  EXPECT_EQ(rep["kind"], "graded");
  const auto& cc = rep["result"]["central_criterion"];
  EXPECT_EQ(cc["hypercentral"], true);
  EXPECT_EQ(cc["graded_simple"], true);
  EXPECT_EQ(cc["center_is_field"], false);
  EXPECT_EQ(cc["simple"], false);
  EXPECT_EQ(cc["consistent"], true);
  EXPECT_EQ(cc["simple_witness"]["type"], "proper-ideal");
  EXPECT_FALSE(rep.contains("timing_ms"));
}

TEST(Run, OctonionTower) {
  auto rep = run(load("octonion_tower.json"), {});
  const auto& stages = rep["result"]["stages"];
  ASSERT_EQ(stages.size(), 4u);
  EXPECT_EQ(stages[3]["dim"], 8);
  EXPECT_EQ(stages[3]["simple"], true);
  EXPECT_EQ(stages[3]["report"]["brute_simple"], true);
  EXPECT_EQ(stages[3]["associative"], false);
  EXPECT_EQ(stages[1]["simple"], false);
  EXPECT_EQ(stages[0]["report"], nullptr);
  EXPECT_EQ(rep["result"]["verdict"]["final_simple"], true);
}

TEST(Run, LaurentF4) {
  auto rep = run(load("f4_frobenius_laurent.json"), {});
  const auto& r = rep["result"];
  EXPECT_EQ(r["sigma_simple"], true);
  EXPECT_EQ(r["simple"], false);
  EXPECT_EQ(r["witness"]["type"], "inner");
  EXPECT_EQ(r["witness"]["m"], json::array({2}));
  EXPECT_EQ(r["central_witness"]["type"], "central-element");
  EXPECT_EQ(r["central_verified"], true);
  EXPECT_EQ(r["center_structure"]["matches_description"], true);
}

TEST(Run, WitnessCheckRoundTrip) {
  auto req = load("f3xf3.json");
  auto rep = run(req, {});
  const auto& w = rep["result"]["simplicity"]["witness"];
  ASSERT_TRUE(w.is_object());
  auto check = run(json{{"kind", "check"}, {"payload", {{"request", req}, {"witness", w}}}}, {});
  EXPECT_EQ(check["result"]["verified"], true);
  json forged = w;
  forged["element"] = json::array({"1", "1"});
  auto out = execute(json{{"kind", "check"}, {"payload", {{"request", req}, {"witness", forged}}}}, {});
  EXPECT_EQ(out.report["result"]["verified"], false);
  EXPECT_EQ(out.exit_code, 1);
}

TEST(Run, BudgetExhaustionExitsTwo) {
  RunOptions opt;
  opt.search.budget = 10;
  auto out = execute(load("quaternions_f3.json"), opt);
  EXPECT_EQ(out.exit_code, 2);
  EXPECT_EQ(out.report["error"]["class"], "BudgetExceeded");
  auto bad = execute(load("bad_n2_violation.json"), {});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(bad.report["error"]["code"], "N2Violation");
}

TEST(Run, OptionsFromDocumentAndOverrides) {
  auto o = options_from_json(json{{"budget", 50}, {"seed", 7}, {"mode", "randomized"}, {"trials", 3}});
  EXPECT_EQ(o.search.budget, 50u);
  EXPECT_EQ(o.search.seed, 7u);
  EXPECT_EQ(o.search.trials, 3u);
  EXPECT_EQ(o.search.mode, SearchMode::Randomized);
  EXPECT_THROW(options_from_json(json{{"budget", 0}}), Error);
  EXPECT_THROW(options_from_json(json{{"seed", -1}}), Error);
  EXPECT_THROW(options_from_json(json{{"mode", "fast"}}), Error);
  auto layered = options_from_json(json{{"trials", 9}}, o);
  EXPECT_EQ(layered.search.trials, 9u);
  EXPECT_EQ(layered.search.budget, 50u);
  EXPECT_EQ(options_from_json(options_to_json(o)).search.seed, 7u);
}

TEST(Run, RandomizedRationalRequest) {
  RunOptions opt;
  opt.search.seed = 3;
  auto a = run(load("quaternions_q_randomized.json"), opt);
  auto b = run(load("quaternions_q_randomized.json"), opt);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["result"]["verdict"]["mode"], "randomized");
}

TEST(Run, EveryExampleRequest) {
  namespace fs = std::filesystem;
  std::size_t seen = 0;
  for (const auto& entry : fs::directory_iterator(GRADIX_REQUESTS_DIR)) {
    const auto name = entry.path().filename().string();
    if (entry.path().extension() != ".json") continue;
    ++seen;
    int code = 0;
    try {
      code = execute(load(name), {}).exit_code;
    } catch (const Error& e) {
      code = exit_code_for(e.code());
    }
    if (name.rfind("bad_", 0) == 0)
      EXPECT_EQ(code, 1) << name;
    else
      EXPECT_EQ(code, 0) << name;
  }
  EXPECT_GE(seen, 10u);
}

TEST(Run, AsRequestAndPretty) {
  auto payload = load("octonion_tower.json")["payload"];
  auto req = as_request(payload, "cayley-tower");
  EXPECT_EQ(req["kind"], "cayley-tower");
  EXPECT_THROW(as_request(load("quaternions_f3.json"), "cayley-tower"), Error);
  std::ostringstream out;
  render_pretty(out, json{{"a", 1}, {"b", {{"c", json::array({1, 2})}}}, {"d", json::array({json{{"e", "x"}}})}});
  EXPECT_EQ(out.str(), "a: 1\nb:\n  c: [1,2]\nd:\n  - [0]\n    e: x\n");
}
