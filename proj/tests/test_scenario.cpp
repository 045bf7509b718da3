#include <doctest.h>

#include <json.hpp>

#include "lorder/claims.hpp"
#include "lorder/scenario.hpp"

using namespace lorder;

namespace {

std::string path(const char* name) { return std::string(LORDER_SCENARIO_DIR) + "/" + name; }

int line_of(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("parse errors point at the line") {
  CHECK(line_of("group free\nalphabet a b\nelement g = a c\n") == -1);  // words are checked at run time
  CHECK(line_of("group nope\n") == 1);
  CHECK(line_of("group free\n\n# c\nbogus 1\n") == 4);
  CHECK(line_of("group free\ndepth x\n") == 2);
  CHECK(line_of("group free\ndepth 0\n") == 2);
  CHECK(line_of("group free\nelement = a\n") == 2);
  CHECK(line_of("group free\nelement g = a\nelement g = b\n") == 3);
  CHECK(line_of("group free\nwitness + * : 0\n") == 2);
  CHECK(line_of("alphabet a\n") > 0);
  try {
    parse_scenario("group free\nmode  sideways\n");
  } catch (const ParseError& e) {
    CHECK(e.column() == 7);
  }
}

TEST_CASE("bad words are reported with their line") {
  const auto sc = parse_scenario("group free\nalphabet a b\nelement g = a\nelement h = a c\n");
  try {
    run_scenario(sc);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(run_scenario(parse_scenario("group free\nalphabet a\nelement g = a a^-1\n")), InvalidArgument);
  CHECK_THROWS_AS(run_scenario(parse_scenario("group hnn-free\nalphabet a t\nA a\nB a\n")), InvalidArgument);
  CHECK_THROWS_AS(run_scenario(parse_scenario("group hnn-free\nalphabet a b\nA a\nB a\nB b\n")), InvalidArgument);
  CHECK_THROWS_AS(load_scenario(path("missing.scn")), ParseError);
}

TEST_CASE("text round trip") {
  const Scenario sc = tampered_free_hnn_scenario();
  const Scenario back = parse_scenario(to_text(sc));
  CHECK(to_text(back) == to_text(sc));
  CHECK(back.witnesses.size() == 16);
  CHECK(back.b_gens.front().text == "a^2 b^-2");
}

TEST_CASE("shipped scenarios") {
  const Report free = run_scenario(load_scenario(path("free_hnn.scn")));
  CHECK(free.verdict == Verdict::not_left_orderable);
  CHECK(free.cone->witnessed() == 16);
  CHECK(exit_code(free) == 0);

  const Report poly = run_scenario(load_scenario(path("polycyclic_gamma.scn")));
  CHECK(poly.verdict == Verdict::not_left_orderable);
  CHECK(exit_code(poly) == 0);

  const Report klein = run_scenario(load_scenario(path("klein_bottle.scn")));
  CHECK(klein.verdict == Verdict::inconclusive);
  CHECK(exit_code(klein) == 0);

  const Report tampered = run_scenario(load_scenario(path("free_hnn_tampered.scn")));
  CHECK(tampered.cone->rejected() > 0);
  CHECK(exit_code(tampered) == 1);

  const Report gamma = run_scenario(load_scenario(path("gamma_hnn.scn")));
  CHECK(gamma.cone->witnessed() >= 8);
  CHECK(exit_code(gamma) == 0);

  // a shallow run of a refutable scenario is INCONCLUSIVE against its expectation
  const Report shallow = run_scenario(load_scenario(path("polycyclic_gamma.scn")), {.depth = 2, .threads = 1});
  CHECK(exit_code(shallow) == 2);
}

TEST_CASE("elements outside Gamma fail a check") {
  const auto sc = parse_scenario("group polycyclic\nelement t = t\nelement x = x\ndepth 2\n");
  const Report r = run_scenario(sc);
  CHECK_FALSE(r.all_passed());
  CHECK(exit_code(r) == 1);
}

TEST_CASE("hnn-gamma rejects a non-abelian subgroup") {
  const auto sc = parse_scenario("group hnn-gamma\nn 12\nA s\nA x\nB s\nB x\nelement s = s\n");
  const Report r = run_scenario(sc);
  CHECK_FALSE(r.all_passed());
  CHECK(r.verdict == Verdict::inconclusive);
}

TEST_CASE("reports are deterministic") {
  const Scenario sc = gamma_hnn_scenario(12, 5);
  const std::string a = render(run_scenario(sc, {.depth = std::nullopt, .threads = 1}), ReportFormat::json);
  const std::string b = render(run_scenario(sc, {.depth = std::nullopt, .threads = 6}), ReportFormat::json);
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["format"] == kReportFormat);
  CHECK(j["report"]["cone"]["assignments"].size() == 16);
  CHECK(j["report"]["cone"]["assignments"][1]["reported_only"] == true);
  CHECK(j["report"]["cone"]["assignments"][0]["verified"] == true);
}
