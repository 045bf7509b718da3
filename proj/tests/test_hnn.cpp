#include <doctest.h>

#include <random>

#include "lorder/claims.hpp"
#include "lorder/hnn.hpp"
#include "oracles.hpp"

using namespace lorder;

namespace {

CyclicHnn bs(std::int64_t m, std::int64_t n) { return CyclicHnn(CyclicGroup("a"), CyclicOracle(m), CyclicOracle(n)); }

FreeHnn free_extension() {
  const auto e = FreeExponents::standard();
  return FreeHnn(FreeGroup(Alphabet::make({"a", "b"})), FreeSubgroupOracle(SubgroupGraph::build(u_words(e))),
                 FreeSubgroupOracle(SubgroupGraph::build(v_words(e))));
}

GammaHnn gamma_extension(int n) {
  std::vector<GammaElement> fe, ge;
  for (const auto& w : f_words(n)) fe.push_back(gamma_eval(n, w));
  for (const auto& w : g_words(n)) ge.push_back(gamma_eval(n, w));
  return GammaHnn(GammaGroup(n), LatticeOracle(LatticeBasis::build(fe)), LatticeOracle(LatticeBasis::build(ge)));
}

}  // namespace

TEST_CASE("BS(1,2)") {
  const auto g = bs(1, 2);
  CHECK(g.is_identity(g.parse("t a t^-1 a^-2")));
  CHECK_FALSE(g.is_identity(g.parse("t^-1 a t")));
  CHECK(g.format(g.britton_reduce(g.parse("t^-1 a^2 t"))) == "a");
  CHECK(g.format(g.britton_reduce(g.parse("t a^3 t^-1"))) == "a^6");
  CHECK(g.format(g.britton_reduce(g.parse("t^-1 a^3 t"))) == "t^-1 a^3 t");
  // [t a t^-1, a] = 1 since t a t^-1 = a^2
  CHECK(g.is_identity(g.parse("t a t^-1 a t a^-1 t^-1 a^-1")));
  // t^-1 a t is a square root of a, so it commutes with a
  CHECK(g.is_identity(g.parse("t^-1 a t a t^-1 a^-1 t a^-1")));
  CHECK_FALSE(g.is_identity(g.parse("t^-1 a^-1 t a")));
}

TEST_CASE("Klein bottle relation") {
  const CyclicHnn k(CyclicGroup("b"), CyclicOracle(1), CyclicOracle(-1));
  CHECK(k.is_identity(k.parse("t b t^-1 b")));
  CHECK(k.is_identity(k.parse("t^2 b t^-2 b^-1")));
  CHECK_FALSE(k.is_identity(k.parse("t b t^-1 b^-1")));
}

TEST_CASE("phi follows the pairing") {
  const auto g = free_extension();
  const auto a = Alphabet::make({"a", "b"});
  CHECK(g.phi(Word::parse(a, "a b")).str() == "a b");
  CHECK(g.phi(Word::parse(a, "a^4 b^4")).str() == "a^-4 b^-4");
  CHECK(g.phi(Word::parse(a, "a^5 b^-5 a b")).str() == "a^5 b^5 a b");
  CHECK(g.phi_inverse(Word::parse(a, "a^2 b^-2")).str() == "a^2 b^2");
  CHECK_THROWS_AS(g.phi(Word::parse(a, "a")), OracleInconsistency);
}

TEST_CASE("reduced words with t are never trivial") {
  const auto g = free_extension();
  CHECK_FALSE(g.is_identity(g.parse("t a t^-1")));
  CHECK(g.is_identity(g.parse("t a b t^-1 b^-1 a^-1")));  // v_1 = u_1
  CHECK_FALSE(g.is_identity(g.parse("t a^2 b^2 t^-1 b^-2 a^-2")));
  CHECK(g.is_identity(g.parse("t a^4 b^4 t^-1 b^4 a^4")));
  const auto r = g.britton_reduce(g.parse("t a^2 b^2 a b t^-1"));
  CHECK(r.t_length() == 0);
  CHECK(g.format(r) == "a^2 b^-2 a b");
}

TEST_CASE("multiplication and inverses") {
  std::mt19937_64 rng(47);
  const auto g = gamma_extension(12);
  const auto sx = gamma_alphabet();
  auto random_element = [&] {
    GammaHnn::Element e = g.identity();
    std::uniform_int_distribution<int> pieces(0, 4), sign(0, 1);
    for (int i = pieces(rng); i > 0; --i) {
      e = g.mul(e, g.from_base(gamma_eval(12, oracle::random_word(rng, sx, 3, 3))));
      e = g.mul(e, g.stable_letter(sign(rng) ? 1 : -1));
    }
    return e;
  };
  for (int i = 0; i < 300; ++i) {
    const auto a = random_element(), b = random_element(), c = random_element();
    CHECK(g.is_identity(g.mul(a, g.inv(a))));
    CHECK(g.key(g.britton_reduce(g.mul(g.mul(a, b), c))) == g.key(g.britton_reduce(g.mul(a, g.mul(b, c)))));
  }
}

TEST_CASE("relators on all three backends") { CHECK(britton_relator_suite(53, 1000).passed); }

TEST_CASE("parse and format") {
  const auto g = free_extension();
  CHECK(g.format(g.parse("t a t^-1")) == "t a t^-1");
  CHECK(g.format(g.parse("t^2 b")) == "t t b");
  CHECK(g.format(g.identity()) == "1");
  CHECK_THROWS_AS(g.parse("t c"), ParseError);
}
