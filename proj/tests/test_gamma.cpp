#include <doctest.h>

#include <random>

#include "lorder/claims.hpp"
#include "lorder/gamma.hpp"
#include "oracles.hpp"

using namespace lorder;

namespace {

GammaElement G(int n, const char* text) { return gamma_eval(n, Word::parse(gamma_alphabet(), text)); }

std::vector<std::int64_t> unit_run(int n, int from, int to, int v) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
  for (int i = from; i <= to; ++i) e[static_cast<std::size_t>(i)] = v;
  return e;
}

}  // namespace

TEST_CASE("canonical forms against the affine model") {
  std::mt19937_64 rng(17);
  for (int n : {2, 3, 12, 13}) {
    for (int i = 0; i < 1000; ++i) {
      const Word w = oracle::random_word(rng, gamma_alphabet(), 12, 14);
      const auto model = oracle::gamma_affine(n, w);
      const GammaElement g = gamma_eval(n, w);
      CHECK(g.shift() == model.counter);
      CHECK(g.exps() == model.exps());
      CHECK(gamma_eval(n, g.to_word(gamma_alphabet())) == g);
    }
  }
}

TEST_CASE("f and g at n = 12") {
  const int n = 12;
  const auto f = f_words(n), g = g_words(n);
  CHECK(gamma_eval(n, f[0]) == GammaElement(n, 12, unit_run(n, 11, 11, 1)));
  CHECK(gamma_eval(n, f[1]) == GammaElement(n, 12, unit_run(n, 10, 11, 1)));
  CHECK(gamma_eval(n, f[2]) == GammaElement(n, 12, unit_run(n, 8, 11, 1)));
  CHECK(gamma_eval(n, f[3]) == GammaElement(n, 12, unit_run(n, 4, 11, 1)));
  CHECK(gamma_eval(n, g[0]) == GammaElement(n, 12, unit_run(n, 11, 11, 1)));
  CHECK(gamma_eval(n, g[1]) == GammaElement(n, 12, unit_run(n, 10, 11, -1)));
  CHECK(gamma_eval(n, g[2]) == GammaElement(n, -12, unit_run(n, 1, 4, 1)));
  CHECK(gamma_eval(n, g[3]) == GammaElement(n, -12, unit_run(n, 1, 8, -1)));
  for (int m : {12, 13, 20}) {
    std::vector<GammaElement> fe, ge;
    for (const auto& w : f_words(m)) fe.push_back(gamma_eval(m, w));
    for (const auto& w : g_words(m)) ge.push_back(gamma_eval(m, w));
    CHECK(fe == f_expected(m));
    CHECK(ge == g_expected(m));
    CHECK(LatticeBasis::build(fe).rank() == 4);
    CHECK(LatticeBasis::build(ge).rank() == 4);
  }
}

TEST_CASE("defining relations") {
  for (int n : {2, 5, 12}) {
    const auto s = GammaElement::s(n), x = GammaElement::x(n);
    CHECK(s.pow(n) * x == x * s.pow(n));
    for (int i = 1; i < n; ++i) {
      const auto xi = s.pow(i) * x * s.pow(-i);
      CHECK(x * xi == xi * x);
      CHECK_FALSE(xi == x);
    }
    CHECK_FALSE(s * x == x * s);
  }
}

TEST_CASE("sigma and the order") {
  const int n = 12;
  CHECK(sigma(G(n, "s^3 x^2")) == 5);
  CHECK(exps_sum(G(n, "s^3 x^2 s^-1 x^-1 s")) == 1);
  CHECK(gamma_positive(G(n, "x")));
  CHECK(gamma_positive(G(n, "s")));
  CHECK_FALSE(gamma_positive(G(n, "s^5 x^-1")));
  CHECK(gamma_positive(G(n, "s^-5 x")));
  // Sigma of the x-part is 0 and the shift is 0: lexicographic on exps.
  CHECK(gamma_positive(G(n, "x s x^-1 s^-1")));
  CHECK(gamma_compare(G(n, "s"), G(n, "s")) == std::strong_ordering::equal);
  CHECK(gamma_compare(G(n, "1"), G(n, "x")) == std::strong_ordering::less);
}

TEST_CASE("order properties and torsion") {
  for (int n : {12, 13}) {
    CHECK(gamma_order_suite(n, 100 + static_cast<unsigned>(n), 3000).passed);
    CHECK(gamma_torsion_suite(n, 200 + static_cast<unsigned>(n), 300, 20).passed);
  }
}

TEST_CASE("lattice membership and coordinates") {
  const int n = 12;
  std::vector<GammaElement> fe;
  for (const auto& w : f_words(n)) fe.push_back(gamma_eval(n, w));
  const auto basis = LatticeBasis::build(fe);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::int64_t> coords{c(rng), c(rng), c(rng), c(rng)};
    GammaElement g(n);
    for (std::size_t j = 0; j < 4; ++j) g = g * fe[j].pow(coords[j]);
    REQUIRE(basis.contains(g));
    CHECK(basis.coords(g) == coords);
    CHECK(basis.evaluate(coords) == g);
  }
  CHECK_FALSE(basis.contains(GammaElement::x(n)));
  CHECK_FALSE(basis.contains(GammaElement::s(n)));
  CHECK_FALSE(basis.contains(fe[0].pow(2) * fe[1] * GammaElement::x(n)));
  CHECK_THROWS_AS(basis.coords(GammaElement::x(n)), NotAMember);
}

TEST_CASE("lattice preconditions") {
  const int n = 12;
  CHECK_THROWS_AS(LatticeBasis::build(std::vector<GammaElement>{GammaElement::s(n), GammaElement::x(n)}),
                  InvalidArgument);
  // commuting, but s^3 is not a translation of the (shift | exps) lattice
  CHECK_THROWS_AS(LatticeBasis::build(std::vector<GammaElement>{GammaElement::s(n).pow(3)}), InvalidArgument);
  const auto x = GammaElement::x(n);
  CHECK(LatticeBasis::build(std::vector<GammaElement>{x, x.pow(2)}).rank() == 1);
  CHECK_THROWS_AS(GammaElement(n) * GammaElement(13), MismatchError);
}
