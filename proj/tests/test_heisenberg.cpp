#include <doctest.h>

#include <random>

#include "lorder/claims.hpp"
#include "lorder/heisenberg.hpp"
#include "oracles.hpp"

using namespace lorder;

namespace {

oracle::GPair as_pair(const GElement& g) { return oracle::g_normal(g.tbit, g.m, g.q, g.r); }

}  // namespace

TEST_CASE("normal forms against the matrix model") {
  std::mt19937_64 rng(29);
  const auto alpha = heisenberg_alphabet();
  for (int i = 0; i < 2000; ++i) {
    const Word w = oracle::random_word(rng, alpha, 12, 3);
    CHECK(as_pair(g_eval(w)) == oracle::g_model(w));
  }
}

TEST_CASE("group axioms") {
  std::mt19937_64 rng(31);
  const auto alpha = heisenberg_alphabet();
  for (int i = 0; i < 1000; ++i) {
    const GElement a = g_eval(oracle::random_word(rng, alpha, 6, 3));
    const GElement b = g_eval(oracle::random_word(rng, alpha, 6, 3));
    const GElement c = g_eval(oracle::random_word(rng, alpha, 6, 3));
    CHECK(g_mul(g_mul(a, b), c) == g_mul(a, g_mul(b, c)));
    CHECK(g_mul(a, g_inv(a)).is_identity());
    CHECK(g_mul(g_inv(a), a).is_identity());
  }
}

TEST_CASE("relations of G") {
  const GElement t = GElement::t(), x = GElement::x(), y = GElement::y(), z = GElement::z();
  CHECK(g_mul(t, t) == z);
  CHECK(g_parse("x^-1 y^-1 x y") == z);
  CHECK(g_parse("t x t^-1") == g_inv(x));
  CHECK(g_parse("t y t^-1") == g_inv(y));
  CHECK(g_parse("t z t^-1") == z);
  CHECK(g_inv(GElement{1, 3, -2, 5}) == GElement{1, 3, -2, -5 - 1 + 6});
  CHECK(g_parse("t x^3 y^-2 z^5") == GElement{1, 3, -2, 5});
}

TEST_CASE("square identities") {
  const GElement t = GElement::t();
  for (int n = -8; n <= 8; n += 2) CHECK(g_pow(g_mul(t, g_pow(GElement::x(), n)), 2) == GElement::z());
  for (int n = -6; n <= 6; ++n) {
    for (int m = -6; m <= 6; ++m) {
      CHECK(g_square_exponent(n, m) == m * n + 1);
      CHECK(oracle::g_model(Word::parse(heisenberg_alphabet(), "(t x^" + std::to_string(n) + " y^" +
                                                                  std::to_string(m) + ")^2")) ==
            oracle::g_normal(0, 0, 0, m * n + 1));
    }
  }
  CHECK(heisenberg_identity_suite().passed);
}

TEST_CASE("torsion sample") {
  const auto rep = g_is_torsion_free_sample(3);
  CHECK(rep.violations.empty());
  CHECK(rep.elements_checked > 200);
  CHECK(GElement{0, 2, 0, 0}.in_gamma());
  CHECK_FALSE(GElement{1, 1, 0, 0}.in_gamma());
}

TEST_CASE("matrix cross-check through U_3") { CHECK(heisenberg_matrix_crosscheck(37, 1000).passed); }
