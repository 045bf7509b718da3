#include <doctest.h>

#include "lorder/error.hpp"
#include "lorder/word.hpp"
#include "oracles.hpp"

using namespace lorder;

namespace {

AlphabetPtr ab() { return Alphabet::make({"a", "b"}); }

Word W(const AlphabetPtr& alpha, const char* text) { return Word::parse(alpha, text); }

}  // namespace

TEST_CASE("parse and print") {
  const auto a = ab();
  CHECK(W(a, "a^3 b^-2 a").str() == "a^3 b^-2 a");
  CHECK(W(a, "a a a").str() == "a^3");
  CHECK(W(a, "1").str() == "1");
  CHECK(W(a, "").is_identity());
  CHECK(W(a, "a*b.a^-1").str() == "a b a^-1");
  CHECK(W(a, "(a b)^2").str() == "a b a b");
  CHECK(W(a, "(a b)^-2").str() == "b^-1 a^-1 b^-1 a^-1");
  CHECK(W(a, "a^2 a^-2").is_identity());
}

TEST_CASE("parse errors carry a column") {
  const auto a = ab();
  CHECK_THROWS_AS(W(a, "a c"), ParseError);
  try {
    W(a, "a c");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(W(a, "a^"), ParseError);
  CHECK_THROWS_AS(W(a, "(a b"), ParseError);
  CHECK_THROWS_AS(Alphabet::make({"a", "a"}), InvalidArgument);
  CHECK_THROWS_AS(Alphabet::make({"1a"}), InvalidArgument);
}

TEST_CASE("multiply and invert") {
  const auto a = ab();
  CHECK((W(a, "a^5 b^-5") * W(a, "a^6 b^-6")).str() == "a^5 b^-5 a^6 b^-6");
  CHECK((W(a, "a b^2") * W(a, "b^-2 a")).str() == "a^2");
  CHECK((W(a, "a b") * W(a, "b^-1 a^-1")).is_identity());
  CHECK(W(a, "a^2 b^-1").inverse().str() == "b a^-2");
  CHECK(Word(a).inverse().is_identity());
  CHECK(W(a, "a b").pow(3).str() == "a b a b a b");
  CHECK(W(a, "a b").pow(-1) == W(a, "b^-1 a^-1"));
  CHECK(W(a, "a b").pow(0).is_identity());
  CHECK_THROWS_AS(W(a, "a") * W(Alphabet::make({"a", "c"}), "a"), MismatchError);
}

TEST_CASE("positive words") {
  const auto sx = Alphabet::make({"s", "x"});
  CHECK(is_positive_word(W(sx, "s^11 x s"), parse_subset(*sx, "s x")));
  CHECK(is_positive_word(W(sx, "s^-2 x"), parse_subset(*sx, "s^-1 x")));
  CHECK_FALSE(is_positive_word(W(sx, "s^-2 x"), parse_subset(*sx, "s x")));
  CHECK_FALSE(is_positive_word(Word(sx), parse_subset(*sx, "s x")));
  const auto a = ab();
  CHECK_FALSE(is_positive_word(W(a, "a^-1 b"), parse_subset(*a, "a b")));
  CHECK_THROWS_AS(is_positive_word(W(a, "a"), parse_subset(*a, "a a^-1")), InvalidArgument);
}

TEST_CASE("substitution") {
  const auto u = Alphabet::make({"U1", "U2"});
  const auto a = ab();
  const std::vector<Word> images{W(a, "a b"), W(a, "b")};
  CHECK(substitute(W(u, "U1 U2^-1"), images, a).str() == "a");
  CHECK(substitute(W(u, "U1^-2"), images, a).str() == "b^-1 a^-1 b^-1 a^-1");
}

TEST_CASE("reduction agrees with letter-level reduction") {
  std::mt19937_64 rng(7);
  const auto alpha = Alphabet::make({"a", "b", "c"});
  std::uniform_int_distribution<int> gen(0, 2), ex(-4, 4), len(0, 20);
  for (int i = 0; i < 3000; ++i) {
    std::vector<Syllable> raw;
    for (int k = len(rng); k > 0; --k) raw.push_back({gen(rng), ex(rng)});
    const Word w = Word::reduce(alpha, raw);
    CHECK(oracle::expand(w.syllables()) == oracle::free_reduce(oracle::expand(raw)));
    CHECK(Word::reduce(alpha, w.syllables()) == w);

    const Word v = oracle::random_word(rng, alpha, 20, 3);
    const auto joined = oracle::free_reduce([&] {
      auto l = oracle::expand(w.syllables());
      auto r = oracle::expand(v.syllables());
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }());
    CHECK(oracle::expand((w * v).syllables()) == joined);
    CHECK(w.inverse().inverse() == w);
  }
}

TEST_CASE("concatenating positive words stays positive") {
  std::mt19937_64 rng(11);
  const auto alpha = ab();
  const auto subset = parse_subset(*alpha, "a^-1 b");
  std::uniform_int_distribution<int> gen(0, 1), ex(1, 4), len(1, 8);
  for (int i = 0; i < 500; ++i) {
    auto positive = [&] {
      std::vector<Syllable> raw;
      for (int k = len(rng); k > 0; --k) {
        const int g = gen(rng);
        raw.push_back({g, g == 0 ? -ex(rng) : ex(rng)});
      }
      return Word::reduce(alpha, raw);
    };
    const Word u = positive(), v = positive();
    REQUIRE(is_positive_word(u, subset));
    CHECK(is_positive_word(u * v, subset));
  }
}
