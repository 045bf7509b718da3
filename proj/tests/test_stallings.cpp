#include <doctest.h>

#include <set>

#include <random>

#include "lorder/claims.hpp"
#include "lorder/stallings.hpp"
#include "oracles.hpp"

using namespace lorder;

namespace {

AlphabetPtr ab() { return Alphabet::make({"a", "b"}); }

std::vector<Word> words(const AlphabetPtr& alpha, std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(Word::parse(alpha, t));
  return out;
}

// Every nontrivial reduced word in the symbols of length <= max_len must
// evaluate to a nontrivial element when the generators are a free basis.
bool no_short_relation(const SubgroupGraph& g, int max_len) {
  const auto symbols = g.symbol_alphabet();
  const int k = static_cast<int>(symbols->size());
  std::vector<std::vector<oracle::Letter>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<oracle::Letter>> next;
    for (const auto& w : layer) {
      for (int gen = 0; gen < k; ++gen) {
        for (int sign : {1, -1}) {
          if (!w.empty() && w.back().gen == gen && w.back().sign == -sign) continue;
          auto e = w;
          e.push_back({gen, sign});
          std::vector<Syllable> raw;
          for (const auto& l : e) raw.push_back({l.gen, l.sign});
          if (g.evaluate(Word::reduce(symbols, raw)).is_identity()) return false;
          next.push_back(std::move(e));
        }
      }
    }
    layer = std::move(next);
  }
  return true;
}

}  // namespace

TEST_CASE("ranks") {
  const auto a = ab();
  const auto e = FreeExponents::standard();
  CHECK(SubgroupGraph::build(u_words(e)).rank() == 8);
  CHECK(SubgroupGraph::build(v_words(e)).rank() == 8);
  CHECK(SubgroupGraph::build(words(a, {"a^2", "a^3"})).rank() == 1);
  CHECK(SubgroupGraph::build(words(a, {"a", "b"})).rank() == 2);
  // b a^-1 = (b a) a^-2, so this is the index-2 subgroup of even-length words
  CHECK(SubgroupGraph::build(words(a, {"a b", "b a", "a^2"})).rank() == 3);
  CHECK(SubgroupGraph::build(words(a, {"a b a^-1", "a b^2 a^-1"})).rank() == 1);
  CHECK(SubgroupGraph::build(words(a, {"a b a^-1 b^-1"})).rank() == 1);
}

TEST_CASE("folded graph shape") {
  const auto g = SubgroupGraph::build(words(ab(), {"a^2", "a^3"}));
  CHECK(g.is_folded());
  CHECK(g.vertex_count() == 1);
  CHECK(g.contains(Word::parse(ab(), "a")));
  const auto h = SubgroupGraph::build(u_words(FreeExponents::standard()));
  CHECK(h.is_folded());
}

TEST_CASE("freeness agrees with bounded enumeration") {
  const auto e = FreeExponents::standard();
  CHECK(no_short_relation(SubgroupGraph::build(u_words(e)), 3));
  CHECK(no_short_relation(SubgroupGraph::build(v_words(e)), 3));
  // a^2, a^3 satisfy U1^3 U2^-2 = 1
  CHECK_FALSE(no_short_relation(SubgroupGraph::build(words(ab(), {"a^2", "a^3"})), 5));
}

TEST_CASE("membership") {
  const auto a = ab();
  const auto g = SubgroupGraph::build(words(a, {"a^2", "a b a^-1"}));
  CHECK(g.contains(Word::parse(a, "a^4 a b^3 a^-1")));
  CHECK(g.contains(Word(a)));
  CHECK_FALSE(g.contains(Word::parse(a, "a")));
  CHECK_FALSE(g.contains(Word::parse(a, "b")));
  CHECK_THROWS_AS(g.express(Word::parse(a, "b")), NotAMember);
  CHECK(g.express(Word::parse(a, "a b^-2 a^-1 a^2")).str() == "U2^-2 U1");
}

TEST_CASE("express round trip on random members") {
  std::mt19937_64 rng(3);
  const auto gens = u_words(FreeExponents::standard());
  const auto g = SubgroupGraph::build(gens);
  const auto symbols = g.symbol_alphabet();
  for (int i = 0; i < 1000; ++i) {
    const Word c = oracle::random_word(rng, symbols, 6, 2);
    const Word w = substitute(c, gens, ab());
    REQUIRE(g.contains(w));
    CHECK(g.express(w) == c);
  }
}

TEST_CASE("non-members of the v subgroup") {
  std::mt19937_64 rng(5);
  const auto gens = v_words(FreeExponents::standard());
  const auto g = SubgroupGraph::build(gens);
  const auto a = ab();
  // every product of at most three generators, as reduced strings
  std::set<std::string> short_products{""};
  std::vector<Word> frontier{Word(a)};
  for (int len = 0; len < 3; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (const auto& v : gens) {
        for (const Word& x : {w * v, w * v.pow(-1)}) {
          if (short_products.insert(x.str()).second) next.push_back(x);
        }
      }
    }
    frontier = std::move(next);
  }
  for (const auto& s : short_products) CHECK(g.contains(Word::parse(a, s)));
  int rejected = 0;
  for (int i = 0; i < 300; ++i) {
    const Word w = oracle::random_word(rng, a, 4, 3);
    if (!g.contains(w)) {
      ++rejected;
      CHECK(short_products.count(w.str()) == 0);
      CHECK_THROWS_AS(g.express(w), NotAMember);
    } else {
      CHECK(g.evaluate(g.express(w)) == w);
    }
  }
  CHECK(rejected > 0);
  CHECK(rejected < 300);
}
