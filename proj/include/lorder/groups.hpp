#pragma once

// Adapters that present each concrete group behind the small interface used
// by the HNN and cone-search engines: identity, mul, inv, is_identity,
// format, key and parse.

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "lorder/gamma.hpp"
#include "lorder/heisenberg.hpp"
#include "lorder/stallings.hpp"
#include "lorder/word.hpp"

namespace lorder {

template <class G>
concept WordProblemGroup = requires(const G& g, const typename G::Element& e) {
  { g.identity() } -> std::same_as<typename G::Element>;
  { g.mul(e, e) } -> std::same_as<typename G::Element>;
  { g.inv(e) } -> std::same_as<typename G::Element>;
  { g.is_identity(e) } -> std::same_as<bool>;
  { g.format(e) } -> std::same_as<std::string>;
  { g.key(e) } -> std::same_as<std::string>;
};

template <class G>
concept BaseGroup = WordProblemGroup<G> && requires(const G& g, std::string_view text) {
  { g.parse(text) } -> std::same_as<typename G::Element>;
};

/// Subgroup with decidable membership and coordinates over symbols U1..Uk.
template <class O, class E>
concept SubgroupOracle = requires(const O& o, const E& e, const Word& w) {
  { o.contains(e) } -> std::same_as<bool>;
  { o.coords(e) } -> std::same_as<Word>;
  { o.evaluate(w) } -> std::same_as<E>;
  { o.generator_count() } -> std::same_as<std::size_t>;
};

// ---------------------------------------------------------------------------
// Free groups

class FreeGroup {
 public:
  using Element = Word;

  explicit FreeGroup(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  const AlphabetPtr& alphabet() const { return alphabet_; }

  Word identity() const { return Word(alphabet_); }
  Word mul(const Word& a, const Word& b) const { return a * b; }
  Word inv(const Word& a) const { return a.inverse(); }
  bool is_identity(const Word& a) const { return a.is_identity(); }
  std::string format(const Word& a) const { return a.str(); }
  std::string key(const Word& a) const { return a.str(); }
  Word parse(std::string_view text) const { return Word::parse(alphabet_, text); }

 private:
  AlphabetPtr alphabet_;
};

class FreeSubgroupOracle {
 public:
  explicit FreeSubgroupOracle(SubgroupGraph graph) : graph_(std::move(graph)) {}

  const SubgroupGraph& graph() const { return graph_; }

  bool contains(const Word& w) const { return graph_.contains(w); }
  Word coords(const Word& w) const { return graph_.express(w); }
  Word evaluate(const Word& coords) const { return graph_.evaluate(coords); }
  std::size_t generator_count() const { return graph_.generators().size(); }

 private:
  SubgroupGraph graph_;
};

// ---------------------------------------------------------------------------
// Gamma_n

class GammaGroup {
 public:
  using Element = GammaElement;

  explicit GammaGroup(int n) : n_(n) { GammaElement check(n); }

  int n() const { return n_; }

  GammaElement identity() const { return GammaElement(n_); }
  GammaElement mul(const GammaElement& a, const GammaElement& b) const { return a * b; }
  GammaElement inv(const GammaElement& a) const { return a.inverse(); }
  bool is_identity(const GammaElement& a) const { return a.is_identity(); }
  std::string format(const GammaElement& a) const { return a.to_word(gamma_alphabet()).str(); }
  std::string key(const GammaElement& a) const { return a.str(); }
  GammaElement parse(std::string_view text) const { return gamma_eval(n_, Word::parse(gamma_alphabet(), text)); }

 private:
  int n_;
};

AlphabetPtr symbol_alphabet(std::size_t k);

class LatticeOracle {
 public:
  explicit LatticeOracle(LatticeBasis basis) : basis_(std::move(basis)), symbols_(symbol_alphabet(basis_.generators().size())) {}

  const LatticeBasis& basis() const { return basis_; }

  bool contains(const GammaElement& g) const { return basis_.contains(g); }
  Word coords(const GammaElement& g) const;
  GammaElement evaluate(const Word& coords) const;
  std::size_t generator_count() const { return basis_.generators().size(); }

 private:
  LatticeBasis basis_;
  AlphabetPtr symbols_;
};

// ---------------------------------------------------------------------------
// Infinite cyclic group, written additively over a one-letter alphabet.

class CyclicGroup {
 public:
  using Element = std::int64_t;

  explicit CyclicGroup(std::string name = "a") : alphabet_(Alphabet::make({std::move(name)})) {}

  const AlphabetPtr& alphabet() const { return alphabet_; }

  std::int64_t identity() const { return 0; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return checked::add(a, b); }
  std::int64_t inv(std::int64_t a) const { return -a; }
  bool is_identity(std::int64_t a) const { return a == 0; }
  std::string format(std::int64_t a) const { return Word::generator(alphabet_, 0, a).str(); }
  std::string key(std::int64_t a) const { return std::to_string(a); }
  std::int64_t parse(std::string_view text) const;

 private:
  AlphabetPtr alphabet_;
};

/// The subgroup generated by one nonzero integer.
class CyclicOracle {
 public:
  explicit CyclicOracle(std::int64_t generator);

  std::int64_t generator() const { return generator_; }

  bool contains(std::int64_t a) const { return a % generator_ == 0; }
  Word coords(std::int64_t a) const;
  std::int64_t evaluate(const Word& coords) const;
  std::size_t generator_count() const { return 1; }

 private:
  std::int64_t generator_;
  AlphabetPtr symbols_;
};

// ---------------------------------------------------------------------------
// The polycyclic group G (and its subgroup Gamma).

class PolycyclicGroup {
 public:
  using Element = GElement;

  GElement identity() const { return {}; }
  GElement mul(const GElement& a, const GElement& b) const { return g_mul(a, b); }
  GElement inv(const GElement& a) const { return g_inv(a); }
  bool is_identity(const GElement& a) const { return a.is_identity(); }
  std::string format(const GElement& a) const { return a.str(); }
  std::string key(const GElement& a) const { return a.str(); }
  GElement parse(std::string_view text) const { return g_parse(text); }
};

}  // namespace lorder
