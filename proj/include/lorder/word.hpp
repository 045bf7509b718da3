#pragma once

// Freely reduced words over a named alphabet, stored as syllables g^k.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lorder/error.hpp"

namespace lorder {

/// Ordered list of distinct generator names matching [a-zA-Z][a-zA-Z0-9_]*.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of `name`, or -1 when absent.
  int find(std::string_view name) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

  static bool valid_name(std::string_view name);

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

struct Syllable {
  int gen = 0;
  std::int64_t exp = 0;

  bool operator==(const Syllable&) const = default;
};

/// A generator together with a sign, e.g. x^-1 in the subset {s, x^-1}.
struct SignedGen {
  int gen = 0;
  int sign = 1;

  bool operator==(const SignedGen&) const = default;
};

class Word {
 public:
  /// Identity over `alphabet`.
  explicit Word(AlphabetPtr alphabet);

  /// Freely reduces `raw`; generator indices must lie in the alphabet.
  static Word reduce(AlphabetPtr alphabet, std::span<const Syllable> raw);
  static Word generator(AlphabetPtr alphabet, int gen, std::int64_t exp = 1);

  /// Parses `a^3 b^-2 (a b)^2`; `1` or the empty string is the identity.
  static Word parse(AlphabetPtr alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }

  /// Sum of |exponent| over the syllables.
  std::int64_t length() const;

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word pow(std::int64_t k) const;

  bool same_alphabet(const Word& other) const;
  bool operator==(const Word& other) const;

  /// `a^3 b^-2 a`; identity prints as `1`.
  std::string str() const;

 private:
  Word(AlphabetPtr alphabet, std::vector<Syllable> syllables);

  AlphabetPtr alphabet_;
  std::vector<Syllable> syllables_;
};

Word multiply(const Word& lhs, const Word& rhs);
Word invert(const Word& w);

/// True iff `w` is nontrivial and every syllable is a positive power of a
/// member of `subset`. Throws InvalidArgument when the subset contains a
/// generator together with its inverse.
bool is_positive_word(const Word& w, std::span<const SignedGen> subset);

/// Parses a subset literal such as `s^-1 x` into signed generators.
std::vector<SignedGen> parse_subset(const Alphabet& alphabet, std::string_view text);

/// Replaces each generator i of `w` by images[i] and reduces the product.
Word substitute(const Word& w, std::span<const Word> images, AlphabetPtr target);

}  // namespace lorder
