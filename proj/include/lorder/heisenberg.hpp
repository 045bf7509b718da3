#pragma once

// The group G = < t, x, y, z | [x,y] = z, z central, t^2 = z, t x t^-1 = x^-1,
// t y t^-1 = y^-1 >, which contains the Heisenberg group H = <x, y, z> with
// index two, and its subgroup Gamma = < t, x^2, y >.
//
// Commutator convention: [x,y] = x^-1 y^-1 x y = z, i.e. x y = y x z.

#include <cstdint>
#include <string>
#include <vector>

#include "lorder/word.hpp"

namespace lorder {

/// t^tbit x^m y^q z^r with tbit in {0, 1}.
struct GElement {
  int tbit = 0;
  std::int64_t m = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;

  static GElement t() { return {1, 0, 0, 0}; }
  static GElement x() { return {0, 1, 0, 0}; }
  static GElement y() { return {0, 0, 1, 0}; }
  static GElement z() { return {0, 0, 0, 1}; }

  bool is_identity() const { return tbit == 0 && m == 0 && q == 0 && r == 0; }
  /// Membership in Gamma = < t, x^2, y >.
  bool in_gamma() const { return m % 2 == 0; }

  bool operator==(const GElement&) const = default;

  /// `t^1 x^m y^q z^r` with every exponent shown.
  std::string str() const;
};

GElement g_mul(const GElement& a, const GElement& b);
GElement g_inv(const GElement& g);
GElement g_pow(const GElement& g, std::int64_t k);

inline GElement operator*(const GElement& a, const GElement& b) { return g_mul(a, b); }

/// The alphabet {t, x, y, z}.
AlphabetPtr heisenberg_alphabet();

/// Evaluates a word over {t, x, y, z}.
GElement g_eval(const Word& w);

/// Parses either a word over {t,x,y,z} or the printed normal form.
GElement g_parse(std::string_view text);

/// Returns mn+1 after checking that (t x^n y^m)^2 equals z^{mn+1}.
/// Throws Error if the arithmetic disagrees.
std::int64_t g_square_exponent(std::int64_t n, std::int64_t m);

struct TorsionReport {
  std::int64_t bound = 0;
  std::int64_t elements_checked = 0;
  std::int64_t powers_checked = 0;
  std::vector<std::pair<GElement, std::int64_t>> violations;
};

/// Checks g^k != 1 for every nonidentity Gamma element with |m|,|q|,|r| <= bound
/// (m even) and 1 <= k <= 2*bound.
TorsionReport g_is_torsion_free_sample(std::int64_t bound);

}  // namespace lorder
