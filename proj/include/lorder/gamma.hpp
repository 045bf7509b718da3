#pragma once

// Arithmetic in Gamma_n = < s, x | [s^n, x] = 1, [x, s^i x s^-i] = 1 (1 <= i < n) >.
//
// With x_k = s^k x s^-k every element has the unique canonical form
// s^shift * x_0^p_0 ... x_{n-1}^p_{n-1}; Gamma_n is Z acting on Z^n by a cyclic
// coordinate shift.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lorder/word.hpp"

namespace lorder {

class GammaElement {
 public:
  /// Identity of Gamma_n; n >= 2.
  explicit GammaElement(int n);
  GammaElement(int n, std::int64_t shift, std::vector<std::int64_t> exps);

  static GammaElement s(int n);
  static GammaElement x(int n);

  int n() const { return n_; }
  std::int64_t shift() const { return shift_; }
  const std::vector<std::int64_t>& exps() const { return exps_; }

  bool is_identity() const;

  GammaElement operator*(const GammaElement& rhs) const;
  GammaElement inverse() const;
  GammaElement pow(std::int64_t k) const;

  bool operator==(const GammaElement&) const = default;

  /// `(shift; p_0,...,p_{n-1})`
  std::string str() const;
  /// The canonical form as a word `s^i x^p_0 s x^p_1 ...` re-expanded over {s, x}.
  Word to_word(const AlphabetPtr& sx) const;

 private:
  int n_;
  std::int64_t shift_ = 0;
  std::vector<std::int64_t> exps_;
};

/// The alphabet {s, x}.
AlphabetPtr gamma_alphabet();

/// Canonical form of a word over exactly the alphabet {s, x}.
GammaElement gamma_eval(int n, const Word& w);

GammaElement gamma_mul(const GammaElement& g, const GammaElement& h);
GammaElement gamma_inv(const GammaElement& g);
GammaElement gamma_pow(const GammaElement& g, std::int64_t k);

/// Shift plus exponent sum (a homomorphism to Z).
std::int64_t sigma(const GammaElement& g);

/// Exponent sum of the Z^n part only.
std::int64_t exps_sum(const GammaElement& g);

/// The explicit left order: positive iff the exponent sum is positive, or it
/// is zero and shift > 0, or both vanish and the first nonzero exponent (in
/// index order 0..n-1) is positive.
bool gamma_positive(const GammaElement& g);

/// g < h iff g^-1 h is positive.
std::strong_ordering gamma_compare(const GammaElement& g, const GammaElement& h);

/// Subgroup of pairwise commuting elements inside the centralizer
/// s^{nZ} x Z^n, handled as the integer row lattice of (shift | exps).
class LatticeBasis {
 public:
  /// Throws InvalidArgument naming the first non-commuting pair, or the
  /// first generator whose shift is not a multiple of n.
  static LatticeBasis build(std::span<const GammaElement> generators);

  int n() const { return n_; }
  std::size_t rank() const { return rank_; }
  const std::vector<GammaElement>& generators() const { return generators_; }
  /// Hermite normal form rows (nonzero rows only).
  const std::vector<std::vector<std::int64_t>>& hnf() const { return hnf_; }

  bool contains(const GammaElement& g) const;

  /// Integer coefficients c with prod gens_i^c_i = g. Throws NotAMember.
  std::vector<std::int64_t> coords(const GammaElement& g) const;

  GammaElement evaluate(std::span<const std::int64_t> coords) const;

 private:
  bool solve(const GammaElement& g, std::vector<std::int64_t>* coords) const;

  int n_ = 0;
  std::size_t rank_ = 0;
  std::vector<GammaElement> generators_;
  std::vector<std::vector<std::int64_t>> hnf_;
  std::vector<std::size_t> pivots_;
  // transform_ * (generator rows) = hnf rows; one row per hnf row.
  std::vector<std::vector<std::int64_t>> transform_;
};

LatticeBasis lattice_build(std::span<const GammaElement> generators);
bool lattice_contains(const LatticeBasis& b, const GammaElement& g);
std::vector<std::int64_t> lattice_coords(const LatticeBasis& b, const GammaElement& g);

}  // namespace lorder
