#pragma once

// Upper unitriangular m x m matrices with exact rational entries, and the
// bi-order given by the first nonzero superdiagonal.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lorder/error.hpp"

namespace lorder {

using Rational = boost::multiprecision::cpp_rational;

enum class OrderRule {
  /// First nonzero superdiagonal k = j-i, then smallest row i on it.
  lower_central,
  /// First nonzero anti-diagonal d = i+j over the strict upper triangle,
  /// then smallest row. Cross terms of a product land on later
  /// anti-diagonals, so this is a bi-order too.
  anti_diagonal,
};

class UnipotentMatrix {
 public:
  static constexpr int kMaxSize = 12;

  /// Identity of U_m, 2 <= m <= 12.
  explicit UnipotentMatrix(int m);

  /// I + value * E_{i,j} with 1-based 1 <= i < j <= m.
  static UnipotentMatrix elementary(int m, int i, int j, const Rational& value = 1);

  /// Parses `[[1, 2, 1/2], [0, 1, -3], [0, 0, 1]]` (rows of `p/q` literals).
  static UnipotentMatrix parse(std::string_view text);

  int size() const { return m_; }

  /// 1-based access; diagonal reads as 1 and the lower triangle as 0.
  Rational at(int i, int j) const;
  void set(int i, int j, const Rational& value);

  bool is_identity() const;

  UnipotentMatrix operator*(const UnipotentMatrix& rhs) const;
  UnipotentMatrix inverse() const;

  bool operator==(const UnipotentMatrix&) const = default;

  std::string str() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * m_ + (j - 1)); }

  int m_;
  // Full m*m storage; only the strict upper triangle is ever nonzero.
  std::vector<Rational> entries_;
};

UnipotentMatrix u_mul(const UnipotentMatrix& a, const UnipotentMatrix& b);
UnipotentMatrix u_inv(const UnipotentMatrix& a);

/// Throws InvalidArgument for the identity.
bool u_positive(const UnipotentMatrix& a, OrderRule rule = OrderRule::lower_central);

/// a < b iff a^-1 b is positive.
std::strong_ordering u_compare(const UnipotentMatrix& a, const UnipotentMatrix& b,
                               OrderRule rule = OrderRule::lower_central);

}  // namespace lorder
