#include <doctest.h>

#include "lorder/claims.hpp"
#include "lorder/unipotent.hpp"

using namespace lorder;

TEST_CASE("parse, multiply, invert") {
  const auto a = UnipotentMatrix::parse("[[1,2,1/2],[0,1,-3],[0,0,1]]");
  CHECK(a.at(1, 3) == Rational(1, 2));
  CHECK(a.at(2, 3) == -3);
  CHECK((a * a.inverse()).is_identity());
  CHECK((a.inverse() * a).is_identity());
  const auto b = UnipotentMatrix::parse("[[1,0,1],[0,1,1],[0,0,1]]");
  const auto ab = a * b;
  CHECK(ab.at(1, 2) == 2);
  CHECK(ab.at(2, 3) == -2);
  CHECK(ab.at(1, 3) == Rational(1, 2) + 1 + 2);
  CHECK(UnipotentMatrix::parse(a.str()) == a);
  CHECK_THROWS_AS(UnipotentMatrix::parse("[[1,2],[1,1]]"), ParseError);
  CHECK_THROWS_AS(UnipotentMatrix::parse("[[2,0],[0,1]]"), ParseError);
  CHECK_THROWS_AS(UnipotentMatrix(1), InvalidArgument);
  CHECK_THROWS_AS(UnipotentMatrix(2) * UnipotentMatrix(3), MismatchError);
}

TEST_CASE("lower central order") {
  const auto e12 = UnipotentMatrix::elementary(3, 1, 2);
  const auto e23 = UnipotentMatrix::elementary(3, 2, 3);
  const auto e13 = UnipotentMatrix::elementary(3, 1, 3);
  CHECK(u_positive(e12));
  CHECK(u_positive(e23));
  CHECK(u_positive(e13));
  CHECK_FALSE(u_positive(e12.inverse()));
  // first superdiagonal decides even against a larger corner
  CHECK_FALSE(u_positive(UnipotentMatrix::parse("[[1,-1,100],[0,1,0],[0,0,1]]")));
  CHECK(u_positive(UnipotentMatrix::parse("[[1,0,100],[0,1,-1],[0,0,1]]")) == false);
  CHECK_THROWS_AS(u_positive(UnipotentMatrix(3)), InvalidArgument);
  CHECK(u_compare(e12, e12 * e13) == std::strong_ordering::less);
}

TEST_CASE("anti-diagonal order") {
  // i+j = 3 holds only (1,2); then (1,3) on i+j = 4 before (2,3) on i+j = 5
  CHECK(u_positive(UnipotentMatrix::parse("[[1,0,1],[0,1,-5],[0,0,1]]"), OrderRule::anti_diagonal));
  CHECK_FALSE(u_positive(UnipotentMatrix::parse("[[1,0,1],[0,1,-5],[0,0,1]]"), OrderRule::lower_central));
}

TEST_CASE("bi-order properties") {
  CHECK(unipotent_order_suite(41, 5000, 6).passed);
  CHECK(unipotent_order_suite(43, 500, 12).passed);
}
