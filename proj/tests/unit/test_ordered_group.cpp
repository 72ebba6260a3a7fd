#include <doctest.h>

#include "ltree/ordered_group.hpp"
#include "support.hpp"

using ltree::LambdaElem;
using testing::lam;

TEST_CASE("right-lexicographic comparison") {
  CHECK(ltree::compare(lam(3, 0), lam(0, 1)) == std::strong_ordering::less);
  CHECK(ltree::compare(lam(0, 0), lam(0, 0)) == std::strong_ordering::equal);
  CHECK(ltree::compare(lam(-5, 1), lam(7, 0)) == std::strong_ordering::greater);
}

TEST_CASE("rank mismatch is rejected") {
  CHECK_THROWS_WITH_AS((void)(lam(1) < lam(1, 0)), "incompatible ordered groups", std::invalid_argument);
  CHECK_THROWS_WITH_AS(ltree::add(lam(1), lam(1, 0)), "incompatible ordered groups", std::invalid_argument);
}

TEST_CASE("arithmetic") {
  CHECK(ltree::add(lam(2, 1), lam(3, -1)) == lam(5, 0));
  CHECK(ltree::neg(lam(0, 1)) == lam(0, -1));
  CHECK(ltree::min_of(lam(4, 0), lam(0, 1)) == lam(4, 0));
  CHECK(ltree::max_of(lam(4, 0), lam(0, 1)) == lam(0, 1));
  CHECK(lam(6, -2).half() == lam(3, -1));
  CHECK_THROWS_AS(lam(3, 2).half(), std::domain_error);
  CHECK(LambdaElem::one(3) == LambdaElem(std::vector<ltree::BigInt>{1, 0, 0}));
  CHECK(lam(7).lifted(2) == lam(7, 0));
}

TEST_CASE("segments") {
  CHECK(ltree::in_segment(lam(5, 0), lam(1, 0), lam(0, 1)));
  CHECK(ltree::in_segment(lam(0, 1), lam(1, 0), lam(0, 1)));
  CHECK_FALSE(ltree::in_segment(lam(0, -1), lam(0, 0), lam(0, 1)));
}

TEST_CASE("isosceles triples") {
  CHECK(ltree::is_isosceles(lam(1), lam(1), lam(5)));
  CHECK(ltree::is_isosceles(lam(2), lam(2), lam(2)));
  CHECK_FALSE(ltree::is_isosceles(lam(1), lam(2), lam(3)));
}

TEST_CASE("text form") {
  CHECK(lam(-3).to_string() == "-3");
  CHECK(lam(1, 2).to_string() == "(1,2)");
  CHECK(LambdaElem::parse("(1,2)", 2) == lam(1, 2));
  CHECK(LambdaElem::parse("t", 2) == lam(0, 1));
  CHECK(LambdaElem::parse("2t-1", 2) == lam(-1, 2));
  CHECK(LambdaElem::parse("t + 3", 2) == lam(3, 1));
  CHECK(LambdaElem::parse(" 4 ", 1) == lam(4));
  CHECK(LambdaElem::parse("123456789012345678901234567890", 1).to_string() ==
        "123456789012345678901234567890");
  CHECK_THROWS(LambdaElem::parse("(1,2,3)", 2));
  CHECK_THROWS(LambdaElem::parse("x", 1));
}

TEST_CASE("order properties on random samples") {
  testing::Rng rng(7);
  auto random = [&] { return lam(rng.between(-50, 50), rng.between(-3, 3)); };
  const LambdaElem one = LambdaElem::one(2);
  for (int i = 0; i < 2000; ++i) {
    const LambdaElem a = random(), b = random(), c = random();
    if (a <= b) CHECK(a + c <= b + c);
    CHECK(((a < b) + (a == b) + (a > b)) == 1);
    if (a <= b && b <= c) CHECK(a <= c);
    if (a <= b && b <= a) CHECK(a == b);
    if (a.is_positive()) CHECK(a >= one);
    if (b > a) CHECK(b >= a + one);
  }
}
