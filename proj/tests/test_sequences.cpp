#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bcfib/error.hpp"
#include "bcfib/sequences.hpp"
#include "test_support.hpp"

using namespace bcfib;

TEST_CASE("fib values") {
  const long listed[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  for (int n = 1; n <= 11; ++n) CHECK(fib(n) == listed[n - 1]);
  CHECK(fib(10) == 55);
  CHECK(fib(0) == 0);
  CHECK(fib(-4) == -3);
  CHECK(fib(-1) == 1);
  CHECK(fib(-2) == -1);
  CHECK(fib(100) == Integer("354224848179261915075"));
}

TEST_CASE("lucas values") {
  const long listed[] = {2, 1, 3, 4, 7, 11, 18, 29, 47};
  for (int n = 0; n < 9; ++n) CHECK(lucas(n) == listed[n]);
  CHECK(lucas(6) == 18);
  CHECK(lucas(0) == 2);
  CHECK(lucas(-3) == -4);
  CHECK(lucas(-1) == -1);
}

TEST_CASE("fib_pair_oracle") {
  CHECK(fib_pair_oracle(0) == std::pair<Integer, Integer>(0, 1));
  CHECK(fib_pair_oracle(7) == std::pair<Integer, Integer>(13, 21));
  CHECK(fib_pair_oracle(2) == std::pair<Integer, Integer>(1, 2));
  CHECK_THROWS_AS(fib_pair_oracle(-1), NegativeIndex);
}

TEST_CASE("fast doubling equals iteration on [0, 2000]") {
  Integer a = 0, b = 1;
  for (Index n = 0; n <= 2000; ++n) {
    const auto pair = fib_pair(n);
    REQUIRE(pair.first == a);
    REQUIRE(pair.second == b);
    Integer c = a + b;
    a = b;
    b = c;
  }
  CHECK(fib_pair_oracle(2000).first == fib(2000));
}

TEST_CASE("negative indices match a backwards walk") {
  for (Index n = -200; n <= 0; ++n) {
    REQUIRE(fib(n) == testing::fib_walk(n));
    REQUIRE(lucas(n) == testing::lucas_walk(n));
    REQUIRE(fib_pair(n).second == fib(n + 1));
  }
}

TEST_CASE("sign rules") {
  for (Index n = 0; n <= 80; ++n) {
    REQUIRE(fib(-n) == parity_sign(n + 1) * fib(n));
    REQUIRE(lucas(-n) == parity_sign(n) * lucas(n));
  }
}

TEST_CASE("scalar lemmas on n, m in [-60, 60]") {
  for (Index n = -60; n <= 60; ++n) {
    const Integer Fn = fib(n);
    REQUIRE(Fn == fib(n - 1) + fib(n - 2));
    REQUIRE(lucas(n) == lucas(n - 1) + lucas(n - 2));
    REQUIRE(Fn * Fn + fib(n + 1) * fib(n + 1) == fib(2 * n + 1));
    REQUIRE(fib(n + 1) * fib(n + 1) - fib(n - 1) * fib(n - 1) == fib(2 * n));
    REQUIRE(fib(n - 1) + fib(n + 1) == lucas(n));
    REQUIRE(fib(n + 2) - fib(n - 2) == lucas(n));
    REQUIRE(fib(n + 3) + fib(n - 3) == 2 * lucas(n));
    REQUIRE(lucas(n - 1) + lucas(n + 1) == 5 * Fn);
    REQUIRE(lucas(n - 1) * lucas(n + 1) - lucas(n) * lucas(n) == 5 * parity_sign(n - 1));
    for (Index m = -60; m <= 60; ++m) {
      const Integer Fm = fib(m);
      REQUIRE(Fn * Fm + fib(n + 1) * fib(m + 1) == fib(n + m + 1));
      REQUIRE(Fm * fib(n + 1) - fib(m + 1) * Fn == parity_sign(n) * fib(m - n));
      // Catalan with r = m.
      REQUIRE(Fn * Fn - fib(n - m) * fib(n + m) == parity_sign(n - m) * Fm * Fm);
      const Integer lhs = lucas(m + n) + lucas(m - n);
      if (n % 2 != 0) REQUIRE(lhs == 5 * Fm * Fn);
      else REQUIRE(lhs == lucas(m) * lucas(n));
    }
  }
}

TEST_CASE("large index") {
  const std::string digits = fib(1000).get_str();
  CHECK(digits.size() == 209);
  CHECK(fib(1000) == fib_pair_oracle(1000).first);
}
