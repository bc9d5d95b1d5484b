#include <doctest.h>

#include "dumont/sequences.hpp"

using namespace dumont;

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  CHECK(catalan(10) == 16796);
}

TEST_CASE("little schroeder values and recurrence") {
  CHECK(little_schroeder(1) == 1);
  CHECK(little_schroeder(2) == 1);
  CHECK(little_schroeder(3) == 3);
  CHECK(little_schroeder(4) == 11);
  CHECK(little_schroeder(5) == 45);
  CHECK(little_schroeder(6) == 197);
  CHECK(little_schroeder(7) == 903);
  for (int m = 2; m <= 12; ++m) {
    BigInt conv = 0;
    for (int k = 1; k < m; ++k)
      conv += little_schroeder(k) * little_schroeder(m - k);
    CHECK(little_schroeder(m) == -little_schroeder(m - 1) + 2 * conv);
  }
  CHECK_THROWS_AS(little_schroeder(0), DomainError);
}

TEST_CASE("ballot numbers") {
  CHECK(ballot(1, 0) == 1);
  CHECK(ballot(2, 1) == 1);
  CHECK(ballot(3, 2) == 2);
  CHECK_THROWS_AS(ballot(3, 3), DomainError);
  CHECK_THROWS_AS(ballot(3, 5), DomainError);
}

TEST_CASE("generalized catalan: two closed forms agree") {
  CHECK(gen_catalan2(0) == 1);
  CHECK(gen_catalan2(2) == 3);
  CHECK(gen_catalan2(3) == 13);
  CHECK(gen_catalan2(4) == 67);
  for (int n = 1; n <= 20; ++n)
    CHECK(gen_catalan2(n) == gen_catalan2_convolution(n));
}

TEST_CASE("rec_2341_1423") {
  CHECK(rec_2341_1423(0) == 1);
  CHECK(rec_2341_1423(1) == 1);
  CHECK(rec_2341_1423(2) == 3);
  CHECK(rec_2341_1423(3) == 11);
  CHECK(rec_2341_1423(4) == 39);
  CHECK(rec_2341_1423(5) == 139);
}

TEST_CASE("closed form equals recurrence for n = 1..20") {
  for (int n = 1; n <= 20; ++n)
    CHECK(closed_form_2341_1423(n) == rec_2341_1423(n));
  CHECK_THROWS_AS(closed_form_2341_1423(0), DomainError);
  CHECK_THROWS_AS(closed_form_2341_1423(21), DomainError);
}

TEST_CASE("lemma convolution holds exhaustively") {
  CHECK(verify_lemma_4213_1342(1));
  CHECK(verify_lemma_4213_1342(4));
  CHECK(verify_lemma_4213_1342(5));
  CHECK_THROWS_AS(verify_lemma_4213_1342(20), LimitExceeded);
}
