#include <doctest.h>

#include <random>

#include "superlax/serialize.hpp"

using namespace superlax;

TEST_CASE("square-free splitting") {
  auto s = square_free_split(12);
  CHECK(s.square_free == 3);
  CHECK(s.outer == 2);
  s = square_free_split(4);
  CHECK(s.square_free == 1);
  CHECK(s.outer == 2);
  s = square_free_split(30);
  CHECK(s.square_free == 30);
  CHECK(s.outer == 1);
  CHECK_THROWS_AS(square_free_split(0), Error);
}

TEST_CASE("radical basis closure from the particle count") {
  RadicalBasis b2(2);
  CHECK(b2.contains(1));
  CHECK(b2.contains(2));
  CHECK_FALSE(b2.contains(3));

  RadicalBasis b3(3);
  // needs sqrt(2), sqrt(6), sqrt(3); closed under products
  for (std::uint64_t r : {1, 2, 3, 6}) CHECK(b3.contains(r));
  CHECK_FALSE(b3.contains(5));

  RadicalBasis b4(4);
  for (std::uint64_t r : {1, 2, 3, 6}) CHECK(b4.contains(r));
}

TEST_CASE("radical products reduce to canonical basis elements") {
  RadicalBasis b3(3);
  Scalar s2 = Scalar::sqrt_of(2, b3);
  Scalar s3 = Scalar::sqrt_of(3, b3);
  Scalar s6 = Scalar::sqrt_of(6, b3);
  CHECK(s2 * s2 == Scalar::from(2));
  CHECK(s2 * s3 == s6);
  CHECK(s2 * s6 == Scalar::from(2) * s3);
  CHECK(Scalar::sqrt_of(12, b3) == Scalar::from(2) * s3);
  CHECK_THROWS_AS(Scalar::sqrt_of(5, b3), Error);
  CHECK_THROWS_AS(Scalar::sqrt_of(7, b3), Error);
}

TEST_CASE("imaginary unit squares to minus one") {
  Scalar i = Scalar::imaginary_unit();
  CHECK(i * i == Scalar::from(-1));
  CHECK(i.conjugate() == -i);
}

TEST_CASE("field inverse on random elements") {
  RadicalBasis b3(3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-6, 6);
  auto random_scalar = [&] {
    Scalar s;
    for (std::uint64_t rad : {1, 2, 3, 6}) {
      if (rng() % 2) continue;
      s.set_component(rad, {rational(coef(rng), 1 + (rng() % 3)),
                            rational(coef(rng), 1 + (rng() % 3))});
    }
    return s;
  };
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Scalar s = random_scalar();
    if (s.is_zero()) continue;
    CHECK(s * s.inverse() == Scalar::from(1));
    ++checked;
  }
  CHECK(checked > 30);
  CHECK_THROWS_AS(Scalar().inverse(), Error);
}

TEST_CASE("division through the inverse") {
  RadicalBasis b2(2);
  Scalar s2 = Scalar::sqrt_of(2, b2);
  // 1/sqrt(2) = sqrt(2)/2
  CHECK(Scalar::from(1) / s2 == Scalar::from(1, 2) * s2);
}

TEST_CASE("scalar serialization round-trips") {
  RadicalBasis b3(3);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    Scalar s;
    for (std::uint64_t rad : {1, 2, 3, 6}) {
      if (rng() % 2) continue;
      s.set_component(rad, {rational(coef(rng), 1 + (rng() % 5)),
                            rational(coef(rng), 1 + (rng() % 5))});
    }
    CHECK(parse_scalar(to_string(s)) == s);
  }
  CHECK(parse_scalar("0") == Scalar());
  CHECK(to_string(Scalar()) == "0");
  CHECK(parse_scalar("1/2 + -1/3*I*sqrt(6)") ==
        Scalar::from(1, 2) - Scalar::from(1, 3) * Scalar::imaginary_unit() *
                                 Scalar::sqrt_of(6, b3));
}

TEST_CASE("rational access guards") {
  RadicalBasis b2(2);
  CHECK(Scalar::from(3, 4).rational_value() == rational(3, 4));
  CHECK_THROWS_AS(Scalar::sqrt_of(2, b2).rational_value(), Error);
  CHECK_THROWS_AS(Scalar::imaginary_unit().rational_value(), Error);
}
