#include <doctest.h>

#include "oracles.hpp"
#include "versal/census.hpp"
#include "versal/errors.hpp"

using namespace versal;

TEST_CASE("census examples") {
  CensusReport r4 = sigma_char2(2, 4);
  CHECK(r4.family_count == 3);
  CHECK(r4.brute_force_count == 3);
  CHECK(r4.agree);
  CensusReport r2 = sigma_char2(1, 8);
  CHECK(r2.family_count == 0);
  CHECK(r2.brute_force_count == 0);
  CensusReport r16 = sigma_char2(4, 8);
  CHECK(r16.family_count == 7);
  CHECK(r16.brute_force_count == 7);
  CHECK_THROWS_AS(sigma_char2(7, 4), FieldTooLarge);
  CHECK_THROWS_AS(sigma_char2(3, 6), InvalidParams);
  CHECK_THROWS_AS(sigma_char2(Field::prime(5), 4), InvalidParams);
}

TEST_CASE("census formulas hold for q up to 32") {
  for (unsigned k = 1; k <= 5; ++k) {
    for (unsigned n : {4u, 8u}) {
      CensusReport r = sigma_char2(k, n);
      CHECK(r.agree);
      CHECK(r.family_count == r.formula_count);
    }
  }
}

TEST_CASE("worked examples") {
  ExampleReport f3 = verify_f3_example();
  CHECK(f3.ok);
  CHECK(f3.group_size == 6);
  CHECK(f3.generator == Point(Field::prime(3).one(), Field::prime(3).from_int(2)));
  CHECK(f3.generator_order == 6);
  CHECK(f3.hasse_upper < 12);
  ExampleReport f4 = verify_f4_example();
  CHECK(f4.ok);
  CHECK(f4.group_size == 8);
  CHECK(f4.generator_order == 8);
  CHECK(f4.cyclic);
}

TEST_CASE("family_sweep examples") {
  Field f5 = Field::prime(5);
  for (const auto& inst : family_sweep(f5, 4)) {
    CHECK_FALSE(is_square(inst.param("a").square() + 4 * inst.param("b")));
    CHECK(inst.all_verified());
  }
  auto six = family_sweep(Field::prime(3), 6);
  REQUIRE(six.size() == 1);
  CHECK(six[0].param("t").is_one());
  auto eight = family_sweep(Field::prime(7), 8);
  CHECK_FALSE(eight.empty());
  for (const auto& inst : eight) {
    CHECK(inst.all_verified());
    CHECK(inst.witnesses.back().claimed_order == 8);
  }
  CHECK_THROWS_AS(family_sweep(Field::prime(101), 4), FieldTooLarge);
  CHECK_THROWS_AS(family_sweep(Field::rationals(), 4), FieldTooLarge);
  CHECK_THROWS_AS(family_sweep(f5, 5), InvalidParams);
  CHECK(family_sweep(Field::binary(4), 8).size() == 7);
  CHECK(family_sweep(Field::binary(4), 4).size() == 15);
}

TEST_CASE("sweeps are pairwise non-isomorphic and every curve obeys Hasse") {
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    Field f = Field::prime(p);
    std::uint64_t slack = 0;
    while (slack * slack < 4 * p) ++slack;
    for (unsigned n : {4u, 8u}) {
      auto sweep = family_sweep(f, n);
      std::vector<oracle::Curve> curves;
      for (const auto& inst : sweep) curves.push_back(oracle::Curve::cubic(inst.cubic()));
      for (std::size_t i = 0; i < curves.size(); ++i) {
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
          REQUIRE_FALSE(oracle::isomorphism(curves[i], curves[j]).has_value());
        }
      }
    }
    for (unsigned n : {4u, 6u, 8u, 10u, 12u}) {
      for (const auto& inst : family_sweep(f, n)) {
        const auto size = full_group(inst.cubic()).size();
        CHECK(size + slack >= p + 1);
        CHECK(size <= p + 1 + slack);
        CHECK(size % n == 0);
      }
    }
  }
}
