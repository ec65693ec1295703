#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "versal/curve.hpp"
#include "versal/families.hpp"
#include "versal/field.hpp"

namespace versal {

/// Isomorphism classes over GF(2^k) with a rational point of order N.
struct CensusReport {
  Field field;
  unsigned torsion_order = 0;
  std::uint64_t family_count = 0;       ///< distinct classes reached by the family parameters
  std::uint64_t brute_force_count = 0;  ///< classes found by enumerating every (a2, a6)
  std::uint64_t formula_count = 0;      ///< q - 1 for N = 4, q/2 - 1 for N = 8
  bool agree = false;                   ///< family_count == brute_force_count
};

/// N in {4, 8}; k <= 6, otherwise FieldTooLarge.
CensusReport sigma_char2(const Field& field, unsigned torsion_order);
CensusReport sigma_char2(unsigned k, unsigned torsion_order);

/// A worked example: a curve whose group is cyclic, generated by a named point.
struct ExampleReport {
  std::string name;
  Field field = Field::rationals();
  std::string curve;
  std::uint64_t group_size = 0;
  Point generator = Point::infinity();
  std::uint64_t generator_order = 0;
  bool cyclic = false;
  std::uint64_t hasse_upper = 0;  ///< q + 1 + floor(2 sqrt q)
  std::uint64_t expected_size = 0;
  bool ok = false;
};

/// E6(1) over F_3: six points generated by (1, 2) = (-2, -1).
ExampleReport verify_f3_example();
/// y^2 + xy = x^3 + 1 over F_4 (E_{4,1} = E_{8,rho}): eight points generated by (rho, rho).
ExampleReport verify_f4_example();

/// Every valid parameter of family N over a finite field with at most 97
/// elements, witnesses verified, deduplicated by the isomorphism test for
/// e4 and e8 (and e4char2, e8char2 over binary fields).
std::vector<FamilyInstance> family_sweep(const Field& field, unsigned torsion_order, bool verify = true);

}  // namespace versal
