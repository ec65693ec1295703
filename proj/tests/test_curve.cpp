#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "versal/curve.hpp"
#include "versal/errors.hpp"

using namespace versal;

namespace {

CubicCurve cubic(const Field& f, std::int64_t alpha, std::int64_t p, std::int64_t q) {
  return CubicCurve(f.from_int(alpha), QuadraticPoly(f.from_int(p), f.from_int(q)));
}

std::uint64_t hasse_slack(std::uint64_t q) {
  std::uint64_t r = 0;
  while (r * r < 4 * q) ++r;
  return r;
}

}  // namespace

TEST_CASE("curve construction rejects singular input") {
  Field f = Field::rationals();
  CHECK_THROWS_AS(cubic(f, 1, 0, -1), SingularCurve);
  CHECK_THROWS_AS(cubic(f, -1, 3, 2), SingularCurve);
  CHECK_THROWS_AS(cubic(f, 0, 2, 1), SingularCurve);
  CHECK_THROWS_AS(cubic(Field::binary(2), 0, 1, 1), InvalidParams);
  CHECK_THROWS_AS(Char2Curve(Field::binary(2).one(), Field::binary(2).zero()), SingularCurve);
  CHECK_THROWS_AS(Char2Curve(Field::prime(5).one(), Field::prime(5).one()), InvalidParams);
}

TEST_CASE("from_coefficients finds the rational root") {
  Field q = Field::rationals();
  CubicCurve c = CubicCurve::from_coefficients(q.from_int(4), q.from_int(1), q.zero());
  CHECK(c.alpha().is_zero());
  CHECK(c.p() == q.from_int(4));
  Field f11 = Field::prime(11);
  CubicCurve d = CubicCurve::from_coefficients(f11.from_int(2), f11.from_int(5), f11.from_int(4));
  CHECK(d.rhs(f11.from_int(3)) == f11.from_int(27 + 18 + 15 + 4));
  CHECK_THROWS_AS(CubicCurve::from_coefficients(q.zero(), q.zero(), q.from_int(2)), InvalidParams);
  CubicCurve e = CubicCurve::from_coefficients(q.parse_element("-1/2"), q.from_int(1), q.parse_element("-1/2"));
  CHECK(e.alpha() == q.parse_element("1/2"));
}

TEST_CASE("group law basics") {
  Field f3 = Field::prime(3);
  CubicCurve e = cubic(f3, -1, 0, 1);
  Point P(f3.from_int(1), f3.from_int(2));
  CHECK(add(e, P, Point::infinity()) == P);
  CHECK(doubled(e, e.w3()).is_infinity());
  CHECK(scalar_mul(e, 6, P).is_infinity());
  CHECK_FALSE(scalar_mul(e, 3, P).is_infinity());
  CHECK(*order_of(e, P) == 6);
  CHECK(*order_of(e, Point::infinity()) == 1);
  CHECK(scalar_mul(e, -1, P) == negate(e, P));
  CHECK_THROWS_AS(add(e, P, Point(f3.one(), f3.zero())), OffCurve);
  CHECK(full_group(e).size() == 6);
}

TEST_CASE("orders in char 2") {
  Field f4 = Field::binary(2);
  Char2Curve e(f4.zero(), f4.one());
  Point P(f4.element(2), f4.element(2));
  CHECK(*order_of(e, P) == 8);
  CHECK(full_group(e).size() == 8);
  CHECK(negate(e, negate(e, P)) == P);
  CHECK(negate(e, P) == Point(P.x(), P.x() + P.y()));
  CHECK(j_invariant_char2(e).is_one());
  CHECK(order2_point_char2(e) == Point(f4.zero(), f4.one()));
  Char2Curve r(f4.zero(), f4.element(2));
  CHECK(j_invariant_char2(r) == f4.element(3));
  CHECK(has_order2_char2(r));
}

TEST_CASE("order_of small cases") {
  Field f5 = Field::prime(5);
  CubicCurve e = cubic(f5, 0, 4, 1);
  CHECK(*order_of(e, e.w3()) == 2);
  CHECK(two_torsion(e).size() == 1);
  Field q = Field::rationals();
  CubicCurve full = cubic(q, 0, 3, 2);
  CHECK(two_torsion(full).size() == 3);
}

TEST_CASE("j-invariant agrees between models") {
  Field f = Field::prime(13);
  CubicCurve e = cubic(f, 2, 3, 5);
  Weierstrass w = e.weierstrass();
  Element j = w.j_invariant();
  // Translating x leaves j unchanged.
  CHECK(translate_x(e, f.from_int(4)).curve.weierstrass().j_invariant() == j);
  Field f4 = Field::binary(2);
  Char2Curve c(f4.element(2), f4.element(3));
  CHECK(c.weierstrass().j_invariant() == j_invariant_char2(c));
}

TEST_CASE("translate_x") {
  Field f11 = Field::prime(11);
  CubicCurve e = cubic(f11, -1, 2, 3);
  TranslatedCurve t = translate_x(e, f11.one());
  CHECK(t.curve == cubic(f11, -2, 4, 6));
  CHECK(translate_x(e, f11.zero()).curve == e);
  for (const Point& P : full_group(e)) {
    Point image = t.map(P);
    REQUIRE(t.curve.contains(image));
    CHECK(order_of(e, P) == order_of(t.curve, image));
    CHECK(t.unmap(image) == P);
  }
}

TEST_CASE("group law matches the oracle, Hasse bound and Lagrange on every small curve") {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    Field f = Field::prime(p);
    for (const Element& alpha : f.elements()) {
      for (const Element& pc : f.elements()) {
        for (const Element& qc : f.elements()) {
          if ((pc * pc - 4 * qc).is_zero() || ((alpha + pc) * alpha + qc).is_zero()) continue;
          CubicCurve e(alpha, QuadraticPoly(pc, qc));
          oracle::Curve o = oracle::Curve::cubic(e);
          auto group = full_group(e);
          auto brute = o.points();
          REQUIRE(group.size() == brute.size());
          std::sort(group.begin(), group.end());
          std::sort(brute.begin(), brute.end());
          REQUIRE(group == brute);
          CHECK(group.size() + hasse_slack(p) >= p + 1);
          CHECK(group.size() <= p + 1 + hasse_slack(p));
          for (const Point& P : group) {
            CHECK(group.size() % *order_of(e, P) == 0);
          }
          if (p == 7) {
            for (const Point& P : group) {
              for (const Point& Q : group) REQUIRE(add(e, P, Q) == o.add(P, Q));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {17, 31, 97}) {
    Field f = Field::prime(p);
    for (int n = 0; n < 5; ++n) {
      Element alpha = f.element(rng() % p);
      Element pc = f.element(rng() % p), qc = f.element(rng() % p);
      if ((pc * pc - 4 * qc).is_zero() || ((alpha + pc) * alpha + qc).is_zero()) continue;
      CubicCurve e(alpha, QuadraticPoly(pc, qc));
      auto group = full_group(e);
      for (int i = 0; i < 500; ++i) {
        const Point& P = group[rng() % group.size()];
        const Point& Q = group[rng() % group.size()];
        const Point& R = group[rng() % group.size()];
        REQUIRE(add(e, add(e, P, Q), R) == add(e, P, add(e, Q, R)));
        REQUIRE(add(e, P, Q) == add(e, Q, P));
        REQUIRE(add(e, P, negate(e, P)).is_infinity());
      }
    }
  }
}

TEST_CASE("char-2 group matches the oracle") {
  for (unsigned k = 1; k <= 4; ++k) {
    Field f = Field::binary(k);
    for (const Element& a2 : f.elements()) {
      for (const Element& a6 : f.elements()) {
        if (a6.is_zero()) continue;
        Char2Curve e(a2, a6);
        oracle::Curve o = oracle::Curve::char2(e);
        auto group = full_group(e);
        auto brute = o.points();
        std::sort(group.begin(), group.end());
        std::sort(brute.begin(), brute.end());
        REQUIRE(group == brute);
        for (const Point& P : group) {
          for (const Point& Q : group) REQUIRE(add(e, P, Q) == o.add(P, Q));
          CHECK(group.size() % *order_of(e, P) == 0);
        }
        // Exactly the two points (x, y) and (x, y + x) over each nonzero x.
        for (const Point& P : group) {
          if (P.is_infinity() || P.x().is_zero()) continue;
          CHECK(std::count_if(group.begin(), group.end(), [&](const Point& Q) {
                  return !Q.is_infinity() && Q.x() == P.x();
                }) == 2);
        }
      }
    }
  }
}

TEST_CASE("full_group refuses big fields") {
  Field big = Field::prime(70001);
  CHECK_THROWS_AS(full_group(cubic(big, 0, 1, 1)), FieldTooLarge);
  CHECK_THROWS_AS(full_group(cubic(Field::rationals(), 0, 1, 1)), FieldTooLarge);
}

TEST_CASE("certify") {
  Field f3 = Field::prime(3);
  CubicCurve e = cubic(f3, -1, 0, 1);
  Point P(f3.from_int(1), f3.from_int(2));
  CHECK(certify(e, P, 6).verified);
  CHECK_FALSE(certify(e, P, 3).verified);
  CHECK_FALSE(certify(e, P, 12).verified);
}
