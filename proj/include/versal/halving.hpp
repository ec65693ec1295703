#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "versal/curve.hpp"
#include "versal/field.hpp"

namespace versal {

enum class HalvingCriterion { split, quadext, rT, char2 };

std::string_view to_string(HalvingCriterion criterion);

/// A point Q with 2Q = P and the slope of the tangent at Q (absent for the
/// 2-torsion halves of infinity, whose tangent is vertical).
struct Half {
  Point point;
  std::optional<Element> slope;
};

/**
 * Square roots r_i of x0 - alpha_i with r1 r2 r3 = -y0, where
 * (alpha_1, alpha_2) are the roots of g and alpha_3 = alpha.
 *
 * The values live in K_g for irreducible g. For split g they are base-field
 * values embedded with c1 = 0.
 */
struct RootTriple {
  std::array<QuadExtElement, 3> r;
  std::array<QuadExtElement, 3> roots;

  QuadExtElement s1() const { return r[0] + r[1] + r[2]; }
  QuadExtElement s2() const { return r[0] * r[1] + r[1] * r[2] + r[2] * r[0]; }
  /// (x0 + s2, -y0 - s1 s2); s1 and s2 must lie in K.
  Point half(const Point& P) const;
  /// -s1.
  Element slope() const;
};

/// Which roots were used.
struct HalvingWitness {
  std::optional<Element> r;     ///< sqrt(x0 - alpha), or sqrt(x0) in characteristic 2
  std::optional<Element> T;     ///< (r,T) criterion
  std::optional<QuadExtElement> rho;  ///< sqrt(x0 - X) in K_g
  std::optional<Element> l;     ///< Artin-Schreier root, characteristic 2
  std::optional<Element> beta;  ///< sqrt(a6), characteristic 2
  std::vector<RootTriple> triples;  ///< split case
};

struct HalvingResult {
  std::vector<Half> halves;
  HalvingCriterion criterion;
  HalvingWitness witness;

  bool halvable() const noexcept { return !halves.empty(); }
  std::vector<Point> points() const;
};

/// g splits over K. All four halves when every x0 - alpha_i is a square,
/// otherwise an empty result. Throws WrongCase when g is irreducible.
HalvingResult halve_split(const CubicCurve& curve, const Point& P);

/// g irreducible over K. The two halves when x0 - X is a square in K_g,
/// otherwise an empty result. Throws WrongCase when g splits.
HalvingResult halve_quadext(const CubicCurve& curve, const Point& P);

/// The (r, T) criterion for P != (alpha, 0), either shape of g. Tries both
/// signs of r and returns every half found; throws NotHalvable when none
/// exists and PointIsW3 when x0 = alpha.
HalvingResult halve_rT(const CubicCurve& curve, const Point& P);

/// Halving on y^2 + xy = x^3 + a2 x^2 + a6 via l^2 + l = x0 + a2.
HalvingResult halve_char2(const Char2Curve& curve, const Point& P);

/// Picks the routine for the curve shape; infinity yields the rational 2-torsion and infinity.
HalvingResult halve(const CubicCurve& curve, const Point& P);
HalvingResult halve(const Char2Curve& curve, const Point& P);

/// The curve y^2 = (x + r^2)(x^2 + (T^2 + 2 y0/r) x + (y0/r)^2) on which
/// (0, y0) has the halves Q_{r,+-T}.
struct OriginHalving {
  CubicCurve curve;
  Point point;
  std::array<Half, 2> halves;
};

OriginHalving halvability_criterion_origin(const Element& y0, const Element& r, const Element& T);

/// (x, y) -> (x / r^2, y / r^3), taking the origin-halving curve for
/// (y0, r, T) to the one for (y0 / r^3, 1, T / r).
struct OriginNormalization {
  Element t;
  Element y0;
  Element scale;

  Point map(const Point& P) const;
};

OriginNormalization normalize_origin(const Element& y0, const Element& r, const Element& T);

/// x(2Q) = (p - q)^2 / (4q) - 1 for Q = (0, y1) on y^2 = (x + 1)(x^2 + p x + q), where q = y1^2 != 0.
Element origin_double_x(const Element& p, const Element& q);

/// The unique root triple with Q = Q_{r1,r2,r3}, for P = 2Q and y(Q) != 0.
RootTriple half_to_roots(const CubicCurve& curve, const Point& Q, const Point& P);

}  // namespace versal
