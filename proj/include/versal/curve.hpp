#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "versal/field.hpp"

namespace versal {

/// A K-point of a curve: the point at infinity or an affine pair.
class Point {
 public:
  static Point infinity() { return Point(); }
  Point(Element x, Element y);

  bool is_infinity() const noexcept { return !affine_.has_value(); }
  const Element& x() const;
  const Element& y() const;

  friend bool operator==(const Point&, const Point&) = default;
  /// Infinity first, then by (x, y) representation; for deterministic ordering.
  friend bool operator<(const Point& lhs, const Point& rhs);

  std::string to_string() const;

 private:
  Point() = default;
  struct Affine {
    Element x;
    Element y;
    friend bool operator==(const Affine&, const Affine&) = default;
  };
  std::optional<Affine> affine_;
};

/// General Weierstrass coefficients y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
/// Both curve models reduce to this for the group law and the j-invariant.
struct Weierstrass {
  Element a1, a2, a3, a4, a6;

  const Field& field() const noexcept { return a2.field(); }
  const Weierstrass& weierstrass() const noexcept { return *this; }
  bool contains(const Point& point) const;
  Element discriminant() const;
  /// Throws SingularCurve when the discriminant vanishes.
  Element j_invariant() const;
};

/**
 * y^2 = (x - alpha)(x^2 + p x + q) over a field of characteristic != 2.
 *
 * The constructor rejects g(alpha) = 0 and p^2 - 4q = 0.
 */
class CubicCurve {
 public:
  CubicCurve(Element alpha, QuadraticPoly g);
  /// From y^2 = x^3 + a2 x^2 + a4 x + a6: finds a rational root (exhaustion
  /// over F_p, rational root theorem over Q; the smallest root wins) and
  /// throws InvalidParams when there is no rational 2-torsion.
  static CubicCurve from_coefficients(const Element& a2, const Element& a4, const Element& a6);

  const Field& field() const noexcept { return alpha_.field(); }
  const Element& alpha() const noexcept { return alpha_; }
  const QuadraticPoly& g() const noexcept { return g_; }
  const Element& p() const noexcept { return g_.p; }
  const Element& q() const noexcept { return g_.q; }
  const Weierstrass& weierstrass() const noexcept { return model_; }

  /// (x - alpha) g(x)
  Element rhs(const Element& x) const { return (x - alpha_) * g_(x); }
  bool contains(const Point& point) const;
  bool g_irreducible() const { return g_.is_irreducible(); }
  /// The 2-torsion point (alpha, 0).
  Point w3() const { return Point(alpha_, field().zero()); }

  friend bool operator==(const CubicCurve& a, const CubicCurve& b) { return a.alpha_ == b.alpha_ && a.g_ == b.g_; }
  std::string to_string() const;

 private:
  Element alpha_;
  QuadraticPoly g_;
  Weierstrass model_;
};

/// Ordinary characteristic-2 model y^2 + xy = x^3 + a2 x^2 + a6 over GF(2^k), a6 != 0.
class Char2Curve {
 public:
  Char2Curve(Element a2, Element a6);

  const Field& field() const noexcept { return a2_.field(); }
  const Element& a2() const noexcept { return a2_; }
  const Element& a6() const noexcept { return a6_; }
  const Weierstrass& weierstrass() const noexcept { return model_; }
  bool contains(const Point& point) const { return model_.contains(point); }

  friend bool operator==(const Char2Curve& a, const Char2Curve& b) { return a.a2_ == b.a2_ && a.a6_ == b.a6_; }
  std::string to_string() const;

 private:
  Element a2_;
  Element a6_;
  Weierstrass model_;
};

template <class C>
concept CurveModel = requires(const C& c, const Point& P) {
  { c.weierstrass() } -> std::convertible_to<const Weierstrass&>;
  { c.contains(P) } -> std::same_as<bool>;
};

namespace detail {
Point add(const Weierstrass& curve, const Point& P, const Point& Q);
Point negate(const Weierstrass& curve, const Point& P);
Point scalar_mul(const Weierstrass& curve, std::int64_t n, const Point& P);
std::optional<std::uint64_t> order_of(const Weierstrass& curve, const Point& P, std::uint64_t cap);
[[noreturn]] void throw_off_curve(const Point& P);
}  // namespace detail

/// Default order cap: 2(q + 1 + ceil(2 sqrt q)) over F_q, 24 over Q.
std::uint64_t default_order_cap(const Field& field);

template <CurveModel C>
void require_on_curve(const C& curve, const Point& P) {
  if (!curve.contains(P)) detail::throw_off_curve(P);
}

template <CurveModel C>
Point add(const C& curve, const Point& P, const Point& Q) {
  require_on_curve(curve, P);
  require_on_curve(curve, Q);
  return detail::add(curve.weierstrass(), P, Q);
}

template <CurveModel C>
Point negate(const C& curve, const Point& P) {
  require_on_curve(curve, P);
  return detail::negate(curve.weierstrass(), P);
}

template <CurveModel C>
Point scalar_mul(const C& curve, std::int64_t n, const Point& P) {
  require_on_curve(curve, P);
  return detail::scalar_mul(curve.weierstrass(), n, P);
}

template <CurveModel C>
Point doubled(const C& curve, const Point& P) {
  return add(curve, P, P);
}

/// Exact order by iterated addition, or empty when it exceeds `cap`.
template <CurveModel C>
std::optional<std::uint64_t> order_of(const C& curve, const Point& P, std::optional<std::uint64_t> cap = {}) {
  require_on_curve(curve, P);
  return detail::order_of(curve.weierstrass(), P, cap.value_or(default_order_cap(curve.weierstrass().field())));
}

/// All K-rational points of order 2: (alpha,0) plus the roots of g when it splits.
std::vector<Point> two_torsion(const CubicCurve& curve);

/// Result of the substitution x -> x - shift.
struct TranslatedCurve {
  CubicCurve curve;
  Element shift;

  Point map(const Point& P) const;
  Point unmap(const Point& P) const;
};

/// y^2 = (x - (alpha - x0)) g(x + x0), with (x, y) -> (x - x0, y).
TranslatedCurve translate_x(const CubicCurve& curve, const Element& x0);

/// Every rational point (infinity first) of a curve over a finite field with
/// at most 2^16 elements; FieldTooLarge otherwise.
std::vector<Point> full_group(const CubicCurve& curve);
std::vector<Point> full_group(const Char2Curve& curve);

/// j = 1 / a6.
Element j_invariant_char2(const Char2Curve& curve);
/// A rational point of order 2 exists iff j is a nonzero square.
bool has_order2_char2(const Char2Curve& curve);
/// (0, sqrt(a6)); throws InvalidParams when a6 is not a square.
Point order2_point_char2(const Char2Curve& curve);

/// A point with a claimed order and whether the claim checked out exactly.
struct TorsionWitness {
  Point point;
  std::uint64_t claimed_order = 0;
  bool verified = false;
  std::string note;
};

template <CurveModel C>
TorsionWitness certify(const C& curve, Point P, std::uint64_t claimed_order, std::string note = {}) {
  auto order = order_of(curve, P, claimed_order);
  bool ok = order && *order == claimed_order;
  return TorsionWitness{std::move(P), claimed_order, ok, std::move(note)};
}

}  // namespace versal
