#pragma once

// Brute-force reference computations. These use only base-field arithmetic and
// their own group law so the library results can be checked independently.

#include <cstdint>
#include <optional>
#include <vector>

#include "versal/curve.hpp"
#include "versal/field.hpp"

namespace oracle {

using versal::Element;
using versal::Field;
using versal::Point;

// y^2 = x^3 + a2 x^2 + a4 x + a6 (char != 2) or y^2 + xy = x^3 + a2 x^2 + a6 (char 2).
struct Curve {
  Element a2, a4, a6;
  bool binary = false;

  static Curve cubic(const versal::CubicCurve& c) {
    const auto& w = c.weierstrass();
    return Curve{w.a2, w.a4, w.a6, false};
  }
  static Curve char2(const versal::Char2Curve& c) { return Curve{c.a2(), c.field().zero(), c.a6(), true}; }

  const Field& field() const { return a2.field(); }

  bool on(const Point& P) const {
    if (P.is_infinity()) return true;
    const Element& x = P.x();
    const Element& y = P.y();
    Element lhs = binary ? y * y + x * y : y * y;
    return lhs == x * x * x + a2 * x * x + a4 * x + a6;
  }

  Point neg(const Point& P) const {
    if (P.is_infinity()) return P;
    return binary ? Point(P.x(), P.x() + P.y()) : Point(P.x(), -P.y());
  }

  Point add(const Point& P, const Point& Q) const {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    if (Q == neg(P)) return Point::infinity();
    const Element &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
    if (binary) {
      Element lambda = P == Q ? x1 + y1 / x1 : (y1 + y2) / (x1 + x2);
      Element x3 = lambda * lambda + lambda + a2 + x1 + x2;
      Element y3 = lambda * (x1 + x3) + x3 + y1;
      return Point(x3, y3);
    }
    Element lambda = P == Q ? (3 * x1 * x1 + 2 * a2 * x1 + a4) / (2 * y1) : (y2 - y1) / (x2 - x1);
    Element x3 = lambda * lambda - a2 - x1 - x2;
    Element y3 = lambda * (x1 - x3) - y1;
    return Point(x3, y3);
  }

  Point mul(std::int64_t n, const Point& P) const {
    Point base = n < 0 ? neg(P) : P;
    Point acc = Point::infinity();
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) acc = add(acc, base);
    return acc;
  }

  std::uint64_t order(const Point& P, std::uint64_t cap = 1u << 20) const {
    Point acc = P;
    std::uint64_t n = 1;
    while (!acc.is_infinity()) {
      acc = add(acc, P);
      if (++n > cap) return 0;
    }
    return n;
  }

  /// Double loop over x and y.
  std::vector<Point> points() const {
    std::vector<Point> out{Point::infinity()};
    const auto elems = field().elements();
    for (const Element& x : elems) {
      for (const Element& y : elems) {
        Point P(x, y);
        if (on(P)) out.push_back(P);
      }
    }
    return out;
  }

  std::vector<Point> halves(const Point& P, const std::vector<Point>& group) const {
    std::vector<Point> out;
    for (const Point& Q : group) {
      if (add(Q, Q) == P) out.push_back(Q);
    }
    return out;
  }
};

/// Whether the line of slope l through -P meets E at Q with multiplicity >= 2:
/// the cubic obtained by substituting the line is divided twice by (x - x(Q)).
inline bool tangent_at(const Curve& E, const Point& P, const Point& Q, const Element& l) {
  if (P.is_infinity() || Q.is_infinity()) return false;
  const Point minus_P = E.neg(P);
  // y = l x + m through -P
  const Element m = minus_P.y() - l * minus_P.x();
  if (!(l * Q.x() + m == Q.y())) return false;
  // Coefficients of x^3 + c2 x^2 + c1 x + c0, highest first.
  std::vector<Element> h;
  if (E.binary) {
    // x^3 + a2 x^2 + a6 + (l x + m)^2 + x (l x + m)
    h = {E.field().one(), E.a2 + l * l + l, m, E.a6 + m * m};
  } else {
    // x^3 + a2 x^2 + a4 x + a6 - (l x + m)^2
    h = {E.field().one(), E.a2 - l * l, E.a4 - 2 * l * m, E.a6 - m * m};
  }
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<Element> quotient{h[0]};
    for (std::size_t i = 1; i < h.size(); ++i) quotient.push_back(h[i] + quotient.back() * Q.x());
    if (!quotient.back().is_zero()) return false;
    quotient.pop_back();
    h = quotient;
  }
  return true;
}

inline bool is_square(const Element& x) {
  for (const Element& y : x.field().elements()) {
    if (y * y == x) return true;
  }
  return false;
}

/// Short cubics y^2 = x^3 + a2 x^2 + a4 x + a6 isomorphic over a finite field via
/// x -> u^2 x + r, y -> u^3 y (scan over all u != 0 and r).
inline std::optional<std::pair<Element, Element>> isomorphism(const Curve& E, const Curve& F) {
  const Field& k = E.field();
  for (const Element& u : k.elements()) {
    if (u.is_zero()) continue;
    const Element u2 = u * u;
    for (const Element& r : k.elements()) {
      if (!((E.a2 + 3 * r) == F.a2 * u2)) continue;
      if (!((E.a4 + 2 * E.a2 * r + 3 * r * r) == F.a4 * u2 * u2)) continue;
      if (!((((r + E.a2) * r + E.a4) * r + E.a6) == F.a6 * u2 * u2 * u2)) continue;
      return std::pair{u, r};
    }
  }
  return std::nullopt;
}

inline Element discriminant(const Curve& E) {
  // of x^3 + a x^2 + b x + c, times 16
  const Element &a = E.a2, &b = E.a4, &c = E.a6;
  Element d = a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
  return 16 * d;
}

}  // namespace oracle
