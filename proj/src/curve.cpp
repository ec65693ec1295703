#include "versal/curve.hpp"

#include <algorithm>
#include <numeric>

namespace versal {

namespace {

constexpr std::uint64_t kMaxEnumeratedField = std::uint64_t{1} << 16;

void require_enumerable(const Field& field) {
  if (!field.is_finite() || field.size() > kMaxEnumeratedField) {
    throw FieldTooLarge("point enumeration needs a finite field with at most 2^16 elements, got " +
                        field.to_string());
  }
}

Weierstrass cubic_model(const Element& alpha, const QuadraticPoly& g) {
  const Field& f = alpha.field();
  // (x - alpha)(x^2 + p x + q)
  return Weierstrass{f.zero(), g.p - alpha, f.zero(), g.q - alpha * g.p, -alpha * g.q};
}

// Integer divisors of |n| (n != 0) by trial division.
std::vector<mpz_class> divisors(const mpz_class& n) {
  mpz_class m = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= m; ++d) {
    if (d > 10'000'000) throw InvalidParams("constant term too large for rational root search");
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<Element> smallest_rational_root(const Element& a2, const Element& a4, const Element& a6) {
  const Field& f = a2.field();
  auto cubic = [&](const Element& x) { return ((x + a2) * x + a4) * x + a6; };
  std::vector<Element> roots;
  if (f.is_finite()) {
    require_enumerable(f);
    for (const Element& x : f.elements()) {
      if (cubic(x).is_zero()) return x;
    }
    return std::nullopt;
  }
  // x = z / L turns the cubic into a monic integer polynomial in z.
  mpz_class L = 1;
  for (const Element* c : {&a2, &a4, &a6}) {
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c->rational().get_den_mpz_t());
  }
  mpq_class constant = a6.rational() * L * L * L;
  if (constant == 0) return f.zero();
  for (const mpz_class& d : divisors(constant.get_num())) {
    for (int sign : {1, -1}) {
      Element x = f.from_rational(mpq_class(d * sign, L));
      if (cubic(x).is_zero()) roots.push_back(x);
    }
  }
  if (roots.empty()) return std::nullopt;
  return *std::min_element(roots.begin(), roots.end());
}

std::uint64_t isqrt_ceil(std::uint64_t n) {
  std::uint64_t r = 0;
  while (r * r < n) ++r;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Point

Point::Point(Element x, Element y) : affine_(Affine{std::move(x), std::move(y)}) {
  if (!(affine_->x.field() == affine_->y.field())) throw FieldMismatch("point coordinates from different fields");
}

const Element& Point::x() const {
  if (!affine_) throw InvalidParams("the point at infinity has no coordinates");
  return affine_->x;
}

const Element& Point::y() const {
  if (!affine_) throw InvalidParams("the point at infinity has no coordinates");
  return affine_->y;
}

bool operator<(const Point& lhs, const Point& rhs) {
  if (lhs.is_infinity() || rhs.is_infinity()) return lhs.is_infinity() && !rhs.is_infinity();
  if (lhs.x() == rhs.x()) return lhs.y() < rhs.y();
  return lhs.x() < rhs.x();
}

std::string Point::to_string() const {
  if (is_infinity()) return "infinity";
  return "(" + affine_->x.to_string() + ", " + affine_->y.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Weierstrass

bool Weierstrass::contains(const Point& P) const {
  if (P.is_infinity()) return true;
  const Element& x = P.x();
  const Element& y = P.y();
  if (!(x.field() == field())) return false;
  return (y + a1 * x + a3) * y == ((x + a2) * x + a4) * x + a6;
}

Element Weierstrass::discriminant() const {
  Element b2 = a1 * a1 + 4 * a2;
  Element b4 = 2 * a4 + a1 * a3;
  Element b6 = a3 * a3 + 4 * a6;
  Element b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

Element Weierstrass::j_invariant() const {
  Element delta = discriminant();
  if (delta.is_zero()) throw SingularCurve("singular Weierstrass model has no j-invariant");
  Element b2 = a1 * a1 + 4 * a2;
  Element b4 = 2 * a4 + a1 * a3;
  Element c4 = b2 * b2 - 24 * b4;
  return c4 * c4 * c4 / delta;
}

// ---------------------------------------------------------------------------
// Curve models

CubicCurve::CubicCurve(Element alpha, QuadraticPoly g)
    : alpha_(std::move(alpha)), g_(std::move(g)), model_(cubic_model(alpha_, g_)) {
  if (!(alpha_.field() == g_.field())) throw FieldMismatch("alpha and g from different fields");
  if (field().characteristic() == 2) throw InvalidParams("the (alpha, g) model needs characteristic != 2");
  if (g_(alpha_).is_zero()) throw SingularCurve("alpha is a root of g, the cubic has a repeated root");
}

CubicCurve CubicCurve::from_coefficients(const Element& a2, const Element& a4, const Element& a6) {
  auto alpha = smallest_rational_root(a2, a4, a6);
  if (!alpha) throw InvalidParams("x^3 + a2 x^2 + a4 x + a6 has no rational root (no rational 2-torsion)");
  // Synthetic division by (x - alpha).
  Element p = a2 + *alpha;
  Element q = a4 + *alpha * p;
  return CubicCurve(*alpha, QuadraticPoly(p, q));
}

bool CubicCurve::contains(const Point& P) const {
  if (P.is_infinity()) return true;
  if (!(P.x().field() == field())) return false;
  return P.y().square() == rhs(P.x());
}

std::string CubicCurve::to_string() const {
  return "y^2 = (x - " + alpha_.to_string() + ")(x^2 + " + g_.p.to_string() + "x + " + g_.q.to_string() + ") over " +
         field().to_string();
}

Char2Curve::Char2Curve(Element a2, Element a6)
    : a2_(std::move(a2)),
      a6_(std::move(a6)),
      model_{a2_.field().one(), a2_, a2_.field().zero(), a2_.field().zero(), a6_} {
  if (!(a2_.field() == a6_.field())) throw FieldMismatch("a2 and a6 from different fields");
  if (field().kind() != Field::Kind::binary) throw InvalidParams("the char-2 model needs a binary field");
  if (a6_.is_zero()) throw SingularCurve("a6 = 0: the curve is singular (j would be infinite)");
}

std::string Char2Curve::to_string() const {
  return "y^2 + xy = x^3 + (" + a2_.to_string() + ")x^2 + " + a6_.to_string() + " over " + field().to_string();
}

// ---------------------------------------------------------------------------
// Group law

namespace detail {

[[noreturn]] void throw_off_curve(const Point& P) { throw OffCurve("point " + P.to_string() + " is not on the curve"); }

Point negate(const Weierstrass& E, const Point& P) {
  if (P.is_infinity()) return P;
  return Point(P.x(), -P.y() - E.a1 * P.x() - E.a3);
}

Point add(const Weierstrass& E, const Point& P, const Point& Q) {
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  const Element& x1 = P.x();
  const Element& y1 = P.y();
  const Element& x2 = Q.x();
  const Element& y2 = Q.y();
  Element lambda = x1, nu = x1;
  if (x1 == x2) {
    if ((y1 + y2 + E.a1 * x2 + E.a3).is_zero()) return Point::infinity();
    Element denom = (2 * y1 + E.a1 * x1 + E.a3).inverse();
    lambda = (3 * x1 * x1 + 2 * E.a2 * x1 + E.a4 - E.a1 * y1) * denom;
    nu = (-x1 * x1 * x1 + E.a4 * x1 + 2 * E.a6 - E.a3 * y1) * denom;
  } else {
    Element denom = (x2 - x1).inverse();
    lambda = (y2 - y1) * denom;
    nu = (y1 * x2 - y2 * x1) * denom;
  }
  Element x3 = lambda * lambda + E.a1 * lambda - E.a2 - x1 - x2;
  Element y3 = -(lambda + E.a1) * x3 - nu - E.a3;
  return Point(std::move(x3), std::move(y3));
}

Point scalar_mul(const Weierstrass& E, std::int64_t n, const Point& P) {
  Point base = n < 0 ? negate(E, P) : P;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Point acc = Point::infinity();
  while (k) {
    if (k & 1) acc = add(E, acc, base);
    k >>= 1;
    if (k) base = add(E, base, base);
  }
  return acc;
}

std::optional<std::uint64_t> order_of(const Weierstrass& E, const Point& P, std::uint64_t cap) {
  Point acc = P;
  std::uint64_t n = 1;
  while (!acc.is_infinity()) {
    if (n >= cap) return std::nullopt;
    acc = add(E, acc, P);
    ++n;
  }
  return n;
}

}  // namespace detail

std::uint64_t default_order_cap(const Field& field) {
  if (!field.is_finite()) return 24;
  const std::uint64_t q = field.size();
  return 2 * (q + 1 + isqrt_ceil(4 * q));
}

// ---------------------------------------------------------------------------
// Structure

std::vector<Point> two_torsion(const CubicCurve& curve) {
  std::vector<Point> out{curve.w3()};
  if (auto roots = curve.g().roots()) {
    out.emplace_back(roots->first, curve.field().zero());
    out.emplace_back(roots->second, curve.field().zero());
  }
  return out;
}

Point TranslatedCurve::map(const Point& P) const {
  if (P.is_infinity()) return P;
  return Point(P.x() - shift, P.y());
}

Point TranslatedCurve::unmap(const Point& P) const {
  if (P.is_infinity()) return P;
  return Point(P.x() + shift, P.y());
}

TranslatedCurve translate_x(const CubicCurve& curve, const Element& x0) {
  return TranslatedCurve{CubicCurve(curve.alpha() - x0, curve.g().shifted(x0)), x0};
}

std::vector<Point> full_group(const CubicCurve& curve) {
  require_enumerable(curve.field());
  std::vector<Point> points{Point::infinity()};
  for (const Element& x : curve.field().elements()) {
    Element v = curve.rhs(x);
    if (v.is_zero()) {
      points.emplace_back(x, v);
    } else if (auto y = sqrt(v)) {
      points.emplace_back(x, *y);
      points.emplace_back(x, -*y);
    }
  }
  return points;
}

std::vector<Point> full_group(const Char2Curve& curve) {
  require_enumerable(curve.field());
  std::vector<Point> points{Point::infinity()};
  for (const Element& x : curve.field().elements()) {
    if (x.is_zero()) {
      points.emplace_back(x, char2_sqrt(curve.a6()));
      continue;
    }
    // y = x z turns the equation into z^2 + z = (x^3 + a2 x^2 + a6) / x^2.
    Element c = ((x + curve.a2()) * x * x + curve.a6()) / x.square();
    if (auto z = solve_artin_schreier(c)) {
      points.emplace_back(x, x * *z);
      points.emplace_back(x, x * (*z + 1));
    }
  }
  return points;
}

Element j_invariant_char2(const Char2Curve& curve) { return curve.a6().inverse(); }

bool has_order2_char2(const Char2Curve& curve) {
  Element j = j_invariant_char2(curve);
  return !j.is_zero() && is_square(j);
}

Point order2_point_char2(const Char2Curve& curve) {
  auto beta = sqrt(curve.a6());
  if (!beta) throw InvalidParams("a6 is not a square: no rational point of order 2");
  return Point(curve.field().zero(), *beta);
}

}  // namespace versal
