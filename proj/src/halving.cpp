#include "versal/halving.hpp"

#include <algorithm>

namespace versal {

namespace {

void require_affine(const Point& P, std::string_view routine) {
  if (P.is_infinity()) throw InvalidParams(std::string(routine) + " needs an affine point");
}

void push_unique(std::vector<Half>& halves, Half half) {
  for (const Half& h : halves) {
    if (h.point == half.point) return;
  }
  halves.push_back(std::move(half));
}

template <class C>
void verify_halves(const C& curve, const Point& P, const std::vector<Half>& halves) {
  for (const Half& h : halves) {
    if (!(doubled(curve, h.point) == P)) {
      throw VerificationFailure("computed half " + h.point.to_string() + " does not double to " + P.to_string());
    }
  }
}

std::array<QuadExtElement, 3> curve_roots(const CubicCurve& curve) {
  const QuadraticPoly& g = curve.g();
  QuadExtElement a3 = QuadExtElement::embed(g, curve.alpha());
  if (auto roots = g.roots()) {
    return {QuadExtElement::embed(g, roots->first), QuadExtElement::embed(g, roots->second), a3};
  }
  QuadExtElement x = QuadExtElement::generator(g);
  return {x, x.conjugate(), a3};
}

}  // namespace

std::string_view to_string(HalvingCriterion criterion) {
  switch (criterion) {
    case HalvingCriterion::split:
      return "split";
    case HalvingCriterion::quadext:
      return "quadext";
    case HalvingCriterion::rT:
      return "rT";
    case HalvingCriterion::char2:
      return "char2";
  }
  return "unknown";
}

std::vector<Point> HalvingResult::points() const {
  std::vector<Point> out;
  out.reserve(halves.size());
  for (const Half& h : halves) out.push_back(h.point);
  return out;
}

Point RootTriple::half(const Point& P) const {
  const Element s1v = s1().base_value();
  const Element s2v = s2().base_value();
  return Point(P.x() + s2v, -P.y() - s1v * s2v);
}

Element RootTriple::slope() const { return -s1().base_value(); }

HalvingResult halve_split(const CubicCurve& curve, const Point& P) {
  require_affine(P, "halve_split");
  require_on_curve(curve, P);
  if (curve.g_irreducible()) throw WrongCase("halve_split needs g to split over the base field");

  HalvingResult result{{}, HalvingCriterion::split, {}};
  const auto roots = curve_roots(curve);
  const QuadraticPoly& g = curve.g();
  std::array<Element, 3> r{P.x(), P.x(), P.x()};
  for (std::size_t i = 0; i < 3; ++i) {
    auto root = sqrt(P.x() - roots[i].c0());
    if (!root) return result;
    r[i] = *root;
  }
  // The sign patterns with r1 r2 r3 = -y0; a zero r_i collapses two patterns into one.
  for (int mask = 0; mask < 8; ++mask) {
    std::array<Element, 3> signed_r = r;
    for (std::size_t i = 0; i < 3; ++i) {
      if (mask >> i & 1) signed_r[i] = -signed_r[i];
    }
    if (!(signed_r[0] * signed_r[1] * signed_r[2] == -P.y())) continue;
    RootTriple triple{{QuadExtElement::embed(g, signed_r[0]), QuadExtElement::embed(g, signed_r[1]),
                       QuadExtElement::embed(g, signed_r[2])},
                      roots};
    Half half{triple.half(P), triple.slope()};
    const std::size_t before = result.halves.size();
    push_unique(result.halves, std::move(half));
    if (result.halves.size() != before) result.witness.triples.push_back(std::move(triple));
  }
  verify_halves(curve, P, result.halves);
  return result;
}

HalvingResult halve_quadext(const CubicCurve& curve, const Point& P) {
  require_affine(P, "halve_quadext");
  require_on_curve(curve, P);
  if (!curve.g_irreducible()) throw WrongCase("halve_quadext needs g irreducible over the base field");

  HalvingResult result{{}, HalvingCriterion::quadext, {}};
  const QuadraticPoly& g = curve.g();
  const Element& x0 = P.x();
  const Element& y0 = P.y();
  auto rho = ext_sqrt(QuadExtElement(g, x0, -x0.field().one()));
  if (!rho) return result;

  const Element norm = ext_norm(*rho);
  const Element trace = ext_trace(*rho);
  // The unique r in K with r^2 = x0 - alpha and r Norm(rho) = -y0.
  Element r = y0.is_zero() ? x0.field().zero() : -y0 / norm;
  if (!(r.square() == x0 - curve.alpha())) {
    throw VerificationFailure("r = -y0 / Norm(rho) is not a square root of x0 - alpha");
  }
  const Element n_plus = ext_norm(*rho + r);
  const Element n_minus = ext_norm(r - *rho);
  push_unique(result.halves, Half{Point(curve.alpha() + n_plus, -trace * n_plus), -(r + trace)});
  push_unique(result.halves, Half{Point(curve.alpha() + n_minus, trace * n_minus), -(r - trace)});
  result.witness.r = r;
  result.witness.rho = *rho;
  verify_halves(curve, P, result.halves);
  return result;
}

HalvingResult halve_rT(const CubicCurve& curve, const Point& P) {
  require_affine(P, "halve_rT");
  require_on_curve(curve, P);
  const Element& x0 = P.x();
  const Element& y0 = P.y();
  if (x0 == curve.alpha()) throw PointIsW3("halve_rT needs P != (alpha, 0)");

  HalvingResult result{{}, HalvingCriterion::rT, {}};
  const Element d = x0 - curve.alpha();
  auto root = sqrt(d);
  if (!root) throw NotHalvable("x0 - alpha is not a square");
  for (const Element& r : {*root, -*root}) {
    const Element D = (2 * x0 + curve.p()) * d - 2 * y0 * r;
    if (D.is_zero()) throw VerificationFailure("(2x0 + p)(x0 - alpha) - 2 y0 r vanished");
    auto sqrt_D = sqrt(D);
    if (!sqrt_D) continue;
    const Element T = *sqrt_D / r;
    const Element y_over_r = y0 / r;
    for (const Element& t : {T, -T}) {
      const Element rt = r * t;
      push_unique(result.halves, Half{Point(x0 + rt - y_over_r, -y0 - (r + t) * (rt - y_over_r)), -(r + t)});
    }
    if (!result.witness.r) {
      result.witness.r = r;
      result.witness.T = T;
    }
  }
  if (result.halves.empty()) throw NotHalvable("no sign of r makes (2x0 + p)(x0 - alpha) - 2 y0 r a square");
  verify_halves(curve, P, result.halves);
  return result;
}

HalvingResult halve_char2(const Char2Curve& curve, const Point& P) {
  require_affine(P, "halve_char2");
  require_on_curve(curve, P);
  HalvingResult result{{}, HalvingCriterion::char2, {}};
  auto beta = sqrt(curve.a6());
  if (!beta) throw InvalidParams("a6 is not a square: the curve has no rational 2-torsion");
  result.witness.beta = *beta;

  const Element& x0 = P.x();
  const Element& y0 = P.y();
  auto l = solve_artin_schreier(x0 + curve.a2());
  if (!l) return result;
  result.witness.l = *l;

  if (x0.is_zero()) {
    // P = (0, beta); the halves sit over the fourth root of a6.
    const Element fourth_root = char2_sqrt(*beta);
    for (const Element& slope : {*l, *l + 1}) {
      push_unique(result.halves, Half{Point(fourth_root, slope * fourth_root + *beta), slope});
    }
  } else {
    const Element r = char2_sqrt(x0);
    result.witness.r = r;
    for (const Element& slope : {*l, *l + 1}) {
      const Element m = y0 + (slope + 1) * x0;
      const Element x1 = (*beta + m) / r;
      push_unique(result.halves, Half{Point(x1, slope * x1 + m), slope});
    }
  }
  verify_halves(curve, P, result.halves);
  return result;
}

HalvingResult halve(const CubicCurve& curve, const Point& P) {
  require_on_curve(curve, P);
  const bool irreducible = curve.g_irreducible();
  if (P.is_infinity()) {
    HalvingResult result{{Half{P, std::nullopt}}, irreducible ? HalvingCriterion::quadext : HalvingCriterion::split,
                         {}};
    for (Point& w : two_torsion(curve)) result.halves.push_back(Half{std::move(w), std::nullopt});
    return result;
  }
  return irreducible ? halve_quadext(curve, P) : halve_split(curve, P);
}

HalvingResult halve(const Char2Curve& curve, const Point& P) {
  require_on_curve(curve, P);
  if (P.is_infinity()) {
    return HalvingResult{{Half{P, std::nullopt}, Half{order2_point_char2(curve), std::nullopt}},
                         HalvingCriterion::char2,
                         {}};
  }
  return halve_char2(curve, P);
}

OriginHalving halvability_criterion_origin(const Element& y0, const Element& r, const Element& T) {
  if (r.is_zero()) throw InvalidParams("r must be nonzero");
  if (T.is_zero()) throw InvalidParams("T must be nonzero");
  const Element y_over_r = y0 / r;
  CubicCurve curve(-r.square(), QuadraticPoly(T.square() + 2 * y_over_r, y_over_r.square()));
  Point P(y0.field().zero(), y0);
  std::array<Half, 2> halves{
      Half{Point(r * T - y_over_r, -y0 - (r + T) * (r * T - y_over_r)), -(r + T)},
      Half{Point(-r * T - y_over_r, -y0 - (r - T) * (-r * T - y_over_r)), -(r - T)},
  };
  verify_halves(curve, P, std::vector<Half>(halves.begin(), halves.end()));
  return OriginHalving{std::move(curve), std::move(P), std::move(halves)};
}

Point OriginNormalization::map(const Point& P) const {
  if (P.is_infinity()) return P;
  return Point(P.x() / scale.square(), P.y() / scale.pow(3));
}

OriginNormalization normalize_origin(const Element& y0, const Element& r, const Element& T) {
  if (r.is_zero()) throw InvalidParams("r must be nonzero");
  return OriginNormalization{T / r, y0 / r.pow(3), r};
}

Element origin_double_x(const Element& p, const Element& q) {
  if (p.field().characteristic() == 2) throw InvalidParams("origin_double_x needs characteristic != 2");
  if (q.is_zero()) throw InvalidParams("q must be nonzero");
  return (p - q).square() / (4 * q) - 1;
}

RootTriple half_to_roots(const CubicCurve& curve, const Point& Q, const Point& P) {
  require_on_curve(curve, Q);
  require_on_curve(curve, P);
  if (Q.is_infinity() || Q.y().is_zero()) throw TwoTorsionHalf("half_to_roots needs a half with y != 0");
  if (!(doubled(curve, Q) == P)) throw InvalidParams("P is not 2Q");

  const auto roots = curve_roots(curve);
  const Element& x1 = Q.x();
  const Element half_y = Q.y() / 2;
  std::array<QuadExtElement, 3> inv{(x1 - roots[0]).inverse(), (x1 - roots[1]).inverse(),
                                    (x1 - roots[2]).inverse()};
  RootTriple triple{{inv[0], inv[1], inv[2]}, roots};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    triple.r[i] = (inv[j] + inv[k] - inv[i]) * (-half_y);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(triple.r[i] * triple.r[i] == P.x() - roots[i])) {
      throw VerificationFailure("recovered r_" + std::to_string(i + 1) + " does not square to x0 - alpha_i");
    }
  }
  if (!(triple.r[0] * triple.r[1] * triple.r[2] == QuadExtElement::embed(curve.g(), -P.y()))) {
    throw VerificationFailure("recovered roots violate r1 r2 r3 = -y0");
  }
  return triple;
}

}  // namespace versal
