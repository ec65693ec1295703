#include "versal/families.hpp"

#include <algorithm>

namespace versal {

namespace {

std::optional<std::string> require_odd_characteristic(const Element& x) {
  if (x.field().characteristic() == 2) return "the field must have characteristic != 2";
  return std::nullopt;
}

std::optional<std::string> require_binary(const Element& x) {
  if (x.field().kind() != Field::Kind::binary) return "the field must be a binary field GF(2^k)";
  return std::nullopt;
}

void throw_if(const std::optional<std::string>& violation) {
  if (violation) throw InvalidParams(*violation);
}

class WitnessList {
 public:
  WitnessList(const FamilyCurve& curve, bool verify) : curve_(curve), verify_(verify) {}

  void add(Point P, std::uint64_t order, std::string note) {
    TorsionWitness w{std::move(P), order, false, std::move(note)};
    if (verify_) {
      w = std::visit([&](const auto& c) { return certify(c, w.point, order, w.note); }, curve_);
      if (!w.verified) {
        throw VerificationFailure("witness " + w.point.to_string() + " does not have order " + std::to_string(order));
      }
    }
    list_.push_back(std::move(w));
  }

  const Point& point(std::size_t i) const { return list_.at(i).point; }
  std::vector<TorsionWitness> take() { return std::move(list_); }

 private:
  const FamilyCurve& curve_;
  bool verify_;
  std::vector<TorsionWitness> list_;
};

Point sum(const FamilyCurve& curve, const Point& P, const Point& Q) {
  return std::visit([&](const auto& c) { return add(c, P, Q); }, curve);
}

}  // namespace

std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::e4:
      return "e4";
    case FamilyTag::e6:
      return "e6";
    case FamilyTag::e8:
      return "e8";
    case FamilyTag::e10:
      return "e10";
    case FamilyTag::e12:
      return "e12";
    case FamilyTag::e4char2:
      return "e4char2";
    case FamilyTag::e8char2:
      return "e8char2";
  }
  return "unknown";
}

FamilyTag parse_family_tag(std::string_view name) {
  for (FamilyTag tag : {FamilyTag::e4, FamilyTag::e6, FamilyTag::e8, FamilyTag::e10, FamilyTag::e12,
                        FamilyTag::e4char2, FamilyTag::e8char2}) {
    if (to_string(tag) == name) return tag;
  }
  throw InvalidParams("unknown family '" + std::string(name) + "'");
}

unsigned torsion_order(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::e4:
    case FamilyTag::e4char2:
      return 4;
    case FamilyTag::e6:
      return 6;
    case FamilyTag::e8:
    case FamilyTag::e8char2:
      return 8;
    case FamilyTag::e10:
      return 10;
    case FamilyTag::e12:
      return 12;
  }
  return 0;
}

std::vector<std::string> parameter_names(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::e4:
      return {"a", "b"};
    case FamilyTag::e6:
    case FamilyTag::e8:
    case FamilyTag::e8char2:
      return {"t"};
    case FamilyTag::e10:
      return {"u"};
    case FamilyTag::e12:
      return {"T"};
    case FamilyTag::e4char2:
      return {"gamma"};
  }
  return {};
}

const Element& FamilyInstance::param(std::string_view name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw InvalidParams("family has no parameter '" + std::string(name) + "'");
}

bool FamilyInstance::all_verified() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const TorsionWitness& w) { return w.verified; });
}

// ---------------------------------------------------------------------------
// Validity

std::optional<std::string> e4_violation(const Element& a, const Element& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("a and b from different fields");
  if (auto v = require_odd_characteristic(a)) return v;
  if (a.is_zero()) return "a must be nonzero";
  if (b.is_zero()) return "b must be nonzero";
  if (is_square(a * a + 4 * b)) return "a^2 + 4b must not be a square";
  return std::nullopt;
}

std::optional<std::string> e8_violation(const Element& t) {
  if (auto v = require_odd_characteristic(t)) return v;
  if (t.is_zero()) return "t must be nonzero";
  if (t.square().is_one()) return "t must not be 1 or -1";
  if (is_square(2 * t.square() - 1)) return "2t^2 - 1 must not be a square";
  return std::nullopt;
}

std::optional<std::string> e6_violation(const Element& t) {
  if (auto v = require_odd_characteristic(t)) return v;
  if (t.is_zero()) return "t must be nonzero";
  if ((t + 4).is_zero()) return "t must not be -4";
  if ((2 * t - 1).is_zero()) return "t must not be 1/2";
  return std::nullopt;
}

std::optional<std::string> e12_violation(const Element& T) {
  if (auto v = require_odd_characteristic(T)) return v;
  const Element T2 = T.square();
  if (T.is_zero()) return "T must be nonzero";
  if (T2.is_one()) return "T must not be 1 or -1";
  if ((T2 + 1).is_zero()) return "T^2 + 1 must be nonzero";
  if ((3 * T2 + 1).is_zero()) return "3T^2 + 1 must be nonzero";
  if ((3 * T2 - 1).is_zero()) return "3T^2 - 1 must be nonzero";
  if (is_square((T2 + 1) * (3 * T2 - 1))) return "(T^2 + 1)(3T^2 - 1) must not be a square";
  return std::nullopt;
}

std::optional<std::string> e10_violation(const Element& u) {
  if (auto v = require_odd_characteristic(u)) return v;
  if (u.is_zero()) return "u must be nonzero";
  if (u.square().is_one()) return "u must not be 1 or -1";
  if ((u.square() + u - 1).is_zero()) return "u^2 + u - 1 must be nonzero";
  if ((u.square() - 4 * u - 1).is_zero()) return "u^2 - 4u - 1 must be nonzero";
  if (is_square(u * (u.square() + u - 1))) return "u(u^2 + u - 1) must not be a square";
  return std::nullopt;
}

std::optional<std::string> e4char2_violation(const Element& gamma) {
  if (auto v = require_binary(gamma)) return v;
  if (gamma.is_zero()) return "gamma must be nonzero";
  return std::nullopt;
}

std::optional<std::string> e8char2_violation(const Element& t) {
  if (auto v = require_binary(t)) return v;
  if (t.is_zero()) return "t must not be 0";
  if (t.is_one()) return "t must not be 1";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constructors

FamilyInstance e4_new(const Element& a, const Element& b, bool verify) {
  throw_if(e4_violation(a, b));
  const Field& f = a.field();
  FamilyCurve curve = CubicCurve(f.zero(), QuadraticPoly(a * a + 2 * b, b * b));
  WitnessList w(curve, verify);
  w.add(Point(f.zero(), f.zero()), 2, "(0, 0)");
  w.add(Point(-b, a * b), 4, "(-b, ab)");
  w.add(Point(-b, -a * b), 4, "(-b, -ab)");
  return FamilyInstance{FamilyTag::e4, {{"a", a}, {"b", b}}, std::move(curve), w.take()};
}

FamilyInstance e8_new(const Element& t, bool verify) {
  throw_if(e8_violation(t));
  const Field& f = t.field();
  const Element t2 = t.square();
  const Element p = 2 * (t2.square() + 2 * t2 - 1) / (t2 - 1).square();
  FamilyCurve curve = CubicCurve(f.zero(), QuadraticPoly(p, f.one()));
  WitnessList w(curve, verify);
  w.add(Point(f.zero(), f.zero()), 2, "(0, 0)");
  const Element y4 = 2 * t2 / (1 - t2);
  w.add(Point(f.one(), y4), 4, "(1, 2t^2/(1 - t^2))");
  w.add(Point(f.one(), -y4), 4, "(1, -2t^2/(1 - t^2))");
  const Element xa = (1 + t) / (1 - t), ya = 2 * t / (1 - t).square();
  const Element xb = (1 - t) / (1 + t), yb = 2 * t / (1 + t).square();
  w.add(Point(xa, -ya), 8, "((1 + t)/(1 - t), -2t/(1 - t)^2)");
  w.add(Point(xa, ya), 8, "((1 + t)/(1 - t), 2t/(1 - t)^2)");
  w.add(Point(xb, yb), 8, "((1 - t)/(1 + t), 2t/(1 + t)^2)");
  w.add(Point(xb, -yb), 8, "((1 - t)/(1 + t), -2t/(1 + t)^2)");
  return FamilyInstance{FamilyTag::e8, {{"t", t}}, std::move(curve), w.take()};
}

FamilyInstance e6_new(const Element& t, bool verify) {
  throw_if(e6_violation(t));
  const Field& f = t.field();
  FamilyCurve curve = CubicCurve(f.from_int(-1), QuadraticPoly(t.square() + 2 * t, t.square()));
  WitnessList w(curve, verify);
  w.add(Point(f.from_int(-1), f.zero()), 2, "(-1, 0)");
  w.add(Point(f.zero(), t), 3, "(0, t)");
  w.add(Point(f.zero(), -t), 3, "(0, -t)");
  const Element y6 = t - 2 * t.square();
  w.add(Point(-2 * t, y6), 6, "(-2t, t - 2t^2)");
  w.add(Point(-2 * t, -y6), 6, "(-2t, 2t^2 - t)");
  return FamilyInstance{FamilyTag::e6, {{"t", t}}, std::move(curve), w.take()};
}

bool e6_exactly_one_2torsion(const Element& t) {
  throw_if(e6_violation(t));
  return !is_square(t.square() + 4 * t);
}

FamilyInstance e12_new(const Element& T, bool verify) {
  throw_if(e12_violation(T));
  const Field& f = T.field();
  const Element T2 = T.square();
  const Element den = T2 - 1;
  const Element p = 8 * T2 * (T2 + 1) * (T2.square() + 4 * T2 - 1) / den.pow(4);
  const Element q = 16 * T2.square() * (T2 + 1).square() / den.pow(4);
  FamilyCurve curve = CubicCurve(f.from_int(-1), QuadraticPoly(p, q));
  WitnessList w(curve, verify);
  w.add(Point(f.from_int(-1), f.zero()), 2, "(-1, 0)");
  const Element y3 = 4 * T2 * (T2 + 1) / den.square();
  w.add(Point(f.zero(), y3), 3, "(0, 4T^2(T^2 + 1)/(T^2 - 1)^2)");
  w.add(Point(f.zero(), -y3), 3, "(0, -4T^2(T^2 + 1)/(T^2 - 1)^2)");
  // The halves of (-1, 0): x = -1 + Norm(rho) with Norm(rho) = -(3T^2 + 1)/(T^2 - 1).
  const Element x4 = -4 * T2 / den;
  const Element y4 = 8 * T2 * T * (3 * T2 + 1) / den.pow(3);
  w.add(Point(x4, -y4), 4, "(-4T^2/(T^2 - 1), -8T^3(3T^2 + 1)/(T^2 - 1)^3)");
  w.add(Point(x4, y4), 4, "(-4T^2/(T^2 - 1), 8T^3(3T^2 + 1)/(T^2 - 1)^3)");
  w.add(sum(curve, w.point(1), w.point(3)), 12, "sum of the first order-3 and order-4 witnesses");
  return FamilyInstance{FamilyTag::e12, {{"T", T}}, std::move(curve), w.take()};
}

FamilyInstance e10_new(const Element& u, bool verify) {
  throw_if(e10_violation(u));
  const Field& f = u.field();
  const Element u2 = u.square();
  const Element den = (u - 1).square() * (u + 1).pow(4);
  const Element p = 8 * u2 * (u2 * u + u2 - u + 1) / den;
  const Element q = 16 * u2.square() / den;
  FamilyCurve curve = CubicCurve(f.from_int(-1), QuadraticPoly(p, q));
  WitnessList w(curve, verify);
  w.add(Point(f.from_int(-1), f.zero()), 2, "(-1, 0)");
  w.add(Point(f.zero(), 4 * u2 / ((u - 1) * (u + 1).square())), 5, "(0, 4u^2/((u - 1)(u + 1)^2))");
  w.add(sum(curve, w.point(1), w.point(0)), 10, "sum of the order-5 and order-2 witnesses");
  return FamilyInstance{FamilyTag::e10, {{"u", u}}, std::move(curve), w.take()};
}

FamilyInstance e4char2_new(const Element& gamma, bool verify) {
  throw_if(e4char2_violation(gamma));
  const Field& f = gamma.field();
  FamilyCurve curve = Char2Curve(f.zero(), gamma.pow(4));
  WitnessList w(curve, verify);
  w.add(Point(f.zero(), gamma.square()), 2, "(0, gamma^2)");
  w.add(Point(gamma, gamma.square()), 4, "(gamma, gamma^2)");
  return FamilyInstance{FamilyTag::e4char2, {{"gamma", gamma}}, std::move(curve), w.take()};
}

FamilyInstance e8char2_new(const Element& t, bool verify) {
  throw_if(e8char2_violation(t));
  const Field& f = t.field();
  const Element r = t / (t.square() + 1);
  const Element gamma = r.square();
  FamilyCurve curve = Char2Curve(f.zero(), r.pow(8));
  WitnessList w(curve, verify);
  w.add(Point(f.zero(), gamma.square()), 2, "(0, gamma^2)");
  w.add(Point(gamma, gamma.square()), 4, "(gamma, gamma^2) with gamma = (t/(t^2 + 1))^2");
  const Element t1 = t + 1;
  w.add(Point(t.pow(3) / t1.pow(4), (t.pow(6) + t.pow(5) + t.pow(3)) / t1.pow(8)), 8,
        "(t^3/(t + 1)^4, (t^6 + t^5 + t^3)/(t + 1)^8)");
  return FamilyInstance{FamilyTag::e8char2, {{"t", t}}, std::move(curve), w.take()};
}

FamilyInstance make_family(FamilyTag tag, const std::vector<std::pair<std::string, Element>>& params, bool verify) {
  const auto names = parameter_names(tag);
  for (const auto& [key, value] : params) {
    if (std::find(names.begin(), names.end(), key) == names.end()) {
      throw InvalidParams("unknown parameter '" + key + "' for family " + std::string(to_string(tag)));
    }
  }
  auto get = [&](const std::string& name) -> const Element& {
    for (const auto& [key, value] : params) {
      if (key == name) return value;
    }
    throw InvalidParams("missing parameter '" + name + "' for family " + std::string(to_string(tag)));
  };
  switch (tag) {
    case FamilyTag::e4:
      return e4_new(get("a"), get("b"), verify);
    case FamilyTag::e6:
      return e6_new(get("t"), verify);
    case FamilyTag::e8:
      return e8_new(get("t"), verify);
    case FamilyTag::e10:
      return e10_new(get("u"), verify);
    case FamilyTag::e12:
      return e12_new(get("T"), verify);
    case FamilyTag::e4char2:
      return e4char2_new(get("gamma"), verify);
    case FamilyTag::e8char2:
      return e8char2_new(get("t"), verify);
  }
  throw InvalidParams("unknown family");
}

// ---------------------------------------------------------------------------
// Normalization and isomorphisms

Point E4Normalization::map(const Point& P) const {
  if (P.is_infinity()) return P;
  return Point(P.x() / a.square(), P.y() / a.pow(3));
}

E4Normalization e4_normalize(const Element& a, const Element& b) {
  throw_if(e4_violation(a, b));
  return E4Normalization{a, b / a.square()};
}

std::optional<Element> iso_e4(const Element& a, const Element& b, const Element& c, const Element& d) {
  throw_if(e4_violation(a, b));
  if (!(c.field() == a.field()) || !(d.field() == a.field())) throw FieldMismatch("parameters from different fields");
  if (c.is_zero() || d.is_zero()) throw InvalidParams("c and d must be nonzero");
  if ((c * c + 4 * d).is_zero()) throw InvalidParams("c^2 + 4d must be nonzero");
  if (!(b * c * c == d * a * a)) return std::nullopt;
  return c / a;
}

bool iso_e8(const Element& s, const Element& t) {
  throw_if(e8_violation(s));
  throw_if(e8_violation(t));
  if (!(s.field() == t.field())) throw FieldMismatch("parameters from different fields");
  if (s == t || s == -t) return true;
  const Element s2 = s.square(), t2 = t.square();
  if (s2 + t2 == 2 * s2 * t2) return true;
  // With a square root of -1 the twist by it adds A(s) = -A(t).
  if (is_square(s.field().from_int(-1))) {
    return s2.square() * t2.square() + 2 * s2 + 2 * t2 == 4 * s2 * t2 + 1;
  }
  return false;
}

bool iso_e8char2(const Element& s, const Element& t) {
  throw_if(e8char2_violation(s));
  throw_if(e8char2_violation(t));
  if (!(s.field() == t.field())) throw FieldMismatch("parameters from different fields");
  return s == t || s * t == s.field().one();
}

std::optional<Element> j_fourth_power_criterion(const Element& c) {
  if (c.is_zero()) throw InvalidParams("j must be nonzero");
  auto root = sqrt(c);
  if (!root) return std::nullopt;
  for (const Element& s : {*root, -*root}) {
    if (auto delta = sqrt(s)) return delta->inverse();
  }
  return std::nullopt;
}

std::pair<Element, Element> kubert_to_e4(const Element& t) {
  throw_if(require_odd_characteristic(t));
  return {t.field().one() / 2, t};
}

Element kubert_to_e8(const Element& d) {
  throw_if(require_odd_characteristic(d));
  if (d.is_zero()) throw InvalidParams("d must be nonzero");
  return 2 * d - 1;
}

Element kubert_to_e6(const Element& c) {
  throw_if(require_odd_characteristic(c));
  if (c.is_zero()) throw InvalidParams("c must be nonzero");
  return (c + 1) / (2 * c);
}

}  // namespace versal
