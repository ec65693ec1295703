#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "versal/curve.hpp"
#include "versal/field.hpp"

namespace versal {

enum class FamilyTag { e4, e6, e8, e10, e12, e4char2, e8char2 };

std::string_view to_string(FamilyTag tag);
/// Accepts the names produced by to_string.
FamilyTag parse_family_tag(std::string_view name);
/// The torsion order N the family is built for.
unsigned torsion_order(FamilyTag tag);
/// Parameter names in order, e.g. {"a", "b"} for e4.
std::vector<std::string> parameter_names(FamilyTag tag);

using FamilyCurve = std::variant<CubicCurve, Char2Curve>;

struct FamilyInstance {
  FamilyTag tag;
  std::vector<std::pair<std::string, Element>> params;
  FamilyCurve curve;
  std::vector<TorsionWitness> witnesses;

  const Element& param(std::string_view name) const;
  const CubicCurve& cubic() const { return std::get<CubicCurve>(curve); }
  const Char2Curve& char2() const { return std::get<Char2Curve>(curve); }
  bool is_char2() const noexcept { return std::holds_alternative<Char2Curve>(curve); }
  bool all_verified() const;
};

/// Empty when the parameters are valid, otherwise the violated condition.
std::optional<std::string> e4_violation(const Element& a, const Element& b);
std::optional<std::string> e8_violation(const Element& t);
std::optional<std::string> e6_violation(const Element& t);
std::optional<std::string> e12_violation(const Element& T);
std::optional<std::string> e10_violation(const Element& u);
std::optional<std::string> e4char2_violation(const Element& gamma);
std::optional<std::string> e8char2_violation(const Element& t);

// Constructors throw InvalidParams naming the violated condition. With
// verify set, every witness is checked by the group law and a failure throws
// VerificationFailure; without it the witnesses are reported unchecked.

/// y^2 = x(x^2 + (a^2 + 2b)x + b^2) with a point of order 4.
FamilyInstance e4_new(const Element& a, const Element& b, bool verify = true);
/// y^2 = x(x^2 + 2(t^4 + 2t^2 - 1)/(t^2 - 1)^2 x + 1) with a point of order 8.
FamilyInstance e8_new(const Element& t, bool verify = true);
/// y^2 = (x + 1)(x^2 + (t^2 + 2t)x + t^2) with a point of order 6.
FamilyInstance e6_new(const Element& t, bool verify = true);
/// Whether t^2 + 4t is a non-square, i.e. E6(t) has a single rational point of order 2.
bool e6_exactly_one_2torsion(const Element& t);
FamilyInstance e12_new(const Element& T, bool verify = true);
FamilyInstance e10_new(const Element& u, bool verify = true);
/// y^2 + xy = x^3 + gamma^4.
FamilyInstance e4char2_new(const Element& gamma, bool verify = true);
/// y^2 + xy = x^3 + (t / (t^2 + 1))^8.
FamilyInstance e8char2_new(const Element& t, bool verify = true);

/// Builds any family from named parameters; unknown or missing names throw InvalidParams.
FamilyInstance make_family(FamilyTag tag, const std::vector<std::pair<std::string, Element>>& params,
                           bool verify = true);

/// (x, y) -> (x / a^2, y / a^3) from E4(a, b) onto E4(1, b / a^2).
struct E4Normalization {
  Element a;
  Element b;
  Point map(const Point& P) const;
};

E4Normalization e4_normalize(const Element& a, const Element& b);

/// u with E4(a, b) -> E4(c, d), (x, y) -> (u^2 x, u^3 y), or empty. Uses b c^2 = d a^2 and returns c / a.
std::optional<Element> iso_e4(const Element& a, const Element& b, const Element& c, const Element& d);
/// Whether E8(s) and E8(t) are isomorphic over the base field.
bool iso_e8(const Element& s, const Element& t);
/// E_{8,s} and E_{8,t} coincide iff s = t or s = 1/t.
bool iso_e8char2(const Element& s, const Element& t);
/// gamma = (1/c)^(1/4) when c is a nonzero fourth power, giving E_{4,gamma} with j = c.
std::optional<Element> j_fourth_power_criterion(const Element& c);

/// Kubert y^2 + xy - ty = x^3 - tx^2 is isomorphic to E4(1/2, t).
std::pair<Element, Element> kubert_to_e4(const Element& t);
/// Kubert order-8 curve with parameter d is isomorphic to E8(2d - 1).
Element kubert_to_e8(const Element& d);
/// Kubert order-6 curve with parameter c is isomorphic to E6((c + 1) / 2c).
Element kubert_to_e6(const Element& c);

}  // namespace versal
