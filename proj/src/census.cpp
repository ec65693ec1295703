#include "versal/census.hpp"

#include <algorithm>
#include <set>

namespace versal {

namespace {

constexpr unsigned kMaxCensusDegree = 6;
constexpr std::uint64_t kMaxSweepField = 97;

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void require_census_field(const Field& field, unsigned torsion_order) {
  if (field.kind() != Field::Kind::binary) throw InvalidParams("the census needs a binary field GF(2^k)");
  if (field.degree() > kMaxCensusDegree) {
    throw FieldTooLarge("the census enumerates GF(2^k) only for k <= 6, got k = " + std::to_string(field.degree()));
  }
  if (torsion_order != 4 && torsion_order != 8) throw InvalidParams("the census supports N = 4 and N = 8");
}

// (a6, smallest a2 in its class modulo {l^2 + l}).
using ClassKey = std::pair<std::uint64_t, std::uint64_t>;

std::vector<Element> artin_schreier_image(const Field& field) {
  std::set<std::uint64_t> bits;
  for (const Element& l : field.elements()) bits.insert((l.square() + l).bits());
  std::vector<Element> out;
  for (std::uint64_t b : bits) out.push_back(field.element(b));
  return out;
}

ClassKey class_key(const Char2Curve& curve, const std::vector<Element>& image) {
  std::uint64_t rep = curve.a2().bits();
  for (const Element& s : image) rep = std::min(rep, (curve.a2() + s).bits());
  return {curve.a6().bits(), rep};
}

bool has_point_of_order(const Char2Curve& curve, unsigned n) {
  for (const Point& P : full_group(curve)) {
    if (scalar_mul(curve, n, P).is_infinity() && !scalar_mul(curve, n / 2, P).is_infinity()) return true;
  }
  return false;
}

ExampleReport cyclic_report(std::string name, const Field& field, std::string curve_text,
                            const std::vector<Point>& group, std::uint64_t generator_order, Point generator,
                            std::uint64_t expected) {
  ExampleReport r;
  r.name = std::move(name);
  r.field = field;
  r.curve = std::move(curve_text);
  r.group_size = group.size();
  r.generator = std::move(generator);
  r.generator_order = generator_order;
  r.cyclic = generator_order == group.size();
  r.hasse_upper = field.size() + 1 + isqrt(4 * field.size());
  r.expected_size = expected;
  r.ok = r.cyclic && r.group_size == expected && r.hasse_upper < 2 * expected;
  return r;
}

}  // namespace

CensusReport sigma_char2(const Field& field, unsigned torsion_order) {
  require_census_field(field, torsion_order);
  const std::uint64_t q = field.size();
  const auto image = artin_schreier_image(field);

  std::set<ClassKey> brute;
  std::set<ClassKey> seen;
  for (const Element& a6 : field.elements()) {
    if (a6.is_zero()) continue;
    for (const Element& a2 : field.elements()) {
      Char2Curve curve(a2, a6);
      ClassKey key = class_key(curve, image);
      if (!seen.insert(key).second) continue;
      if (has_point_of_order(curve, torsion_order)) brute.insert(key);
    }
  }

  std::set<ClassKey> family;
  for (const Element& x : field.elements()) {
    if (x.is_zero() || (torsion_order == 8 && x.is_one())) continue;
    FamilyInstance inst = torsion_order == 4 ? e4char2_new(x) : e8char2_new(x);
    family.insert(class_key(inst.char2(), image));
  }

  CensusReport report{field, torsion_order, family.size(), brute.size(), torsion_order == 4 ? q - 1 : q / 2 - 1,
                      false};
  report.agree = report.family_count == report.brute_force_count;
  return report;
}

CensusReport sigma_char2(unsigned k, unsigned torsion_order) {
  if (k > kMaxCensusDegree) {
    throw FieldTooLarge("the census enumerates GF(2^k) only for k <= 6, got k = " + std::to_string(k));
  }
  return sigma_char2(Field::binary(k), torsion_order);
}

ExampleReport verify_f3_example() {
  const Field f3 = Field::prime(3);
  FamilyInstance e = e6_new(f3.one());
  const Point generator(f3.from_int(-2), f3.from_int(-1));
  const auto group = full_group(e.cubic());
  const auto order = order_of(e.cubic(), generator).value_or(0);
  return cyclic_report("E6(1) over F_3", f3, e.cubic().to_string(), group, order, generator, 6);
}

ExampleReport verify_f4_example() {
  const Field f4 = Field::binary(2);
  const Element rho = f4.element(2);
  FamilyInstance e4 = e4char2_new(f4.one());
  FamilyInstance e8 = e8char2_new(rho);
  const Point generator(rho, rho);
  const auto group = full_group(e4.char2());
  const auto order = order_of(e4.char2(), generator).value_or(0);
  ExampleReport r = cyclic_report("y^2 + xy = x^3 + 1 over F_4", f4, e4.char2().to_string(), group, order, generator, 8);
  r.ok = r.ok && e4.char2() == e8.char2();
  return r;
}

std::vector<FamilyInstance> family_sweep(const Field& field, unsigned torsion_order, bool verify) {
  if (!field.is_finite() || field.size() > kMaxSweepField) {
    throw FieldTooLarge("family_sweep needs a finite field with at most 97 elements, got " + field.to_string());
  }
  std::vector<FamilyInstance> out;
  const auto elems = field.elements();

  if (field.characteristic() == 2) {
    if (torsion_order != 4 && torsion_order != 8) throw InvalidParams("binary fields carry the N = 4 and N = 8 families");
    for (const Element& x : elems) {
      if (torsion_order == 4 ? e4char2_violation(x).has_value() : e8char2_violation(x).has_value()) continue;
      if (torsion_order == 8 && std::any_of(out.begin(), out.end(), [&](const FamilyInstance& f) {
            return iso_e8char2(f.param("t"), x);
          })) {
        continue;
      }
      out.push_back(torsion_order == 4 ? e4char2_new(x, verify) : e8char2_new(x, verify));
    }
    return out;
  }

  switch (torsion_order) {
    case 4: {
      // E4(a, b) and E4(c, d) are isomorphic iff b / a^2 = d / c^2.
      std::set<std::uint64_t> classes;
      for (const Element& a : elems) {
        for (const Element& b : elems) {
          if (e4_violation(a, b)) continue;
          if (!classes.insert((b / a.square()).bits()).second) continue;
          out.push_back(e4_new(a, b, verify));
        }
      }
      break;
    }
    case 8:
      for (const Element& t : elems) {
        if (e8_violation(t)) continue;
        if (std::any_of(out.begin(), out.end(), [&](const FamilyInstance& f) { return iso_e8(f.param("t"), t); })) {
          continue;
        }
        out.push_back(e8_new(t, verify));
      }
      break;
    case 6:
    case 10:
    case 12: {
      const FamilyTag tag = torsion_order == 6 ? FamilyTag::e6 : torsion_order == 10 ? FamilyTag::e10 : FamilyTag::e12;
      const std::string name = parameter_names(tag).front();
      for (const Element& x : elems) {
        const bool valid = tag == FamilyTag::e6    ? !e6_violation(x)
                           : tag == FamilyTag::e10 ? !e10_violation(x)
                                                   : !e12_violation(x);
        if (valid) out.push_back(make_family(tag, {{name, x}}, verify));
      }
      break;
    }
    default:
      throw InvalidParams("N must be one of 4, 6, 8, 10, 12");
  }
  return out;
}

}  // namespace versal
