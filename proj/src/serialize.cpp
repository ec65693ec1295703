#include "versal/serialize.hpp"

namespace versal {

namespace {

void require_keys(const Json& j, std::initializer_list<const char*> allowed, std::string_view what) {
  if (!j.is_object()) throw InvalidParams(std::string(what) + " must be a JSON object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) throw InvalidParams("unknown key '" + item.key() + "' in " + std::string(what));
  }
}

const Json& member(const Json& j, const char* key, std::string_view what) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidParams(std::string(what) + " is missing '" + key + "'");
  return *it;
}

}  // namespace

Json to_json(const Element& x) {
  if (x.field().kind() == Field::Kind::prime) return x.bits();
  return x.to_string();
}

Element element_from_json(const Field& field, const Json& j) {
  if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
  if (j.is_string()) return field.parse_element(j.get<std::string>());
  throw InvalidParams("field elements must be integers or strings, got " + j.dump());
}

Json to_json(const Point& P) {
  if (P.is_infinity()) return "infinity";
  return Json{{"x", to_json(P.x())}, {"y", to_json(P.y())}};
}

Point point_from_json(const Field& field, const Json& j) {
  if (j.is_string() && j.get<std::string>() == "infinity") return Point::infinity();
  require_keys(j, {"x", "y"}, "point");
  return Point(element_from_json(field, member(j, "x", "point")), element_from_json(field, member(j, "y", "point")));
}

Json to_json(const CubicCurve& curve) {
  return Json{{"field", curve.field().to_string()},
              {"model", "cubic"},
              {"alpha", to_json(curve.alpha())},
              {"p", to_json(curve.p())},
              {"q", to_json(curve.q())}};
}

Json to_json(const Char2Curve& curve) {
  return Json{{"field", curve.field().to_string()},
              {"model", "char2"},
              {"a2", to_json(curve.a2())},
              {"a6", to_json(curve.a6())}};
}

Json to_json(const FamilyCurve& curve) {
  return std::visit([](const auto& c) { return to_json(c); }, curve);
}

FamilyCurve curve_from_json(const Field& field, const Json& j) {
  require_keys(j, {"field", "model", "alpha", "p", "q", "a2", "a6"}, "curve");
  if (auto it = j.find("field"); it != j.end()) {
    if (!(Field::parse(it->get<std::string>()) == field)) throw FieldMismatch("curve field differs from --field");
  }
  std::string model;
  if (auto it = j.find("model"); it != j.end()) {
    model = it->get<std::string>();
  } else {
    model = j.contains("a6") ? "char2" : "cubic";
  }
  if (model == "cubic") {
    return CubicCurve(element_from_json(field, member(j, "alpha", "curve")),
                      QuadraticPoly(element_from_json(field, member(j, "p", "curve")),
                                    element_from_json(field, member(j, "q", "curve"))));
  }
  if (model == "char2") {
    return Char2Curve(element_from_json(field, member(j, "a2", "curve")),
                      element_from_json(field, member(j, "a6", "curve")));
  }
  throw InvalidParams("curve model must be 'cubic' or 'char2', got '" + model + "'");
}

Json to_json(const TorsionWitness& w) {
  Json j{{"point", to_json(w.point)}, {"order", w.claimed_order}, {"verified", w.verified}};
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

Json to_json(const FamilyInstance& inst) {
  Json params = Json::object();
  for (const auto& [name, value] : inst.params) params[name] = to_json(value);
  Json witnesses = Json::array();
  for (const auto& w : inst.witnesses) witnesses.push_back(to_json(w));
  return Json{{"family", std::string(to_string(inst.tag))},
              {"params", std::move(params)},
              {"curve", to_json(inst.curve)},
              {"witnesses", std::move(witnesses)}};
}

Json to_json(const QuadExtElement& z) { return Json{{"c0", to_json(z.c0())}, {"c1", to_json(z.c1())}}; }

Json to_json(const HalvingResult& result) {
  Json halves = Json::array();
  for (const Half& h : result.halves) {
    halves.push_back(Json{{"point", to_json(h.point)}, {"slope", h.slope ? to_json(*h.slope) : Json(nullptr)}});
  }
  Json witness = Json::object();
  const HalvingWitness& w = result.witness;
  if (w.r) witness["r"] = to_json(*w.r);
  if (w.T) witness["T"] = to_json(*w.T);
  if (w.rho) witness["rho"] = to_json(*w.rho);
  if (w.l) witness["l"] = to_json(*w.l);
  if (w.beta) witness["beta"] = to_json(*w.beta);
  if (!w.triples.empty()) {
    Json triples = Json::array();
    for (const RootTriple& t : w.triples) {
      triples.push_back(Json::array({to_json(t.r[0].c0()), to_json(t.r[1].c0()), to_json(t.r[2].c0())}));
    }
    witness["triples"] = std::move(triples);
  }
  return Json{{"halvable", result.halvable()},
              {"halves", std::move(halves)},
              {"criterion", std::string(to_string(result.criterion))},
              {"witness", std::move(witness)}};
}

Json to_json(const CensusReport& report) {
  return Json{{"field", report.field.to_string()},     {"order", report.torsion_order},
              {"family_count", report.family_count},   {"brute_force_count", report.brute_force_count},
              {"formula_count", report.formula_count}, {"agree", report.agree}};
}

Json to_json(const ExampleReport& report) {
  return Json{{"name", report.name},
              {"field", report.field.to_string()},
              {"curve", report.curve},
              {"group_size", report.group_size},
              {"expected_size", report.expected_size},
              {"generator", to_json(report.generator)},
              {"generator_order", report.generator_order},
              {"cyclic", report.cyclic},
              {"hasse_upper", report.hasse_upper},
              {"ok", report.ok}};
}

}  // namespace versal
