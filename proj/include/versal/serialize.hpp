#pragma once

#include <json.hpp>

#include "versal/census.hpp"
#include "versal/curve.hpp"
#include "versal/families.hpp"
#include "versal/field.hpp"
#include "versal/halving.hpp"

namespace versal {

using Json = nlohmann::ordered_json;

/// Prime-field elements become JSON integers; rationals ("n/d") and binary elements ("0x..") become strings.
Json to_json(const Element& x);
/// Accepts an integer or any element literal of the field.
Element element_from_json(const Field& field, const Json& j);

/// "infinity" or {"x": ..., "y": ...}.
Json to_json(const Point& P);
Point point_from_json(const Field& field, const Json& j);

/// {"field", "model": "cubic", "alpha", "p", "q"} or {"field", "model": "char2", "a2", "a6"}.
Json to_json(const CubicCurve& curve);
Json to_json(const Char2Curve& curve);
Json to_json(const FamilyCurve& curve);
/// The model is inferred from the keys when "model" is absent; a "field" entry must match `field`.
FamilyCurve curve_from_json(const Field& field, const Json& j);

Json to_json(const TorsionWitness& w);
Json to_json(const FamilyInstance& inst);
Json to_json(const QuadExtElement& z);
Json to_json(const HalvingResult& result);
Json to_json(const CensusReport& report);
Json to_json(const ExampleReport& report);

}  // namespace versal
