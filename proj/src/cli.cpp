#include "versal/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace versal::cli {

namespace {

struct Options {
  std::string output = "json";
  bool no_verify = false;
  std::string field;
  std::string family;
  std::map<std::string, std::string> params;
  std::string curve;
  std::string point;
  std::string method = "auto";
  unsigned order = 0;
  bool table = false;
};

Json parse_json_arg(const std::string& text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidParams(std::string(what) + " is not valid JSON: " + e.what());
  }
}

const std::string& required_param(const Options& o, const std::string& name) {
  auto it = o.params.find(name);
  if (it == o.params.end()) throw InvalidParams("missing parameter --" + name);
  return it->second;
}

Json cmd_family(const Options& o) {
  const Field field = Field::parse(o.field);
  const FamilyTag tag = parse_family_tag(o.family);
  std::vector<std::pair<std::string, Element>> params;
  for (const auto& [name, literal] : o.params) params.emplace_back(name, field.parse_element(literal));
  return to_json(make_family(tag, params, !o.no_verify));
}

HalvingResult halve_with(const CubicCurve& curve, const Point& P, const std::string& method) {
  if (method == "auto") return halve(curve, P);
  if (method == "split") return halve_split(curve, P);
  if (method == "quadext") return halve_quadext(curve, P);
  if (method == "rT") return halve_rT(curve, P);
  throw WrongCase("method '" + method + "' does not apply to a cubic-model curve");
}

Json cmd_halve(const Options& o) {
  const Field field = Field::parse(o.field);
  const FamilyCurve curve = curve_from_json(field, parse_json_arg(o.curve, "--curve"));
  const Point P = point_from_json(field, parse_json_arg(o.point, "--point"));
  if (const auto* c = std::get_if<CubicCurve>(&curve)) return to_json(halve_with(*c, P, o.method));
  if (o.method != "auto" && o.method != "char2") {
    throw WrongCase("method '" + o.method + "' does not apply to a characteristic-2 curve");
  }
  return to_json(halve(std::get<Char2Curve>(curve), P));
}

Json cmd_order(const Options& o) {
  const Field field = Field::parse(o.field);
  const FamilyCurve curve = curve_from_json(field, parse_json_arg(o.curve, "--curve"));
  const Point P = point_from_json(field, parse_json_arg(o.point, "--point"));
  const auto order = std::visit(
      [&](const auto& c) {
        require_on_curve(c, P);
        return order_of(c, P);
      },
      curve);
  return Json{{"curve", to_json(curve)}, {"point", to_json(P)}, {"order", order ? Json(*order) : Json(nullptr)}};
}

Json cmd_iso(const Options& o) {
  const Field field = Field::parse(o.field);
  const FamilyTag tag = parse_family_tag(o.family);
  auto param = [&](const std::string& name) { return field.parse_element(required_param(o, name)); };
  auto reject_others = [&](std::initializer_list<std::string> allowed) {
    for (const auto& [name, literal] : o.params) {
      if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
        throw InvalidParams("iso " + std::string(to_string(tag)) + " takes no parameter --" + name);
      }
    }
  };
  Json out{{"family", std::string(to_string(tag))}};
  switch (tag) {
    case FamilyTag::e4: {
      reject_others({"a", "b", "c", "d"});
      const auto u = iso_e4(param("a"), param("b"), param("c"), param("d"));
      out["isomorphic"] = u.has_value();
      out["u"] = u ? to_json(*u) : Json(nullptr);
      break;
    }
    case FamilyTag::e8:
      reject_others({"s", "t"});
      out["isomorphic"] = iso_e8(param("s"), param("t"));
      break;
    case FamilyTag::e8char2:
      reject_others({"s", "t"});
      out["isomorphic"] = iso_e8char2(param("s"), param("t"));
      break;
    default:
      throw InvalidParams("iso supports the families e4, e8 and e8char2");
  }
  return out;
}

std::vector<CensusReport> census_reports(const Options& o) {
  const Field field = Field::parse(o.field);
  std::vector<unsigned> orders = o.order ? std::vector<unsigned>{o.order} : std::vector<unsigned>{4, 8};
  std::vector<CensusReport> reports;
  for (unsigned n : orders) reports.push_back(sigma_char2(field, n));
  return reports;
}

std::string census_table(const std::vector<CensusReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "field" << std::right << std::setw(4) << "N" << std::setw(8) << "family"
     << std::setw(13) << "brute force" << std::setw(9) << "formula" << std::setw(7) << "agree" << '\n';
  for (const CensusReport& r : reports) {
    os << std::left << std::setw(14) << r.field.to_string() << std::right << std::setw(4) << r.torsion_order
       << std::setw(8) << r.family_count << std::setw(13) << r.brute_force_count << std::setw(9) << r.formula_count
       << std::setw(7) << (r.agree ? "yes" : "no") << '\n';
  }
  return os.str();
}

void render(std::ostringstream& os, const Json& j, int indent);

bool is_point_object(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("x") && j.contains("y"); }

bool is_inline(const Json& j) { return !j.is_structured() || is_point_object(j) || j.empty(); }

std::string scalar_text(const Json& j) {
  if (j.is_null()) return "none";
  if (j.is_string()) return j.get<std::string>();
  if (is_point_object(j)) return "(" + scalar_text(j["x"]) + ", " + scalar_text(j["y"]) + ")";
  if (j.is_array() && j.empty()) return "[]";
  if (j.is_object() && j.empty()) return "{}";
  return j.dump();
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object() && !is_point_object(j)) {
    for (const auto& item : j.items()) {
      if (is_inline(item.value())) {
        os << pad << item.key() << ": " << scalar_text(item.value()) << '\n';
      } else {
        os << pad << item.key() << ":\n";
        render(os, item.value(), indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (is_inline(v)) {
        os << pad << "- " << scalar_text(v) << '\n';
      } else {
        os << pad << "-\n";
        render(os, v, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

Result run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Elliptic curves with prescribed torsion: families, halving, isomorphism and census", "versal"};
  app.failure_message(CLI::FailureMessage::help);
  app.require_subcommand(1);
  app.add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-verify", o.no_verify, "skip re-checking family witnesses");

  auto field_option = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--field", o.field, "Q, Fp:<p> or F2k:<k>:<modulus hex>")->required();
  };
  auto param_option = [&](CLI::App* sub, const std::string& name) {
    sub->add_option_function<std::string>(
        "--" + name, [&o, name](const std::string& v) { o.params[name] = v; }, "parameter " + name);
  };

  CLI::App* family = app.add_subcommand("family", "build a family member with its torsion witnesses");
  field_option(family);
  family->add_option("--family", o.family, "e4, e6, e8, e10, e12, e4char2 or e8char2")->required();
  for (const char* name : {"a", "b", "t", "T", "u", "gamma"}) param_option(family, name);

  CLI::App* halve_cmd = app.add_subcommand("halve", "all Q with 2Q = P");
  field_option(halve_cmd);
  halve_cmd->add_option("--curve", o.curve, "curve JSON")->required();
  halve_cmd->add_option("--point", o.point, "point JSON")->required();
  halve_cmd->add_option("--method", o.method, "auto, split, quadext, rT or char2")
      ->check(CLI::IsMember({"auto", "split", "quadext", "rT", "char2"}));

  CLI::App* order = app.add_subcommand("order", "exact order of a point");
  field_option(order);
  order->add_option("--curve", o.curve, "curve JSON")->required();
  order->add_option("--point", o.point, "point JSON")->required();

  CLI::App* iso = app.add_subcommand("iso", "isomorphism test between two family members");
  field_option(iso);
  iso->add_option("--family", o.family, "e4 (--a --b --c --d), e8 or e8char2 (--s --t)")->required();
  for (const char* name : {"a", "b", "c", "d", "s", "t"}) param_option(iso, name);

  CLI::App* census = app.add_subcommand("census", "count classes over GF(2^k) with a point of order N");
  field_option(census);
  census->add_option("--order", o.order, "4 or 8; both when omitted")->check(CLI::IsMember({4u, 8u}));
  census->add_flag("--table", o.table, "aligned text table");

  CLI::App* examples = app.add_subcommand("verify-examples", "replay the worked F_3 and F_4 examples");
  examples->fallthrough();

  Result result;
  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? ok : usage;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    Json payload;
    std::string text;
    if (family->parsed()) {
      payload = cmd_family(o);
    } else if (halve_cmd->parsed()) {
      payload = cmd_halve(o);
    } else if (order->parsed()) {
      payload = cmd_order(o);
    } else if (iso->parsed()) {
      payload = cmd_iso(o);
    } else if (census->parsed()) {
      const auto reports = census_reports(o);
      if (reports.size() == 1) {
        payload = to_json(reports.front());
      } else {
        payload = Json::array();
        for (const auto& r : reports) payload.push_back(to_json(r));
      }
      if (o.table) text = census_table(reports);
    } else {
      payload = Json::array({to_json(verify_f3_example()), to_json(verify_f4_example())});
      for (const Json& r : payload) {
        if (!r["ok"].get<bool>()) {
          result.exit_code = verification;
          err << "error: example '" << r["name"].get<std::string>() << "' did not verify\n";
        }
      }
    }
    if (text.empty()) text = o.output == "text" ? render_text(payload) : payload.dump(2) + "\n";
    out << text;
  } catch (const VerificationFailure& e) {
    result.exit_code = verification;
    err << "verification failure: " << e.what() << '\n';
  } catch (const Error& e) {
    result.exit_code = invalid;
    err << "error: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    result.exit_code = invalid;
    err << "error: " << e.what() << '\n';
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace versal::cli
