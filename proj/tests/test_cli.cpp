#include <doctest.h>

#include <functional>

#include "oracles.hpp"
#include "versal/cli.hpp"

using namespace versal;
using versal::cli::run;

namespace {

Json json_of(const cli::Result& r) {
  REQUIRE(r.exit_code == 0);
  return Json::parse(r.out);
}

void collect_leaves(const Json& j, std::vector<std::string>& out) {
  if (j.is_structured()) {
    for (const Json& v : j) collect_leaves(v, out);
  } else if (j.is_string()) {
    out.push_back(j.get<std::string>());
  } else if (j.is_null()) {
    out.push_back("none");
  } else {
    out.push_back(j.dump());
  }
}

void check_text_matches_json(std::vector<std::string> args) {
  const Json j = json_of(run(args));
  args.push_back("--output");
  args.push_back("text");
  const cli::Result text = run(args);
  REQUIRE(text.exit_code == 0);
  CHECK(text.out == cli::render_text(j));
  std::vector<std::string> leaves;
  collect_leaves(j, leaves);
  std::size_t pos = 0;
  for (const std::string& leaf : leaves) {
    const auto at = text.out.find(leaf, pos);
    REQUIRE_MESSAGE(at != std::string::npos, leaf);
    pos = at + leaf.size();
  }
}

}  // namespace

TEST_CASE("family e8 over F_7 with t = 3 carries the order-8 witness (5, 2)") {
  const Json j = json_of(run({"family", "--field", "Fp:7", "--family", "e8", "--t", "3"}));
  CHECK(j["family"] == "e8");
  CHECK(j["params"]["t"] == 3);
  bool found = false;
  for (const Json& w : j["witnesses"]) {
    CHECK(w["verified"] == true);
    if (w["point"] == Json{{"x", 5}, {"y", 2}}) found = w["order"] == 8;
  }
  CHECK(found);
}

TEST_CASE("census over F_4 for N = 8 counts 1 = 1") {
  const Json j = json_of(run({"census", "--field", "F2k:2:7", "--order", "8"}));
  CHECK(j["family_count"] == 1);
  CHECK(j["brute_force_count"] == 1);
  CHECK(j["formula_count"] == 1);
  CHECK(j["agree"] == true);
}

TEST_CASE("halving (0, 0) on E4(1, 4) over F_5 gives the two halves found by scan") {
  const Json j = json_of(run({"halve", "--field", "Fp:5", "--curve", R"({"alpha":0,"p":4,"q":1})", "--point",
                              R"({"x":0,"y":0})"}));
  CHECK(j["halvable"] == true);
  REQUIRE(j["halves"].size() == 2);

  const Field f5 = Field::prime(5);
  const auto curve = std::get<CubicCurve>(curve_from_json(f5, Json::parse(R"({"alpha":0,"p":4,"q":1})")));
  oracle::Curve o = oracle::Curve::cubic(curve);
  const Point P(f5.zero(), f5.zero());
  std::vector<Point> got;
  for (const Json& h : j["halves"]) got.push_back(point_from_json(f5, h["point"]));
  std::sort(got.begin(), got.end());
  CHECK(got == o.halves(P, o.points()));
}

TEST_CASE("family output round-trips through the JSON schema") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"family", "--field", "Fp:7", "--family", "e8", "--t", "3"},
           {"family", "--field", "Q", "--family", "e12", "--T", "3/7"},
           {"family", "--field", "Q", "--family", "e4", "--a", "-2/3", "--b", "5"},
           {"family", "--field", "Fp:31", "--family", "e10", "--u", "5"},
           {"family", "--field", "F2k:3:b", "--family", "e8char2", "--t", "0x6"},
           {"family", "--field", "F2k:4:13", "--family", "e4char2", "--gamma", "0x9"}}) {
    CAPTURE(args);
    const Json j = json_of(run(args));
    const Field field = Field::parse(j["curve"]["field"].get<std::string>());
    const FamilyCurve curve = curve_from_json(field, j["curve"]);
    CHECK(to_json(curve) == j["curve"]);

    std::vector<std::pair<std::string, Element>> params;
    for (const auto& item : j["params"].items()) params.emplace_back(item.key(), element_from_json(field, item.value()));
    const FamilyInstance rebuilt = make_family(parse_family_tag(j["family"].get<std::string>()), params);
    CHECK(to_json(rebuilt) == j);

    oracle::Curve o = std::holds_alternative<CubicCurve>(curve) ? oracle::Curve::cubic(std::get<CubicCurve>(curve))
                                                                 : oracle::Curve::char2(std::get<Char2Curve>(curve));
    for (const Json& w : j["witnesses"]) {
      const Point P = point_from_json(field, w["point"]);
      CHECK(to_json(P) == w["point"]);
      CHECK(o.order(P) == w["order"].get<std::uint64_t>());
    }
  }
}

TEST_CASE("element and point encodings") {
  const Field q = Field::rationals();
  CHECK(to_json(q.parse_element("-6/4")) == "-3/2");
  CHECK(element_from_json(q, Json("-3/2")) == q.parse_element("-3/2"));
  CHECK(element_from_json(q, Json(7)) == q.from_int(7));

  const Field f4 = Field::binary(2);
  CHECK(to_json(f4.element(2)) == "0x2");
  CHECK(element_from_json(f4, Json("0x3")) == f4.element(3));

  const Field f7 = Field::prime(7);
  CHECK(to_json(f7.from_int(-1)) == 6);
  CHECK(element_from_json(f7, Json("10")) == f7.from_int(3));
  CHECK_THROWS_AS(element_from_json(f7, Json(1.5)), InvalidParams);

  CHECK(to_json(Point::infinity()) == "infinity");
  CHECK(point_from_json(f7, Json("infinity")).is_infinity());
  CHECK_THROWS_AS(point_from_json(f7, Json::parse(R"({"x":1,"y":2,"z":1})")), InvalidParams);
  CHECK_THROWS_AS(curve_from_json(f7, Json::parse(R"({"alpha":0,"p":1,"q":1,"b":2})")), InvalidParams);
  CHECK_THROWS_AS(curve_from_json(f7, Json::parse(R"({"field":"Fp:5","alpha":0,"p":1,"q":1})")), FieldMismatch);
  CHECK(std::holds_alternative<Char2Curve>(curve_from_json(f4, Json::parse(R"({"a2":"0x1","a6":"0x1"})"))));
}

TEST_CASE("text and json outputs carry the same content") {
  check_text_matches_json({"family", "--field", "Fp:7", "--family", "e8", "--t", "3"});
  check_text_matches_json({"family", "--field", "Q", "--family", "e6", "--t", "2/5"});
  check_text_matches_json({"halve", "--field", "Fp:5", "--curve", R"({"alpha":0,"p":4,"q":1})", "--point",
                           R"({"x":0,"y":0})"});
  check_text_matches_json({"halve", "--field", "F2k:2:7", "--curve", R"({"a2":"0x0","a6":"0x1"})", "--point",
                           R"({"x":"0x2","y":"0x2"})"});
  check_text_matches_json({"census", "--field", "F2k:3:b"});
  check_text_matches_json({"iso", "--field", "Fp:13", "--family", "e4", "--a", "1", "--b", "1", "--c", "2", "--d", "4"});
  check_text_matches_json({"iso", "--field", "Fp:11", "--family", "e8", "--s", "2", "--t", "9"});
  check_text_matches_json({"order", "--field", "Fp:7", "--curve", R"({"alpha":0,"p":0,"q":1})", "--point",
                           R"({"x":5,"y":2})"});
  check_text_matches_json({"verify-examples"});
}

TEST_CASE("order subcommand agrees with the oracle") {
  const Json j = json_of(run({"order", "--field", "Fp:7", "--curve", R"({"alpha":0,"p":0,"q":1})", "--point",
                              R"({"x":5,"y":2})"}));
  CHECK(j["order"] == 8);
  const Json inf = json_of(run({"order", "--field", "Q", "--curve", R"({"alpha":0,"p":4,"q":1})", "--point",
                                R"("infinity")"}));
  CHECK(inf["order"] == 1);
}

TEST_CASE("iso subcommand") {
  CHECK(json_of(run({"iso", "--field", "Fp:13", "--family", "e4", "--a", "1", "--b", "1", "--c", "2", "--d", "4"}))
            ["u"] == 2);
  CHECK(json_of(run({"iso", "--field", "Fp:13", "--family", "e4", "--a", "1", "--b", "1", "--c", "2", "--d", "3"}))
            ["isomorphic"] == false);
  CHECK(json_of(run({"iso", "--field", "Fp:11", "--family", "e8", "--s", "3", "--t", "8"}))["isomorphic"] == true);
  CHECK(json_of(run({"iso", "--field", "F2k:3:b", "--family", "e8char2", "--s", "0x2", "--t", "0x2"}))
            ["isomorphic"] == true);
  CHECK(run({"iso", "--field", "Fp:11", "--family", "e8", "--s", "3"}).exit_code == 2);
  CHECK(run({"iso", "--field", "Fp:11", "--family", "e8", "--s", "3", "--t", "4", "--a", "1"}).exit_code == 2);
  CHECK(run({"iso", "--field", "Fp:11", "--family", "e6", "--s", "3", "--t", "4"}).exit_code == 2);
}

TEST_CASE("verify-examples reports both worked examples") {
  const Json j = json_of(run({"verify-examples"}));
  REQUIRE(j.size() == 2);
  CHECK(j[0]["group_size"] == 6);
  CHECK(j[0]["generator"] == Json{{"x", 1}, {"y", 2}});
  CHECK(j[1]["group_size"] == 8);
  CHECK(j[1]["generator"] == Json{{"x", "0x2"}, {"y", "0x2"}});
  CHECK(j[0]["ok"] == true);
  CHECK(j[1]["ok"] == true);
}

TEST_CASE("census table") {
  const cli::Result r = run({"census", "--field", "F2k:4:13", "--table"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("brute force") != std::string::npos);
  CHECK(r.out.find("F2k:4:13         4      15           15       15    yes") != std::string::npos);
  CHECK(r.out.find("F2k:4:13         8       7            7        7    yes") != std::string::npos);
}

TEST_CASE("--no-verify leaves witnesses unchecked") {
  const Json j = json_of(run({"--no-verify", "family", "--field", "Fp:7", "--family", "e8", "--t", "3"}));
  for (const Json& w : j["witnesses"]) CHECK(w["verified"] == false);
  const Json k = json_of(run({"family", "--field", "Fp:7", "--family", "e8", "--t", "3", "--no-verify"}));
  CHECK(k == j);
}

TEST_CASE("usage errors exit 1 with usage on stderr") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"family", "--family", "e8", "--t", "3"},
           {"family", "--field", "Fp:7", "--family", "e8", "--zz", "3"},
           {"census", "--field", "F2k:2:7", "--order", "6"},
           {"family", "--field", "Fp:7", "--family", "e8", "--t", "3", "--output", "yaml"}}) {
    CAPTURE(args);
    const cli::Result r = run(args);
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("Usage") != std::string::npos);
  }
  const cli::Result help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("census") != std::string::npos);
}

TEST_CASE("invalid parameters exit 2 naming the condition") {
  const cli::Result t1 = run({"family", "--field", "Fp:7", "--family", "e8", "--t", "1"});
  CHECK(t1.exit_code == 2);
  CHECK(t1.err.find("t") != std::string::npos);
  CHECK(t1.out.empty());

  const cli::Result wrong = run({"family", "--field", "Fp:7", "--family", "e8", "--a", "3"});
  CHECK(wrong.exit_code == 2);
  CHECK(wrong.err.find("'a'") != std::string::npos);

  CHECK(run({"family", "--field", "Fp:7", "--family", "e8"}).exit_code == 2);
  CHECK(run({"family", "--field", "Fp:8", "--family", "e8", "--t", "3"}).exit_code == 2);
  CHECK(run({"family", "--field", "Fp:7", "--family", "e9", "--t", "3"}).exit_code == 2);
  CHECK(run({"halve", "--field", "Fp:5", "--curve", "{", "--point", R"({"x":0,"y":0})"}).exit_code == 2);
  CHECK(run({"halve", "--field", "Fp:5", "--curve", R"({"alpha":0,"p":4,"q":1})", "--point", R"({"x":1,"y":0})"})
            .exit_code == 2);
  CHECK(run({"census", "--field", "Fp:7", "--order", "4"}).exit_code == 2);
  CHECK(run({"census", "--field", "F2k:7:83", "--order", "4"}).exit_code == 2);
  CHECK(run({"halve", "--field", "Fp:5", "--curve", R"({"alpha":0,"p":4,"q":1})", "--point", R"({"x":0,"y":0})",
             "--method", "char2"})
            .exit_code == 2);
}
