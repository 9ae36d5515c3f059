#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "shellab.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  shellab_string_free(s);
  return out;
}

struct Bundle {
  shellab_bundle* b = nullptr;
  ~Bundle() { shellab_bundle_free(b); }
};

struct Mcd {
  shellab_mcd* m = nullptr;
  ~Mcd() { shellab_mcd_free(m); }
};

}  // namespace

TEST_CASE("fixtures through the C interface") {
  Bundle h;
  char* err = nullptr;
  REQUIRE(shellab_bundle_fixture("fig2", &h.b, &err) == SHELLAB_OK);

  char* report = nullptr;
  CHECK(shellab_validate(h.b, "el", &report) == SHELLAB_OK);
  json v = json::parse(take(report));
  CHECK(v.at("valid") == true);

  Mcd m;
  REQUIRE(shellab_mcd_build(h.b, &m.m, &err) == SHELLAB_OK);
  json mj = json::parse(take(shellab_mcd_json(h.b, m.m)));
  CHECK(mj.at("chains").size() == 4);
  CHECK(mj.at("moves").size() == 4);
  CHECK(mj.at("covers").size() == 3);

  CHECK(shellab_polygon_complete(h.b, m.m, &report) == SHELLAB_FALSE);
  json pc = json::parse(take(report));
  CHECK(pc.at("noncover_moves").size() == 1);
  CHECK(pc.at("noncover_moves").at(0).at("from_labels") == "123");
  CHECK(pc.at("noncover_moves").at(0).at("to_labels") == "543");

  std::string dot = take(shellab_mcd_dot(h.b, m.m));
  CHECK(dot.find("123") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);

  shellab_bundle* bad = nullptr;
  CHECK(shellab_bundle_fixture("nope", &bad, &err) == SHELLAB_ERR_INPUT);
  CHECK(!take(err).empty());
}

TEST_CASE("families and round trips through the C interface") {
  Bundle h;
  char* err = nullptr;
  REQUIRE(shellab_bundle_family(R"({"family":"boolean","n":3})", &h.b, &err) == SHELLAB_OK);
  std::string text = take(shellab_bundle_json(h.b));

  Bundle reparsed;
  REQUIRE(shellab_bundle_parse(text.c_str(), &reparsed.b, &err) == SHELLAB_OK);
  Mcd m;
  REQUIRE(shellab_mcd_build(reparsed.b, &m.m, &err) == SHELLAB_OK);
  json mj = json::parse(take(shellab_mcd_json(reparsed.b, m.m)));
  CHECK(mj.at("chains").size() == 6);
  CHECK(mj.at("covers").size() == 6);

  char* report = nullptr;
  CHECK(shellab_polygon_strong(reparsed.b, &report) == SHELLAB_OK);
  take(report);
  CHECK(shellab_inversion_ranked(reparsed.b, &report) == SHELLAB_OK);
  take(report);
  CHECK(shellab_equivalence_audit(reparsed.b, 42, 7, &report) == SHELLAB_OK);
  json audit = json::parse(take(report));
  CHECK(audit.at("exhaustive") == true);
  CHECK(audit.at("mismatches") == 0);
}

TEST_CASE("verdicts and witnesses through the C interface") {
  Bundle f6;
  char* err = nullptr;
  REQUIRE(shellab_bundle_fixture("fig6_lambda", &f6.b, &err) == SHELLAB_OK);
  char* report = nullptr;
  CHECK(shellab_inversion_ranked(f6.b, &report) == SHELLAB_FALSE);
  json ir = json::parse(take(report));
  CHECK(ir.at("counterexample").at("inversions_to") == 2);

  Bundle f2;
  REQUIRE(shellab_bundle_fixture("fig2", &f2.b, &err) == SHELLAB_OK);
  CHECK(shellab_witnesses(f2.b, &report) == SHELLAB_OK);
  json w = json::parse(take(report));
  CHECK(!w.at("easy_witness").is_null());
  REQUIRE(w.at("characterization_witnesses").size() == 1);
  CHECK(w.at("characterization_witnesses").at(0).at("verified") == true);

  // Malformed input surfaces as an input error.
  shellab_bundle* bad = nullptr;
  CHECK(shellab_bundle_parse("{not json", &bad, &err) == SHELLAB_ERR_INPUT);
  take(err);
}

TEST_CASE("shelling checks through the C interface") {
  Bundle h;
  char* err = nullptr;
  REQUIRE(shellab_bundle_fixture("fig2", &h.b, &err) == SHELLAB_OK);
  // The lexicographic order of the four chains.
  const char* order = R"([
    ["0","z1","x1","1"], ["0","z1","x2","1"], ["0","z2","x2","1"], ["0","z2","x1","1"]
  ])";
  char* report = nullptr;
  CHECK(shellab_shelling_check(h.b, order, &report) == SHELLAB_OK);
  json j = json::parse(take(report));
  CHECK(j.at("linear_extension_of_descent_order") == true);
  CHECK(j.at("shelling_with_descent_restriction") == true);
  CHECK(j.at("facets").size() == 4);

  const char* reversed = R"([
    ["0","z2","x1","1"], ["0","z2","x2","1"], ["0","z1","x2","1"], ["0","z1","x1","1"]
  ])";
  CHECK(shellab_shelling_check(h.b, reversed, &report) == SHELLAB_FALSE);
  take(report);
}
