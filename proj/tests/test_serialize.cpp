#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <functional>

#include "serialize.hpp"

using namespace arq;
using ordered_json = nlohmann::ordered_json;

namespace {

Errc parse_code(const std::string& text) {
  try {
    quiver_from_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;  // "did not throw" marker
}

std::string patched(const std::string& text,
                    const std::function<void(ordered_json&)>& mutate) {
  ordered_json doc = ordered_json::parse(text);
  mutate(doc);
  return doc.dump();
}

}  // namespace

TEST_CASE("quiver JSON round trip is the identity") {
  auto q = cluster_quiver(Family::A, 3, 1);
  std::string text = quiver_to_json(q);
  CHECK(text == quiver_to_json(q));  // byte-deterministic
  CHECK(text.back() == '\n');

  TranslationQuiver back = quiver_from_json(text);
  CHECK(same_presentation(q, back));
  CHECK(quiver_to_json(back) == text);

  REQUIRE(back.covering());
  CHECK(back.covering()->diagram.family() == Family::A);
  CHECK(back.covering()->diagram.rank() == 3);
  CHECK(back.covering()->identification == q.covering()->identification);
  CHECK(back.meta().level == 1);
  CHECK(back.meta().mesh_checked);
}

TEST_CASE("deleted quivers carry their ancestor through JSON") {
  auto q = cluster_quiver(Family::A, 3, 1);
  auto del = delete_rows(q, {1, 3});
  std::string text = quiver_to_json(del);

  TranslationQuiver back = quiver_from_json(text);
  CHECK(same_presentation(del, back));
  CHECK(quiver_to_json(back) == text);
  REQUIRE(back.deletion());
  CHECK(back.deletion()->parent->size() == q.size());
  CHECK(!back.covering());

  // and the oracle still works on the reloaded quiver
  HomMatrix m = hom_matrix_oracle(back);
  for (int x = 0; x < back.size(); ++x)
    for (int y = 0; y < back.size(); ++y)
      CHECK(m.dim[x][y] == (x == y ? 1 : 0));

  ordered_json doc = ordered_json::parse(text);
  CHECK(doc["deletion"]["deleted_in_parent"].size() == 6);
  CHECK(doc["deletion"]["parent"]["vertices"].size() == 9);
}

TEST_CASE("parse failures raise ParseError") {
  CHECK(parse_code("{") == Errc::ParseError);
  CHECK(parse_code("[1, 2]") == Errc::ParseError);
  CHECK(parse_code("{\"format_version\": 2}") == Errc::ParseError);

  std::string good = quiver_to_json(cluster_quiver(Family::A, 2, 1));
  CHECK(parse_code(good) == Errc::Internal);  // sanity: the base document loads

  CHECK(parse_code(patched(good, [](ordered_json& d) {
          d.erase("tau");
        })) == Errc::ParseError);
  CHECK(parse_code(patched(good, [](ordered_json& d) {
          d["vertices"][1]["id"] = 7;
        })) == Errc::ParseError);
  CHECK(parse_code(patched(good, [](ordered_json& d) {
          d["vertices"][0].erase("label");
        })) == Errc::ParseError);
  CHECK(parse_code(patched(good, [](ordered_json& d) {
          d["vertices"][0]["label"] = {1, 2, 3};
        })) == Errc::ParseError);
  CHECK(parse_code(patched(good, [](ordered_json& d) {
          d["arrows"][0] = {0};
        })) == Errc::ParseError);
  CHECK(parse_code(patched(good, [](ordered_json& d) {
          d["meta"]["covering"]["shifts"] = {1};
        })) == Errc::ParseError);
  CHECK(parse_code(patched(good, [](ordered_json& d) {
          d["tau"] = {0, 0, 0, 0, 0};
        })) == Errc::InvalidArgument);  // structural, not a parse problem
}

TEST_CASE("dot output") {
  auto q = cluster_quiver(Family::A, 1, 1);
  std::string dot = quiver_to_dot(q);
  CHECK(dot == quiver_to_dot(q));
  CHECK(dot.substr(0, 16) == "digraph quiver {");
  CHECK(dot.find("rankdir=LR") != std::string::npos);
  CHECK(dot.find("v0 [label=") != std::string::npos);
  CHECK(dot.find("[style=dashed, label=\"tau\"]") != std::string::npos);
  CHECK(dot.substr(dot.size() - 2) == "}\n");
}

TEST_CASE("text output names vertices by residue") {
  auto q = cluster_quiver(Family::A, 2, 1);
  std::string text = quiver_to_text(q);
  CHECK(text.find("family A rank 2 level 1") != std::string::npos);
  CHECK(text.find("vertices: 5") != std::string::npos);
  CHECK(text.find("(0,1)") != std::string::npos);
}

TEST_CASE("verification reports serialize with stable fields") {
  auto r = verify_quotient_A(3, 1, 1, 5, {.check_hom = true});
  std::string text = report_to_json(r);
  CHECK(text == report_to_json(r));

  ordered_json doc = ordered_json::parse(text);
  CHECK(doc["format_version"] == 1);
  CHECK(doc["kind"] == "verification_report");
  CHECK(doc["case"] == "A");
  CHECK(doc["ambient"]["rank"] == 5);
  CHECK(doc["ambient"]["size"] == 20);
  CHECK(doc["target"]["rank"] == 1);
  CHECK(doc["hypotheses"].size() == 3);
  CHECK(doc["deletion"]["rows"] == ordered_json::array({1, 2, 4, 5}));
  CHECK(doc["isomorphic"] == true);
  CHECK(doc["hom_checked"] == true);
  CHECK(doc["ok"] == true);
  CHECK(!doc.contains("exceptional_orbit_lengths"));
  CHECK(doc["assumptions"].contains("assumed"));
  CHECK(doc["assumptions"].contains("checked"));

  std::string human = report_to_text(r);
  CHECK(human.find("result: pass\n") != std::string::npos);
  CHECK(human.find("[ok] u >= v") != std::string::npos);
}

TEST_CASE("the open-question outcome is visible in both formats") {
  auto r = verify_quotient_D(2, 1, 5, 9);
  ordered_json doc = ordered_json::parse(report_to_json(r));
  CHECK(doc["open_question"] == true);
  CHECK(doc["ok"] == false);
  CHECK(doc["isomorphic"] == false);
  CHECK(doc["iso_witness"].is_null());
  CHECK(doc["exceptional_orbit_lengths"]["quotient"] ==
        ordered_json::array({18}));
  CHECK(doc["exceptional_orbit_lengths"]["target"] ==
        ordered_json::array({9, 9}));

  std::string human = report_to_text(r);
  CHECK(human.find("result: fail\n") != std::string::npos);
  CHECK(human.find("quotient {18} target {9 9}") != std::string::npos);
  CHECK(human.find("outside what the construction certifies") !=
        std::string::npos);
}

TEST_CASE("hom matrix serialization") {
  auto q = cluster_quiver(Family::A, 2, 1);
  HomMatrix m = hom_matrix(q);
  ordered_json doc = ordered_json::parse(hom_to_json(m, "covering"));
  CHECK(doc["kind"] == "hom_matrix");
  CHECK(doc["route"] == "covering");
  CHECK(doc["keys"].size() == 5);
  CHECK(doc["dim"].size() == 5);
  CHECK(doc["dim"][0][0] == 1);

  std::string text = hom_to_text(m);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
  CHECK(text.find("# (0,1)") != std::string::npos);
}

TEST_CASE("search serialization") {
  SearchQuery query{Family::A, 5, 1, Family::A, 1, 3};
  auto ws = search_quotients(Family::A, 5, 1, Family::A, 1, 3);
  ordered_json doc = ordered_json::parse(search_to_json(query, ws));
  CHECK(doc["kind"] == "search_result");
  CHECK(doc["source"]["rank"] == 5);
  CHECK(doc["target"]["level"] == 3);
  REQUIRE(doc["witnesses"].size() == 1);
  CHECK(doc["witnesses"][0]["orbits"] == ordered_json::array({0, 1}));
  CHECK(doc["witnesses"][0]["rows"] == ordered_json::array({1, 2, 4, 5}));

  std::string human = search_to_text(query, ws);
  CHECK(human.find("witnesses: 1") != std::string::npos);
  CHECK(human.find("tau-orbits {0 1} = rows {1 2 4 5}") != std::string::npos);

  std::string empty_human =
      search_to_text(SearchQuery{Family::A, 3, 1, Family::A, 1, 1},
                     search_quotients(Family::A, 3, 1, Family::A, 1, 1));
  CHECK(empty_human.find("witnesses: 0") != std::string::npos);
}
