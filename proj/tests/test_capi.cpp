#include <segalbar.h>

#include <string>

#include <catch2/catch_amalgamated.hpp>

namespace {

std::string take(char* text) {
  REQUIRE(text != nullptr);
  std::string s(text);
  segalbar_string_free(text);
  return s;
}

const char* z2_json =
    "{\"elements\":[\"e\",\"a\"],\"unit\":\"e\","
    "\"table\":[[\"e\",\"a\"],[\"a\",\"e\"]]}";

const char* lz3_json =
    "{\"elements\":[\"e\",\"a\",\"b\"],\"unit\":\"e\","
    "\"table\":[[\"e\",\"a\",\"b\"],[\"a\",\"a\",\"a\"],[\"b\",\"b\",\"b\"]]}";

}  // namespace

TEST_CASE("map normalization canonicalizes and reports parse failures") {
  char* out = nullptr;
  REQUIRE(segalbar_map_normalize("total", " 3 -> 2 : [0,0,1] ", &out) == SEGALBAR_OK);
  CHECK(take(out) == "3→2:[0,0,1]");
  CHECK(std::string(segalbar_last_error()).empty());

  CHECK(segalbar_map_normalize("total", "3=>2:[0,0,1]", &out) == SEGALBAR_ERR_PARSE);
  CHECK_FALSE(std::string(segalbar_last_error()).empty());
  CHECK(segalbar_map_normalize("partial", "2->1:[0,0]", &out) == SEGALBAR_OK);
  CHECK(take(out) == "2⇀1:[0,0]");
  CHECK(segalbar_map_normalize("total", "2->1:[_,0]", &out) == SEGALBAR_ERR_PARSE);
  CHECK(segalbar_map_normalize("interval", "2->2:[0,0]", &out) == SEGALBAR_ERR_INVALID);
  CHECK(segalbar_map_normalize("sideways", "2->1:[0,0]", &out) == SEGALBAR_ERR_INVALID);
}

TEST_CASE("hom enumeration writes lines and a count") {
  char* out = nullptr;
  long long count = -1;
  REQUIRE(segalbar_hom("total", 2, 2, &out, &count) == SEGALBAR_OK);
  CHECK(count == 3);
  CHECK(take(out) == "2→2:[0,0]\n2→2:[0,1]\n2→2:[1,1]\n");
  REQUIRE(segalbar_hom("partial", 1, 0, &out, nullptr) == SEGALBAR_OK);
  CHECK(take(out) == "1⇀0:[_]\n");
  CHECK(segalbar_hom("total", 9, 2, &out, &count) == SEGALBAR_ERR_BOUND);
  CHECK(segalbar_hom("total", -1, 2, &out, &count) == SEGALBAR_ERR_INVALID);
}

TEST_CASE("composition and tensor respect kinds") {
  char* out = nullptr;
  REQUIRE(segalbar_compose("total", "3→2:[0,1,1]", "2→1:[0,0]", &out) == SEGALBAR_OK);
  CHECK(take(out) == "3→1:[0,0,0]");
  CHECK(segalbar_compose("total", "2→1:[0,0]", "3→2:[0,1,1]", &out) == SEGALBAR_ERR_SHAPE);
  REQUIRE(segalbar_compose("op", "2→3:[0,2]", "3→2:[0,0,1]", &out) == SEGALBAR_OK);
  CHECK(take(out) == "3→3:[0,0,2]");
  REQUIRE(segalbar_tensor("partial", "1~>0:[_]", "2->1:[0,0]", &out) == SEGALBAR_OK);
  CHECK(take(out) == "3⇀1:[_,0,0]");
  CHECK(segalbar_tensor("op", "2→2:[0,1]", "2→2:[0,1]", &out) == SEGALBAR_ERR_INVALID);
  CHECK(segalbar_tensor("interval", "2→2:[0,1]", "2→2:[0,1]", &out) == SEGALBAR_ERR_INVALID);
}

TEST_CASE("functors translate arrows between the categories") {
  char* out = nullptr;
  REQUIRE(segalbar_functor("j", "2→4:[1,2]", &out) == SEGALBAR_OK);
  CHECK(take(out) == "5→3:[0,0,1,2,2]");
  REQUIRE(segalbar_functor("h", "4→3:[0,1,1,2]", &out) == SEGALBAR_OK);
  CHECK(take(out) == "2⇀1:[0,0]");
  REQUIRE(segalbar_functor("hj", "2→4:[1,2]", &out) == SEGALBAR_OK);
  CHECK(take(out) == "3⇀1:[_,0,_]");
  CHECK(segalbar_functor("k", "2→4:[1,2]", &out) == SEGALBAR_ERR_INVALID);
  CHECK(segalbar_functor("h", "2→2:[0,0]", &out) == SEGALBAR_ERR_INVALID);
}

TEST_CASE("map rendering styles") {
  char* out = nullptr;
  REQUIRE(segalbar_render_map("total", "2→1:[0,0]", "ascii", &out) == SEGALBAR_OK);
  CHECK(take(out) ==
        "2→1:[0,0]\n"
        "0   1\n"
        "*   *\n"
        " \\ /\n"
        "  *\n"
        "  0\n");
  REQUIRE(segalbar_render_map("total", "2→1:[0,0]", "dot", &out) == SEGALBAR_OK);
  CHECK(take(out).find("digraph map {") == 0);
  CHECK(segalbar_render_map("total", "2→1:[0,0]", "svg", &out) == SEGALBAR_ERR_INVALID);
}

TEST_CASE("monoid handles round-trip through json") {
  segalbar_monoid* m = nullptr;
  REQUIRE(segalbar_monoid_read(z2_json, &m) == SEGALBAR_OK);
  char* out = nullptr;
  REQUIRE(segalbar_monoid_write(m, &out) == SEGALBAR_OK);
  auto text = take(out);
  CHECK(text.find("\"unit\": \"e\"") != std::string::npos);
  segalbar_monoid* again = nullptr;
  REQUIRE(segalbar_monoid_read(text.c_str(), &again) == SEGALBAR_OK);
  segalbar_monoid_free(again);
  segalbar_monoid_free(m);

  CHECK(segalbar_monoid_read("nope", &m) == SEGALBAR_ERR_PARSE);
  CHECK(segalbar_monoid_read(
            "{\"elements\":[\"e\",\"a\",\"b\"],\"unit\":\"e\","
            "\"table\":[[\"e\",\"a\",\"b\"],[\"a\",\"b\",\"e\"],[\"b\",\"e\",\"b\"]]}",
            &m) == SEGALBAR_ERR_CHECK);
}

TEST_CASE("nerve construction feeds the segal and identity checks") {
  segalbar_monoid* m = nullptr;
  REQUIRE(segalbar_monoid_read(z2_json, &m) == SEGALBAR_OK);
  segalbar_sset* x = nullptr;
  REQUIRE(segalbar_nerve(m, 3, &x) == SEGALBAR_OK);

  int pass = 0;
  char* report = nullptr;
  REQUIRE(segalbar_segal_check(x, "strict", &pass, &report) == SEGALBAR_OK);
  CHECK(pass == 1);
  CHECK(take(report).find("StrictPass") != std::string::npos);
  CHECK(segalbar_segal_check(x, "loose", &pass, &report) == SEGALBAR_ERR_INVALID);

  REQUIRE(segalbar_identities_check(x, &pass, &report) == SEGALBAR_OK);
  CHECK(pass == 1);
  CHECK(take(report).empty());

  segalbar_monoid* back = nullptr;
  REQUIRE(segalbar_reconstruct(x, &back) == SEGALBAR_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(segalbar_monoid_write(m, &a) == SEGALBAR_OK);
  REQUIRE(segalbar_monoid_write(back, &b) == SEGALBAR_OK);
  CHECK(take(a) == take(b));
  segalbar_monoid_free(back);

  REQUIRE(segalbar_bar_equality(x, m, &pass, &report) == SEGALBAR_OK);
  CHECK(pass == 1);
  segalbar_string_free(report);

  char* rendered = nullptr;
  REQUIRE(segalbar_render_sset(x, "strict", &rendered) == SEGALBAR_OK);
  CHECK(take(rendered).find("StrictPass") != std::string::npos);
  REQUIRE(segalbar_render_sset(x, nullptr, &rendered) == SEGALBAR_OK);
  CHECK(take(rendered).find("level") != std::string::npos);

  char* json = nullptr;
  REQUIRE(segalbar_sset_write(x, &json) == SEGALBAR_OK);
  segalbar_sset* y = nullptr;
  REQUIRE(segalbar_sset_read(take(json).c_str(), &y) == SEGALBAR_OK);
  segalbar_sset_free(y);

  segalbar_sset_free(x);
  segalbar_monoid_free(m);
}

TEST_CASE("bisimplicial pipeline over the C surface") {
  segalbar_monoid* m = nullptr;
  REQUIRE(segalbar_monoid_read(z2_json, &m) == SEGALBAR_OK);
  segalbar_bisset* x = nullptr;
  REQUIRE(segalbar_double_nerve(m, 2, 2, &x) == SEGALBAR_OK);

  int pass = 0;
  char* report = nullptr;
  REQUIRE(segalbar_double_segal_check(x, "strict", &pass, &report) == SEGALBAR_OK);
  CHECK(pass == 1);
  CHECK(take(report).find("naturality squares: pass") != std::string::npos);

  REQUIRE(segalbar_eckmann_hilton(x, &pass, &report) == SEGALBAR_OK);
  CHECK(pass == 1);
  auto text = take(report);
  CHECK(text.find("units equal: yes") != std::string::npos);
  CHECK(text.find("extracted product:") != std::string::npos);

  char* rendered = nullptr;
  REQUIRE(segalbar_render_bisset(x, nullptr, &rendered) == SEGALBAR_OK);
  CHECK(take(rendered).find("grid sizes") != std::string::npos);

  char* json = nullptr;
  REQUIRE(segalbar_bisset_write(x, &json) == SEGALBAR_OK);
  segalbar_bisset* y = nullptr;
  REQUIRE(segalbar_bisset_read(take(json).c_str(), &y) == SEGALBAR_OK);
  segalbar_bisset_free(y);

  segalbar_bisset_free(x);
  segalbar_monoid_free(m);

  segalbar_monoid* nc = nullptr;
  REQUIRE(segalbar_monoid_read(lz3_json, &nc) == SEGALBAR_OK);
  segalbar_bisset* bad = nullptr;
  CHECK(segalbar_double_nerve(nc, 2, 2, &bad) == SEGALBAR_ERR_CHECK);
  CHECK(std::string(segalbar_last_error()).find("not commutative") != std::string::npos);
  segalbar_monoid_free(nc);
}

TEST_CASE("verification suites run through the C surface") {
  char* out = nullptr;
  REQUIRE(segalbar_verify_suites(&out) == SEGALBAR_OK);
  auto names = take(out);
  CHECK(names.find("hom-counts") != std::string::npos);
  CHECK(names.find("double-nerve") != std::string::npos);

  int pass = 0;
  char* report = nullptr;
  REQUIRE(segalbar_verify(2, "hom-counts,monoid-object", &pass, &report) == SEGALBAR_OK);
  CHECK(pass == 1);
  auto text = take(report);
  CHECK(text.find("hom-counts: pass") != std::string::npos);
  CHECK(text.find("monoid-object: pass") != std::string::npos);
  CHECK(segalbar_verify(2, "no-such-suite", &pass, &report) == SEGALBAR_ERR_INVALID);
}

TEST_CASE("null and malformed handle input is rejected not crashed") {
  char* out = nullptr;
  CHECK(segalbar_map_normalize(nullptr, "2→1:[0,0]", &out) == SEGALBAR_ERR_INVALID);
  CHECK(segalbar_map_normalize("total", nullptr, &out) == SEGALBAR_ERR_INVALID);
  CHECK(segalbar_monoid_read(nullptr, nullptr) == SEGALBAR_ERR_INVALID);
  int pass = 0;
  char* report = nullptr;
  CHECK(segalbar_segal_check(nullptr, "strict", &pass, &report) == SEGALBAR_ERR_INVALID);
  CHECK(segalbar_eckmann_hilton(nullptr, &pass, &report) == SEGALBAR_ERR_INVALID);
}
