#include "monoid.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace segalbar;

namespace {

template <typename F>
status_code error_of(F&& body) {
  try {
    body();
  } catch (const error& e) {
    return e.code;
  }
  return status_code::ok;
}

template <typename F>
std::string error_text(F&& body) {
  try {
    body();
  } catch (const error& e) {
    return e.what();
  }
  return "";
}

FinMonoid z2() { return validate_monoid({"e", "a"}, 0, {{0, 1}, {1, 0}}); }

FinMonoid lz3() {
  return validate_monoid({"e", "a", "b"}, 0, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
}

}  // namespace

TEST_CASE("validation separates structural and equational failures") {
  CHECK_NOTHROW(z2());
  CHECK(error_of([] { validate_monoid({}, 0, {}); }) == status_code::invalid);
  CHECK(error_of([] { validate_monoid({"e", "e"}, 0, {{0, 0}, {0, 0}}); }) ==
        status_code::invalid);
  CHECK(error_of([] { validate_monoid({"e"}, 1, {{0}}); }) == status_code::invalid);
  CHECK(error_of([] { validate_monoid({"e", "a"}, 0, {{0, 1}}); }) == status_code::invalid);
  CHECK(error_of([] { validate_monoid({"e", "a"}, 0, {{0, 1}, {1, 2}}); }) ==
        status_code::invalid);
  CHECK(error_of([] { validate_monoid({"a,b"}, 0, {{0}}); }) == status_code::parse);

  CHECK(error_text([] { validate_monoid({"e", "a"}, 0, {{0, 0}, {1, 1}}); }) ==
        "monoid: unit law fails at a");
  CHECK(error_text([] {
          validate_monoid({"e", "a", "b"}, 0, {{0, 1, 2}, {1, 2, 0}, {2, 0, 2}});
        }) == "monoid: not associative at (a, a, b)");
}

TEST_CASE("commutativity detection") {
  CHECK(is_commutative(z2()));
  CHECK_FALSE(is_commutative(lz3()));
}

TEST_CASE("enumeration counts match the brute-force totals") {
  CHECK(enumerate_monoids(1).size() == 1);
  CHECK(enumerate_monoids(2).size() == 2);
  CHECK(enumerate_monoids(3).size() == 11);
  CHECK(enumerate_monoids(4).size() == 156);
  CHECK(error_of([] { enumerate_monoids(5); }) == status_code::bound);
  for (const auto& m : enumerate_monoids(3)) {
    CHECK(m.unit == 0);
    CHECK_NOTHROW(validate_monoid(m.elements, m.unit, m.table));
  }
  auto two = enumerate_monoids(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].table == std::vector<std::vector<int>>({{0, 1}, {1, 0}}));
  CHECK(two[1].table == std::vector<std::vector<int>>({{0, 1}, {1, 1}}));
}

TEST_CASE("json serialization round-trips and classifies bad input") {
  auto m = lz3();
  CHECK(monoid_from_json(monoid_to_json(m)) == m);
  CHECK(error_of([] { monoid_from_json("not json"); }) == status_code::parse);
  CHECK(error_of([] { monoid_from_json("{\"elements\":[\"e\"],\"unit\":\"e\"}"); }) ==
        status_code::parse);
  CHECK(error_of([] {
          monoid_from_json(
              "{\"elements\":[\"e\",\"a\"],\"unit\":\"e\","
              "\"table\":[[\"e\",\"a\"],[\"a\",\"x\"]]}");
        }) == status_code::parse);
  CHECK(error_of([] {
          monoid_from_json(
              "{\"elements\":[\"e\",\"a\",\"b\"],\"unit\":\"e\","
              "\"table\":[[\"e\",\"a\",\"b\"],[\"a\",\"b\",\"e\"],[\"b\",\"e\",\"b\"]]}");
        }) == status_code::check);
}

TEST_CASE("tuple labels are flat and unambiguous") {
  CHECK(tuple_label({}) == "()");
  CHECK(tuple_label({"a"}) == "a");
  CHECK(tuple_label({"a", "b"}) == "(a,b)");
  CHECK(parse_tuple_label("()").empty());
  CHECK(parse_tuple_label("a") == std::vector<std::string>({"a"}));
  CHECK(parse_tuple_label("(a,b,c)") == std::vector<std::string>({"a", "b", "c"}));
  CHECK(error_of([] { parse_tuple_label("(a,)"); }) == status_code::parse);
  CHECK(error_of([] { parse_tuple_label("a)b"); }) == status_code::parse);
  CHECK(error_of([] { parse_tuple_label(""); }) == status_code::parse);
  CHECK(tuple_labels(z2(), 2) ==
        std::vector<std::string>({"(e,e)", "(e,a)", "(a,e)", "(a,a)"}));
  CHECK(tuple_labels(z2(), 0) == std::vector<std::string>({"()"}));
}

TEST_CASE("tuple codes use the most significant slot first") {
  CHECK(tuple_decode(5, 3, 2) == std::vector<int>({1, 0, 1}));
  CHECK(tuple_encode({1, 0, 1}, 2) == 5);
  for (long long t = 0; t < 27; ++t) CHECK(tuple_encode(tuple_decode(t, 3, 3), 3) == t);
}

TEST_CASE("powers saturate instead of overflowing") {
  CHECK(int_pow(2, 10) == 1024);
  CHECK(int_pow(5, 0) == 1);
  CHECK(int_pow(1, 1000) == 1);
  CHECK(int_pow(3, 60) == (1LL << 40));
  CHECK(int_pow(2, 200) == (1LL << 40));
}

TEST_CASE("partial maps evaluate to ordered products") {
  auto m = z2();
  CHECK(f_eval(to_partial(mu1()), m) == std::vector<int>({0, 1, 1, 0}));
  CHECK(f_eval(to_partial(eta1()), m) == std::vector<int>({0}));
  CHECK(f_eval(pi1(), m) == std::vector<int>({0, 0}));
  CHECK(f_eval(PartialMap(3, 1, {undef, 0, undef}), m) ==
        std::vector<int>({0, 0, 1, 1, 0, 0, 1, 1}));

  auto n = lz3();
  auto mul = f_eval(to_partial(mu1()), n);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(mul[a * 3 + b] == n.mul(a, b));
}
