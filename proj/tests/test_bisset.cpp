#include "bisset.hpp"

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

FinMonoid z3() {
  return validate_monoid({"e", "a", "b"}, 0, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

FinMonoid lz3() {
  return validate_monoid({"e", "a", "b"}, 0, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
}

}  // namespace

TEST_CASE("double nerve grids count columns of tuples") {
  auto x = double_nerve(z2(), 2, 2);
  CHECK(x.htrunc == 2);
  CHECK(x.vtrunc == 2);
  CHECK(x.level_size(0, 0) == 1);
  CHECK(x.level_size(1, 0) == 1);
  CHECK(x.level_size(0, 2) == 1);
  CHECK(x.level_size(1, 2) == 4);
  CHECK(x.level_size(2, 1) == 4);
  CHECK(x.level_size(2, 2) == 16);
  CHECK(x.levels[0][0][0] == "()");
  CHECK(x.levels[1][1] == std::vector<std::string>({"e", "a"}));
  CHECK(x.levels[2][1] ==
        std::vector<std::string>({"(e,e)", "(e,a)", "(a,e)", "(a,a)"}));
  CHECK_NOTHROW(validate_bisset_shape(x));
  CHECK(bisset_identities_check(x).empty());
}

TEST_CASE("horizontal faces act on columns and vertical faces inside them") {
  auto x = double_nerve(z2(), 2, 2);
  int cell = 4;
  CHECK(x.levels[2][2][cell] == "(e,a,e,e)");
  CHECK(x.hfaces[2][2][0][cell] == 0);
  CHECK(x.levels[1][2][x.hfaces[2][2][2][cell]] == "(e,a)");
  CHECK(x.vfaces[2][2][0][cell] == 2);
  CHECK(x.levels[2][1][x.vfaces[2][2][0][cell]] == "(a,e)");
  CHECK(x.levels[2][1][x.vfaces[2][2][1][cell]] == "(a,e)");
  CHECK(x.levels[2][1][x.vfaces[2][2][2][cell]] == "(e,e)");
}

TEST_CASE("double nerve refuses noncommutative monoids with a witness") {
  auto msg = error_text([] { double_nerve(lz3(), 2, 2); });
  CHECK(error_of([] { double_nerve(lz3(), 2, 2); }) == status_code::check);
  CHECK(msg.find("not commutative") != std::string::npos);
  CHECK(msg.find("a") != std::string::npos);
}

TEST_CASE("rows and columns of a double nerve are nerves") {
  auto x = double_nerve(z3(), 2, 3);
  CHECK(row(x, 1) == nerve(z3(), 2));
  CHECK(column(x, 1) == nerve(z3(), 3));
  auto r0 = row(x, 0);
  for (int n = 0; n <= 2; ++n) CHECK(r0.level_size(n) == 1);
}

TEST_CASE("external products pair a nerve with a constant object") {
  auto x = nerve(z2(), 2);
  auto y = nerve(z3(), 2);
  auto z = external_product(x, y);
  CHECK(z.htrunc == 2);
  CHECK(z.vtrunc == 2);
  CHECK(z.level_size(2, 1) == 4 * 3);
  CHECK(bisset_identities_check(z).empty());
  CHECK(row(z, 0) == product(x, constant_sset(y.levels[0], 2)).sset);
  CHECK(column(z, 1) == product(constant_sset(x.levels[1], 2), y).sset);
}

TEST_CASE("double segal holds on double nerves in both modes") {
  auto x = double_nerve(z2(), 3, 3);
  for (auto mode : {segal_mode::strict, segal_mode::bijective}) {
    auto r = double_segal_check(x, mode);
    CHECK(r.pass);
    REQUIRE(r.parts.size() == 5);
    CHECK(r.parts[0].name == "row m=0");
    CHECK(r.parts[3].name == "row m=3");
    CHECK(r.parts[4].name == "column n=1");
    for (const auto& p : r.parts) CHECK(p.report.pass);
  }
}

TEST_CASE("naturality of the segal maps across vertical generators") {
  auto x = double_nerve(z3(), 2, 2);
  auto nat = p_naturality_check(x);
  CHECK(nat.pass);
  CHECK(nat.witness.empty());

  auto y = x;
  int t0 = y.vfaces[2][2][1][3];
  int alt = -1;
  for (int c = 0; c < y.level_size(2, 1); ++c)
    if (y.hfaces[2][1][1][c] != y.hfaces[2][1][1][t0]) {
      alt = c;
      break;
    }
  REQUIRE(alt >= 0);
  y.vfaces[2][2][1][3] = alt;
  auto broken = p_naturality_check(y);
  CHECK_FALSE(broken.pass);
  CHECK(broken.witness.find("square fails") != std::string::npos);
}

TEST_CASE("eckmann hilton extracts one commutative product twice") {
  auto x = double_nerve(z3(), 2, 2);
  auto eh = eckmann_hilton(x);
  CHECK(eh.ok());
  CHECK(eh.units_equal);
  CHECK(eh.interchange);
  CHECK(eh.products_equal);
  CHECK(eh.commutative);
  CHECK(eh.witness.empty());
  CHECK(eh.horizontal == z3());
  CHECK(eh.vertical == z3());
}

TEST_CASE("eckmann hilton needs depth two in both directions") {
  CHECK(error_of([] { eckmann_hilton(double_nerve(z2(), 1, 2)); }) ==
        status_code::invalid);
  CHECK(error_of([] { eckmann_hilton(double_nerve(z2(), 2, 1)); }) ==
        status_code::invalid);
}

TEST_CASE("a mutated interchange cell breaks eckmann hilton") {
  auto x = double_nerve(z2(), 2, 2);
  int t0 = x.vfaces[2][2][1][3];
  int alt = -1;
  for (int c = 0; c < x.level_size(2, 1); ++c)
    if (x.hfaces[2][1][1][c] != x.hfaces[2][1][1][t0]) {
      alt = c;
      break;
    }
  REQUIRE(alt >= 0);
  x.vfaces[2][2][1][3] = alt;
  auto eh = eckmann_hilton(x);
  CHECK_FALSE(eh.interchange);
  CHECK(eh.witness.find("interchange fails") != std::string::npos);
}

TEST_CASE("bisimplicial json round-trips") {
  auto x = double_nerve(z2(), 2, 2);
  CHECK(bisset_from_json(bisset_to_json(x)) == x);
  CHECK(error_of([] { bisset_from_json("{}"); }) == status_code::parse);
  auto y = x;
  y.vdegens[1][0][0][0] = 1;
  auto text = bisset_to_json(y);
  CHECK(error_of([&] { bisset_from_json(text); }) == status_code::check);
}
