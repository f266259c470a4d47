#include "maps.hpp"

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

}  // namespace

TEST_CASE("total maps validate monotonicity and range") {
  CHECK_NOTHROW(TotalMap(3, 2, {0, 0, 1}));
  CHECK(error_of([] { TotalMap(2, 2, {1, 0}); }) == status_code::invalid);
  CHECK(error_of([] { TotalMap(2, 2, {0, 2}); }) == status_code::invalid);
  CHECK(error_of([] { TotalMap(2, 2, {0}); }) == status_code::invalid);
  CHECK(error_of([] { TotalMap(-1, 0, {}); }) == status_code::invalid);
}

TEST_CASE("partial maps allow gaps but stay monotone where defined") {
  CHECK_NOTHROW(PartialMap(3, 2, {undef, 0, undef}));
  CHECK_NOTHROW(PartialMap(3, 2, {1, undef, 1}));
  CHECK(error_of([] { PartialMap(2, 2, {1, 0}); }) == status_code::invalid);
  CHECK(error_of([] { PartialMap(2, 1, {0, -2}); }) == status_code::invalid);
}

TEST_CASE("interval maps pin both endpoints") {
  CHECK_NOTHROW(IntervalMap(2, 2, {0, 1}));
  CHECK_NOTHROW(IntervalMap(4, 3, {0, 1, 1, 2}));
  CHECK(error_of([] { IntervalMap(1, 2, {0}); }) == status_code::invalid);
  CHECK(error_of([] { IntervalMap(2, 2, {0, 0}); }) == status_code::invalid);
  CHECK(error_of([] { IntervalMap(3, 3, {1, 1, 2}); }) == status_code::invalid);
}

TEST_CASE("op arrows wrap a contravariant underlying map") {
  auto a = op_from_underlying(TotalMap(2, 4, {1, 2}));
  CHECK(a.dom == 3);
  CHECK(a.cod == 1);
  CHECK(error_of([] { op_from_underlying(TotalMap(0, 2, {})); }) == status_code::invalid);
}

TEST_CASE("composition matches pointwise application") {
  auto f = TotalMap(3, 2, {0, 1, 1});
  auto g = TotalMap(2, 2, {0, 0});
  CHECK(compose(g, f) == TotalMap(3, 2, {0, 0, 0}));
  CHECK(error_of([&] { compose(f, f); }) == status_code::shape);

  auto p = PartialMap(2, 2, {undef, 0});
  auto q = PartialMap(2, 1, {0, undef});
  CHECK(compose(q, p) == PartialMap(2, 1, {undef, 0}));

  auto af = op_from_underlying(TotalMap(2, 3, {0, 2}));
  auto ag = op_from_underlying(TotalMap(3, 2, {0, 0, 1}));
  auto gf = compose(ag, af);
  CHECK(gf.dom == af.dom);
  CHECK(gf.cod == ag.cod);
  CHECK(gf.underlying == compose(af.underlying, ag.underlying));
}

TEST_CASE("tensor is block concatenation with offset") {
  CHECK(tensor(TotalMap(2, 1, {0, 0}), TotalMap(1, 2, {1})) == TotalMap(3, 3, {0, 0, 2}));
  CHECK(tensor(TotalMap(0, 0, {}), TotalMap(2, 1, {0, 0})) == TotalMap(2, 1, {0, 0}));
  CHECK(tensor(PartialMap(1, 0, {undef}), PartialMap(2, 1, {0, 0})) ==
        PartialMap(3, 1, {undef, 0, 0}));
}

TEST_CASE("the structural arrows have their stated shapes") {
  CHECK(mu1() == TotalMap(2, 1, {0, 0}));
  CHECK(eta1() == TotalMap(0, 1, {}));
  CHECK(pi1() == PartialMap(1, 0, {undef}));
  CHECK(delta(1, 2) == TotalMap(2, 3, {0, 2}));
  CHECK(delta(0, 0) == TotalMap(0, 1, {}));
  CHECK(sigma(0, 2) == TotalMap(2, 1, {0, 0}));
  CHECK(sigma(1, 3) == TotalMap(3, 2, {0, 1, 1}));
}

TEST_CASE("the monoid object equations hold by direct composition") {
  auto mu = mu1();
  auto eta = eta1();
  auto one = identity_total(1);
  CHECK(compose(mu, tensor(mu, one)) == compose(mu, tensor(one, mu)));
  CHECK(compose(mu, tensor(eta, one)) == one);
  CHECK(compose(mu, tensor(one, eta)) == one);
  auto pmu = to_partial(mu);
  auto peta = to_partial(eta);
  auto pone = identity_partial(1);
  CHECK(compose(pmu, tensor(pmu, pone)) == compose(pmu, tensor(pone, pmu)));
  CHECK(compose(pmu, tensor(peta, pone)) == pone);
  CHECK(compose(pmu, tensor(pone, peta)) == pone);
}

TEST_CASE("hom-set sizes match the closed-form counts") {
  CHECK(enumerate_total(2, 2).size() == 3);
  CHECK(enumerate_total(3, 3).size() == 10);
  CHECK(enumerate_total(2, 1).size() == 1);
  CHECK(enumerate_total(1, 0).empty());
  CHECK(enumerate_partial(2, 2).size() == 8);
  CHECK(enumerate_partial(3, 3).size() == 38);
  CHECK(enumerate_partial(1, 0).size() == 1);
  CHECK(enumerate_interval(4, 3).size() == 6);
  CHECK(enumerate_interval(2, 2).size() == 1);
  CHECK(enumerate_op(1, 2).size() == 4);
  CHECK(enumerate_op(0, 0).size() == 1);
}

TEST_CASE("enumeration is lexicographic in the image entries") {
  auto totals = enumerate_total(2, 2);
  REQUIRE(totals.size() == 3);
  CHECK(totals[0].img == std::vector<int>({0, 0}));
  CHECK(totals[1].img == std::vector<int>({0, 1}));
  CHECK(totals[2].img == std::vector<int>({1, 1}));
  auto partials = enumerate_partial(1, 1);
  REQUIRE(partials.size() == 2);
  CHECK(partials[0].img == std::vector<int>({undef}));
  CHECK(partials[1].img == std::vector<int>({0}));
}

TEST_CASE("generator names and arrows") {
  CHECK(gen_name({GenTag::Kind::face, 1, 2}) == "d1^2");
  CHECK(gen_name({GenTag::Kind::degeneracy, 0, 1}) == "s0^1");
  CHECK(face_op(2, 1).underlying == delta(1, 2));
  CHECK(face_op(1, 0).underlying == TotalMap(1, 2, {1}));
  CHECK(degen_op(0, 0).underlying == sigma(0, 2));
  CHECK(degen_op(1, 1).underlying == TotalMap(3, 2, {0, 1, 1}));
  CHECK(error_of([] { face_op(0, 0); }) == status_code::invalid);
}

TEST_CASE("factorization is canonical and recomposes") {
  for (int dom = 0; dom <= 3; ++dom)
    for (int cod = 0; cod <= 3; ++cod)
      for (const auto& a : enumerate_op(dom, cod)) CHECK(recompose(a.dom, factorize(a)) == a);

  auto a = op_from_underlying(TotalMap(3, 3, {0, 0, 2}));
  auto tags = factorize(a);
  REQUIRE(tags.size() == 2);
  CHECK(tags[0].kind == GenTag::Kind::face);
  CHECK(tags[1].kind == GenTag::Kind::degeneracy);
  CHECK(factorize(identity_op(2)).empty());
}

TEST_CASE("map notation round-trips and rejects malformed text") {
  CHECK(format_map(TotalMap(3, 2, {0, 0, 1})) == "3→2:[0,0,1]");
  CHECK(format_map(PartialMap(2, 1, {undef, 0})) == "2⇀1:[_,0]");
  CHECK(parse_map("3→2:[0,0,1]") == AnyMap(TotalMap(3, 2, {0, 0, 1})));
  CHECK(parse_map("3->2:[0,0,1]") == AnyMap(TotalMap(3, 2, {0, 0, 1})));
  CHECK(parse_map("2⇀1:[_,0]") == AnyMap(PartialMap(2, 1, {undef, 0})));
  CHECK(parse_map("2~>1:[_,0]") == AnyMap(PartialMap(2, 1, {undef, 0})));
  CHECK(parse_map(" 2 -> 1 : [0, 0] ") == AnyMap(TotalMap(2, 1, {0, 0})));
  CHECK(parse_map("0→1:[]") == AnyMap(TotalMap(0, 1, {})));

  CHECK(error_of([] { parse_map("2=1:[0,0]"); }) == status_code::parse);
  CHECK(error_of([] { parse_map("2→1:[0,0"); }) == status_code::parse);
  CHECK(error_of([] { parse_map("2→1:[0,]"); }) == status_code::parse);
  CHECK(error_of([] { parse_map("2→1:[_,0]"); }) == status_code::parse);
  CHECK(error_of([] { parse_map("x→1:[]"); }) == status_code::parse);
  CHECK(error_of([] { parse_map("2→1:[1,0]"); }) == status_code::parse);
}

TEST_CASE("kind conversions preserve entries") {
  CHECK(to_partial(TotalMap(2, 1, {0, 0})) == PartialMap(2, 1, {0, 0}));
  CHECK(to_interval(TotalMap(3, 2, {0, 1, 1})) == IntervalMap(3, 2, {0, 1, 1}));
  CHECK(error_of([] { to_interval(TotalMap(2, 2, {0, 0})); }) == status_code::invalid);
  CHECK(to_total(IntervalMap(2, 3, {0, 2})) == TotalMap(2, 3, {0, 2}));
}
