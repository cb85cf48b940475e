#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <bicyclic/bigint.hpp>
#include <bicyclic/serialize.hpp>

using namespace bicyclic;

TEST_CASE("flag parsing handles signs and whitespace") {
  CHECK(parse_element<CheckedInt64>("2,5") == Element{2, 5});
  CHECK(parse_element<CheckedInt64>("-3, -1") == Element{-3, -1});
  CHECK(parse_element<CheckedInt64>(" +4 , -0 ") == Element{4, 0});
  CHECK_THROWS_AS(parse_element<CheckedInt64>("3"), InvalidArgumentError);
  CHECK_THROWS_AS(parse_element<CheckedInt64>("a,b"), InvalidArgumentError);
  CHECK_THROWS_AS(parse_element<CheckedInt64>("1,2,3"),
                  InvalidArgumentError);
  CHECK_THROWS_AS(parse_element<CheckedInt64>("-,2"), InvalidArgumentError);
}

TEST_CASE("generator lists parse as parenthesised pairs") {
  auto const gens =
      parse_element_list<CheckedInt64>("(-1,-2);(0,-3)");
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == Element{-1, -2});
  CHECK(gens[1] == Element{0, -3});

  auto const spaced = parse_element_list<CheckedInt64>(" (1,2) ; (3,4) ; ");
  REQUIRE(spaced.size() == 2);

  CHECK_THROWS_AS(parse_element_list<CheckedInt64>("1,2;3,4"),
                  InvalidArgumentError);
  CHECK_THROWS_AS(parse_element_list<CheckedInt64>(""),
                  InvalidArgumentError);
}

TEST_CASE("windows and variants parse from lo,hi pairs") {
  CHECK(parse_window<CheckedInt64>("-3,6") == Window(-3, 6));
  CHECK_THROWS_AS(parse_window<CheckedInt64>("4,1"), InvalidArgumentError);
  CHECK(parse_variant<CheckedInt64>("2,-1") == Variant{2, -1});
}

TEST_CASE("element JSON round-trips") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Element const e{static_cast<long long>(rng() % 4001) - 2000,
                    static_cast<long long>(rng() % 4001) - 2000};
    CHECK(element_from_json<CheckedInt64>(to_json(e)) == e);
  }
  auto const j = to_json(Element{2, 3});
  CHECK(j.dump() == "{\"a\":2,\"b\":3}");
}

TEST_CASE("domain value JSON round-trips") {
  Variant const v{2, -1};
  CHECK(variant_from_json<CheckedInt64>(to_json(v)) == v);
  Window const w(-5, 5);
  CHECK(window_from_json<CheckedInt64>(to_json(w)) == w);

  auto const f = canonical_iso(CheckedInt64(2), CheckedInt64(-1));
  CHECK(iso_from_json<CheckedInt64>(to_json(f)) == f);

  auto const cls = classify(Element{-2, -5});
  auto const back = point_class_from_json<CheckedInt64>(to_json(cls));
  CHECK(std::get<RayPosition<CheckedInt64>>(back) ==
        std::get<RayPosition<CheckedInt64>>(cls));
  CHECK(to_json(cls).dump() ==
        "{\"base\":{\"a\":0,\"b\":-3},\"index\":2,\"kind\":\"ray\"}");

  for (auto const& open : basic_nbhds(Element{-1, -4}, 3)) {
    auto const round = basic_open_from_json<CheckedInt64>(to_json(open));
    CHECK(to_json(round) == to_json(open));
  }
}

TEST_CASE("closure results serialize with sorted members") {
  auto const gs = make_gen_set<CheckedInt64>({{0, 1}, {2, -1}});
  auto const result = closure(gs, Window(-3, 6));
  auto const j = to_json(result);
  CHECK(j.at("saturated").is_boolean());
  CHECK(j.at("found").size() == result.found.size());
  auto const first = element_from_json<CheckedInt64>(j.at("found").at(0));
  CHECK(first == *result.found.begin());
}

TEST_CASE("bigint coordinates survive the JSON boundary") {
  Bigint const huge = Bigint("123456789012345678901234567890");
  BasicElement<Bigint> const e{huge, Bigint(-7)};
  auto const j = to_json(e);
  CHECK(j.at("a").is_string());  // too wide for a JSON number
  CHECK(j.at("b").is_number_integer());
  CHECK(element_from_json<Bigint>(j) == e);
  CHECK(parse_element<Bigint>("123456789012345678901234567890,-7") == e);
}

TEST_CASE("error objects carry a type and a message") {
  auto const j = error_json("NotIdempotent", "left operand (1,2)");
  CHECK(j.at("error").at("type") == "NotIdempotent");
  CHECK(j.at("error").at("message") == "left operand (1,2)");
}
