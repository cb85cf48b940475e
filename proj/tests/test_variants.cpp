#include <set>

#include <catch2/catch_amalgamated.hpp>

#include <bicyclic/shift_oracle.hpp>
#include <bicyclic/variants.hpp>

using namespace bicyclic;

TEST_CASE("sandwich product") {
  CHECK(smul(Variant{0, 0}, Element{-2, -5}, Element{-4, -1}) ==
        Element{3, 3});
  CHECK(smul(Variant{2, -1}, Element{0, 0}, Element{1, 1}) == Element{4, 1});
  // idempotent left factor with positive first coordinate of the right
  // factor absorbs the sandwich element
  CHECK(smul(Variant{0, 0}, Element{0, 0}, Element{3, 2}) == Element{3, 2});
}

TEST_CASE("sandwich product is associative and interassociates with mul") {
  Window const w(-3, 3);
  auto const els = w.elements();
  for (auto const& v : {Variant{0, 0}, Variant{2, -1}, Variant{-1, 2}}) {
    for (auto const& x : els) {
      for (auto const& y : els) {
        for (auto const& z : els) {
          REQUIRE(smul(v, smul(v, x, y), z) == smul(v, x, smul(v, y, z)));
          REQUIRE(mul(x, smul(v, y, z)) == smul(v, mul(x, y), z));
          REQUIRE(smul(v, x, mul(y, z)) == mul(smul(v, x, y), z));
        }
      }
    }
  }
}

TEST_CASE("idempotents of a variant") {
  auto const listed = idempotents(Variant{2, -1}, 3);
  REQUIRE(listed.size() == 3);
  CHECK(listed[0].element() == Element{-1, 2});
  CHECK(listed[1].element() == Element{0, 3});
  CHECK(listed[2].element() == Element{1, 4});

  auto const plain = idempotents(Variant{0, 0}, 3);
  CHECK(plain[0].element() == Element{0, 0});
  CHECK(plain[1].element() == Element{1, 1});
  CHECK(plain[2].element() == Element{2, 2});

  // (0,0) *_{1,1} (0,0) = (1,1), so (0,0) is not idempotent there
  CHECK_FALSE(is_idempotent(Variant{1, 1}, Element{0, 0}));
  CHECK(smul(Variant{1, 1}, Element{0, 0}, Element{0, 0}) == Element{1, 1});

  CHECK_THROWS_AS(idempotents(Variant{0, 0}, 0), InvalidArgumentError);
  CHECK_THROWS_AS(idempotent(Variant{0, 0}, CheckedInt64(-1)),
                  InvalidArgumentError);
}

TEST_CASE("exhaustive idempotent scan equals the arithmetic form") {
  Window const w(-5, 5);
  for (auto const& v : {Variant{0, 0}, Variant{2, -1}, Variant{-3, -3}}) {
    for (auto const& x : w.elements()) {
      REQUIRE(is_idempotent(v, x) == (smul(v, x, x) == x));
    }
  }
}

TEST_CASE("omega chain order") {
  Variant const v{2, -1};
  auto const e = idempotents(v, 8);
  CHECK(omega_leq(v, e[5], e[2]));
  CHECK_FALSE(omega_leq(v, e[2], e[5]));
  CHECK(omega_leq(v, e[4], e[4]));

  // e_1 * e_3 = e_3 under the max rule
  Variant const origin{0, 0};
  CHECK(smul(origin, Element{1, 1}, Element{3, 3}) == Element{3, 3});

  auto const other = idempotents(Variant{0, 0}, 2);
  CHECK_THROWS_AS(omega_leq(v, e[0], other[1]), VariantMismatchError);
}

TEST_CASE("natural order specialises to the omega chain") {
  for (auto const& v : {Variant{0, 0}, Variant{-1, 2}}) {
    auto const product = [&](Element const& x, Element const& y) {
      return smul(v, x, y);
    };
    auto const chain = idempotents(v, 10);
    for (auto const& ei : chain) {
      for (auto const& ej : chain) {
        REQUIRE(natural_leq<CheckedInt64>(product, ei.element(),
                                          ej.element()) ==
                omega_leq(v, ei, ej));
      }
    }
  }
}

TEST_CASE("principal ideal floors") {
  CHECK(ideal_floors(Variant{0, 0}, Element{-2, -5}).right_floor ==
        CheckedInt64(3));
  CHECK(ideal_floors(Variant{0, 0}, Element{4, 1}).right_floor ==
        CheckedInt64(4));
  auto const at_e0 = ideal_floors(Variant{2, -1}, Element{-1, 2});
  CHECK(at_e0.right_floor == CheckedInt64(-1));
  CHECK(at_e0.left_floor == CheckedInt64(2));
}

TEST_CASE("floors describe the enumerated one-sided products exactly") {
  Window const w(-3, 3);
  Window const sample = w.widened(8);
  for (auto const& v : {Variant{0, 0}, Variant{2, -1}}) {
    for (auto const& x : w.elements()) {
      auto const floors = ideal_floors(v, x);
      std::set<CheckedInt64> right_firsts;
      std::set<CheckedInt64> left_seconds;
      std::set<Element> right_products;
      std::set<Element> left_products;
      for (auto const& s : sample.elements()) {
        auto const rp = smul(v, x, s);
        auto const lp = smul(v, s, x);
        right_products.insert(rp);
        left_products.insert(lp);
        right_firsts.insert(rp.a);
        left_seconds.insert(lp.b);
      }
      REQUIRE(*right_firsts.begin() == floors.right_floor);
      REQUIRE(*left_seconds.begin() == floors.left_floor);
      // the half-plane above the floor is realised, not just touched
      for (long long dp = 0; dp <= 3; ++dp) {
        for (long long q = -3; q <= 3; ++q) {
          REQUIRE(right_products.count(
                      {floors.right_floor + CheckedInt64(dp), q}) == 1);
          REQUIRE(left_products.count(
                      {q, floors.left_floor + CheckedInt64(dp)}) == 1);
        }
      }
    }
  }
}

TEST_CASE("variant Green relations, closed form") {
  Variant const v{0, 0};
  CHECK(green_v(GreenRel::R, v, Element{2, 3}, Element{2, 7}));
  CHECK_FALSE(green_v(GreenRel::R, v, Element{2, -1}, Element{2, -4}));
  CHECK_FALSE(green_v(GreenRel::D, v, Element{-5, -7}, Element{-3, -9}));
  CHECK(green_v(GreenRel::J, v, Element{-5, -7}, Element{-3, -9}));
  CHECK(green_v(GreenRel::H, v, Element{1, -4}, Element{1, -4}));
  CHECK_FALSE(green_v(GreenRel::H, v, Element{1, -4}, Element{1, -3}));

  // D needs BOTH coordinates linked: (3,-8) and (5,1) share the linked
  // first coordinates but no element joins an L-class with second
  // coordinate -8 to an R-class with second coordinate 1.
  CHECK_FALSE(green_v(GreenRel::D, v, Element{3, -8}, Element{5, 1}));
  CHECK(green_v(GreenRel::D, v, Element{3, 2}, Element{5, 1}));

  // D is an equivalence containing R and L on a window.
  Window const w(-4, 4);
  for (auto const& x : w.elements()) {
    for (auto const& y : w.elements()) {
      if (green_v(GreenRel::R, v, x, y) || green_v(GreenRel::L, v, x, y)) {
        REQUIRE(green_v(GreenRel::D, v, x, y));
      }
      REQUIRE(green_v(GreenRel::D, v, x, y) == green_v(GreenRel::D, v, y, x));
    }
  }
}

TEST_CASE("every variant is simple on the windows we can afford") {
  CHECK(simple_check(Variant{0, 0}, Window(-3, 3)));
  CHECK(simple_check(Variant{2, -1}, Window(-2, 2)));
  CHECK(simple_check(Variant{0, 0}, Window(0, 0)));
  CHECK_THROWS_AS(simple_check(Variant{0, 0}, Window(-4000, 4000)),
                  WindowTooSmallError);
}
