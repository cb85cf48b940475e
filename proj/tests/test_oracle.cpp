#include <catch2/catch_amalgamated.hpp>

#include <bicyclic/shift_oracle.hpp>
#include <bicyclic/variants.hpp>

using namespace bicyclic;
using oracle::BruteGreenTable;

TEST_CASE("partial shifts round-trip with elements") {
  CHECK(oracle::to_shift(Element{2, 5}) ==
        oracle::PartialShift<CheckedInt64>{2, 3});
  CHECK(oracle::to_shift(Element{0, 0}) ==
        oracle::PartialShift<CheckedInt64>{0, 0});
  CHECK(oracle::to_shift(Element{-4, -7}) ==
        oracle::PartialShift<CheckedInt64>{-4, -3});

  Window const w(-6, 6);
  for (auto const& x : w.elements()) {
    CHECK(oracle::from_shift(oracle::to_shift(x)) == x);
  }
}

TEST_CASE("composition of shifts reproduces the product") {
  // (2,5),(3,1): domain {t >= 2}, offset 3 + (-2) = 1
  CHECK(oracle::oracle_mul(Element{2, 5}, Element{3, 1}) == Element{2, 3});
  // (1,2),(4,0): domain {t >= 1 and t+1 >= 4} = {t >= 3}, offset -3
  CHECK(oracle::oracle_mul(Element{1, 2}, Element{4, 0}) == Element{3, 0});
  CHECK(oracle::oracle_mul(Element{-5, -5}, Element{-5, -5}) ==
        Element{-5, -5});

  Window const w(-7, 7);
  for (auto const& x : w.elements()) {
    for (auto const& y : w.elements()) {
      REQUIRE(oracle::oracle_mul(x, y) == mul(x, y));
    }
  }
}

TEST_CASE("shift composition is associative by construction") {
  Window const w(-4, 4);
  for (auto const& x : w.elements()) {
    for (auto const& y : w.elements()) {
      auto const s = oracle::to_shift(x);
      auto const t = oracle::to_shift(y);
      for (auto const& z : w.elements()) {
        auto const u = oracle::to_shift(z);
        REQUIRE(oracle::compose(oracle::compose(s, t), u) ==
                oracle::compose(s, oracle::compose(t, u)));
      }
    }
  }
}

TEST_CASE("brute-force Green agrees with the plain closed forms") {
  Window const w(-3, 3);
  BruteGreenTable<CheckedInt64> table(std::nullopt, w);
  constexpr GreenRel rels[] = {GreenRel::R, GreenRel::L, GreenRel::H,
                               GreenRel::D, GreenRel::J};
  for (auto const& x : w.elements()) {
    for (auto const& y : w.elements()) {
      for (auto const rel : rels) {
        REQUIRE(table.relation(rel, x, y) == green_cz(rel, x, y));
      }
    }
  }
}

TEST_CASE("brute-force Green matches the variant closed forms") {
  Window const w(-3, 3);
  for (auto const& v : {Variant{0, 0}, Variant{2, -1}, Variant{-1, 2}}) {
    BruteGreenTable<CheckedInt64> table(std::optional<Variant>(v), w);
    constexpr GreenRel rels[] = {GreenRel::R, GreenRel::L, GreenRel::H,
                                 GreenRel::D, GreenRel::J};
    for (auto const& x : w.elements()) {
      for (auto const& y : w.elements()) {
        for (auto const rel : rels) {
          REQUIRE(table.relation(rel, x, y) == green_v(rel, v, x, y));
        }
      }
    }
  }
}

TEST_CASE("brute-force spot values") {
  Window const w(-9, 9);
  BruteGreenTable<CheckedInt64> table(std::optional<Variant>(Variant{0, 0}),
                                      w);
  CHECK(table.relation(GreenRel::R, Element{2, 3}, Element{2, 7}));
  CHECK_FALSE(table.relation(GreenRel::R, Element{2, -1}, Element{2, -4}));
  CHECK(table.relation(GreenRel::H, Element{4, -2}, Element{4, -2}));
  CHECK_FALSE(table.relation(GreenRel::D, Element{-5, -7}, Element{-3, -9}));
  // L-classes pin the second coordinate and R-classes the first, so the
  // only candidate chain witness between (3,-8) and (5,1) is (5,-8),
  // which is R-related to neither; no widening changes that.
  CHECK_FALSE(table.relation(GreenRel::D, Element{3, -8}, Element{5, 1}));
  CHECK(table.relation(GreenRel::D, Element{3, 2}, Element{5, 1}));
  CHECK(table.relation(GreenRel::J, Element{3, -8}, Element{5, 1}));
}

TEST_CASE("operands must lie inside the window") {
  Window const w(-2, 2);
  BruteGreenTable<CheckedInt64> table(std::nullopt, w);
  CHECK_THROWS_AS(table.relation(GreenRel::R, Element{5, 0}, Element{0, 0}),
                  InvalidArgumentError);
}

TEST_CASE("absurd widening requirements are refused") {
  Window const w(-4000, 4000);
  CHECK_THROWS_AS(
      oracle::brute_green(GreenRel::R, std::optional<Variant>{},
                          Element{0, 0}, Element{1, 1}, w),
      WindowTooSmallError);
}
