#include <set>

#include <catch2/catch_amalgamated.hpp>

#include <bicyclic/topology.hpp>

using namespace bicyclic;

TEST_CASE("point classification") {
  CHECK(std::holds_alternative<IsolatedPoint>(classify(Element{3, -7})));
  CHECK(std::holds_alternative<IsolatedPoint>(classify(Element{-7, 3})));
  CHECK(std::holds_alternative<IsolatedPoint>(classify(Element{1, 1})));

  auto const deep = classify(Element{-2, -5});
  auto const& pos = std::get<RayPosition<CheckedInt64>>(deep);
  CHECK(pos.base == Element{0, -3});
  CHECK(pos.index == CheckedInt64(2));

  auto const origin = classify(Element{0, 0});
  auto const& opos = std::get<RayPosition<CheckedInt64>>(origin);
  CHECK(opos.base == Element{0, 0});
  CHECK(opos.index == CheckedInt64(0));
}

TEST_CASE("rays partition the non-isolated quadrant") {
  Window const w(-7, 7);
  for (auto const& x : w.elements()) {
    auto const cls = classify(x);
    if (x.a > CheckedInt64(0) || x.b > CheckedInt64(0)) {
      REQUIRE(std::holds_alternative<IsolatedPoint>(cls));
    } else {
      auto const& pos = std::get<RayPosition<CheckedInt64>>(cls);
      REQUIRE(is_ray_base(pos.base));
      REQUIRE(pos.index >= CheckedInt64(0));
      REQUIRE(ray_representative(Ray<CheckedInt64>{pos.base}, pos.index) == x);
    }
  }
  CHECK_THROWS_AS(ray(Element{-1, -2}), InvalidArgumentError);
}

TEST_CASE("Calkin-Wilf enumeration") {
  CHECK(rational_enum(0) == Rational(1, 1));
  CHECK(rational_enum(1) == Rational(1, 2));
  CHECK(rational_enum(2) == Rational(2, 1));
  CHECK(rational_enum(3) == Rational(1, 3));

  SECTION("injective over a long prefix") {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    Rational r(1, 1);
    for (int i = 0; i <= 10'000; ++i) {
      REQUIRE(seen.insert({r.num(), r.den()}).second);
      REQUIRE(r.num() > 0);
      r = calkin_wilf_next(r);
    }
  }

  CHECK_THROWS_AS(rational_enum(kMaxRationalEnumIndex + 1),
                  InvalidArgumentError);
}

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(1, 1).floor() == 1);
  CHECK(Rational(5, 3).floor() == 1);
  CHECK(Rational(-1, 2).floor() == -1);
  CHECK_THROWS_AS(Rational(1, 0), InvalidArgumentError);
}

TEST_CASE("neighbourhood bases") {
  auto const isolated = basic_nbhds(Element{5, 1}, 3);
  REQUIRE(isolated.size() == 1);
  CHECK(std::get<Singleton<CheckedInt64>>(isolated[0]).point ==
        Element{5, 1});

  // Ray point (0,0): r_0 = 1, the d=2 interval is (1/2, 3/2).  Among the
  // first nine enumeration values exactly r_0, r_5 = 2/3, r_8 = 4/3 land
  // inside, so the interval holds ray indices {0, 5, 8}.
  auto const nbhds = basic_nbhds(Element{0, 0}, 2);
  REQUIRE(nbhds.size() == 2);
  auto const& interval = std::get<RayInterval<CheckedInt64>>(nbhds[1]);
  CHECK(interval.lo == Rational(1, 2));
  CHECK(interval.hi == Rational(3, 2));
  std::set<int> inside;
  for (int i = 0; i <= 8; ++i) {
    auto const value = rational_enum(static_cast<std::uint64_t>(i));
    if (interval.lo < value && value < interval.hi) {
      inside.insert(i);
    }
  }
  CHECK(inside == std::set<int>{0, 5, 8});

  // every returned interval contains the point itself
  for (auto const& x : {Element{0, 0}, Element{-4, -4}, Element{0, -6}}) {
    for (auto const& open : basic_nbhds(x, 4)) {
      CHECK(contains(open, x));
    }
  }
  CHECK_THROWS_AS(basic_nbhds(Element{0, 0}, 0), InvalidArgumentError);
}

TEST_CASE("forced-isolation lint") {
  Window const w(-6, 6);
  auto const tau_star = [](Element const& e) { return tau_star_isolated(e); };
  CHECK(lint_shift_constraints(tau_star, w).empty());

  // the discrete classification satisfies the necessary conditions
  auto const discrete = [](Element const&) { return true; };
  CHECK(lint_shift_constraints(discrete, w).empty());

  // marking one forced point non-isolated yields exactly one violation
  Window const wide(-9, 9);
  auto const wrong = [](Element const& e) {
    if (e == Element{5, -9}) {
      return false;
    }
    return tau_star_isolated(e);
  };
  auto const violations = lint_shift_constraints(wrong, wide);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0] == Element{5, -9});
}

TEST_CASE("collapsing products of rays") {
  auto const r1 = ray(Element{0, -3});
  auto const r2 = ray(Element{-2, 0});
  CHECK(collapse_product<CheckedInt64>(r1, r2) == Element{3, 2});

  // ray * isolated point with positive first coordinate
  CHECK(collapse_product<CheckedInt64>(r1, Element{4, 1}) == Element{7, 1});
  // isolated point * ray, second coordinate <= 0
  CHECK(collapse_product<CheckedInt64>(Element{2, -1}, ray(Element{-1, 0})) ==
        Element{3, 1});

  CHECK_THROWS_AS(
      collapse_product<CheckedInt64>(Element{1, 1}, Element{2, 2}),
      NotCollapsibleError);

  SECTION("the collapse value is representative-independent") {
    Variant const origin{0, 0};
    for (auto const& a : {r1, r2, ray(Element{0, 0}), ray(Element{-5, 0})}) {
      for (auto const& b : {r1, r2, ray(Element{0, -1})}) {
        auto const expected = collapse_product<CheckedInt64>(a, b);
        for (long long i = 0; i <= 16; ++i) {
          for (long long j = 0; j <= 16; ++j) {
            REQUIRE(smul(origin, ray_representative(a, CheckedInt64(i)),
                         ray_representative(b, CheckedInt64(j))) == expected);
          }
        }
      }
      for (auto const& p : {Element{4, 1}, Element{-3, 2}, Element{1, -5}}) {
        auto const left = collapse_product<CheckedInt64>(a, p);
        auto const right = collapse_product<CheckedInt64>(p, a);
        for (long long i = 0; i <= 16; ++i) {
          auto const rep = ray_representative(a, CheckedInt64(i));
          REQUIRE(smul(origin, rep, p) == left);
          REQUIRE(smul(origin, p, rep) == right);
        }
      }
    }
  }
}

TEST_CASE("continuity certificates") {
  Variant const origin{0, 0};

  // ray * ray collapses to (3,3); (-4,-1) sits at index 1 of the ray
  // based (-3,0)
  auto const product = smul(origin, Element{-2, -5}, Element{-4, -1});
  REQUIRE(product == Element{3, 3});
  auto const w_open = basic_nbhds(product, 1).front();
  auto const cert = continuity_certificate(Element{-2, -5}, Element{-4, -1},
                                           w_open);
  CHECK(std::get<Ray<CheckedInt64>>(cert.u).base == Element{0, -3});
  CHECK(std::get<Ray<CheckedInt64>>(cert.v).base == Element{-3, 0});
  CHECK(collapse_product<CheckedInt64>(ray(Element{0, -3}),
                                       ray(Element{-3, 0})) == product);

  // two isolated points certify themselves
  auto const p2 = smul(origin, Element{5, 2}, Element{7, 0});
  auto const cert2 = continuity_certificate(
      Element{5, 2}, Element{7, 0}, BasicOpen<CheckedInt64>(
          Singleton<CheckedInt64>{p2}));
  CHECK(std::get<Singleton<CheckedInt64>>(cert2.u).point == Element{5, 2});
  CHECK(std::get<Singleton<CheckedInt64>>(cert2.v).point == Element{7, 0});

  // mixed: ray of (0,0) times the isolated (4,1)
  auto const p3 = smul(origin, Element{-1, -1}, Element{4, 1});
  REQUIRE(p3 == Element{4, 1});
  auto const cert3 = continuity_certificate(
      Element{-1, -1}, Element{4, 1},
      BasicOpen<CheckedInt64>(Singleton<CheckedInt64>{p3}));
  CHECK(std::get<Ray<CheckedInt64>>(cert3.u).base == Element{0, 0});
  CHECK(std::get<Singleton<CheckedInt64>>(cert3.v).point == Element{4, 1});

  SECTION("a target that misses the product is rejected") {
    CHECK_THROWS_AS(
        continuity_certificate(Element{0, 0}, Element{0, 0},
                               BasicOpen<CheckedInt64>(
                                   Singleton<CheckedInt64>{Element{9, 9}})),
        InvalidTargetError);
  }
}

TEST_CASE("Hausdorff separation certificates") {
  Window const w(-4, 4);
  auto const els = w.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      auto const [u, v] = separate(els[i], els[j]);
      REQUIRE(contains(u, els[i]));
      REQUIRE(contains(v, els[j]));
      REQUIRE(provably_disjoint(u, v));
    }
  }
  CHECK_THROWS_AS(separate(Element{1, 1}, Element{1, 1}),
                  InvalidArgumentError);
}

TEST_CASE("density search within the enumeration prefix") {
  // Around 1/3 (index 3) a close value appears within the first 10^4
  // enumeration steps; around 1/1 (index 0) the nearest value in that
  // prefix is 1/13 away, since anything closer needs a continued-fraction
  // digit >= 63 and such values only occur near index 2^63.
  CHECK(find_enum_value_within(3, Rational(1, 64), 10'000).has_value());
  CHECK(nearest_enum_distance(3, 10'000) < Rational(1, 64));
  CHECK_FALSE(find_enum_value_within(0, Rational(1, 64), 10'000).has_value());
  CHECK(nearest_enum_distance(0, 10'000) == Rational(1, 13));
  CHECK(find_enum_value_within(0, Rational(1, 12), 10'000).has_value());
}
