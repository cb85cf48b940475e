#include <catch2/catch_amalgamated.hpp>

#include <bicyclic/bigint.hpp>
#include <bicyclic/verify.hpp>

using namespace bicyclic;

TEST_CASE("suite catalog") {
  auto const& catalog = suite_catalog();
  REQUIRE(catalog.size() == 11);
  CHECK(catalog.front().key == "assoc");
  CHECK(catalog.back().key == "topo");
  VerifyOptions opts;
  CHECK_THROWS_AS(run_suite<CheckedInt64>("nope", opts),
                  InvalidArgumentError);
}

TEST_CASE("results do not depend on the worker count") {
  for (auto const* key : {"assoc", "interassoc", "topo"}) {
    VerifyOptions one;
    one.window = 2;
    one.jobs = 1;
    VerifyOptions four = one;
    four.jobs = 4;
    auto const a = run_suite<CheckedInt64>(key, one);
    auto const b = run_suite<CheckedInt64>(key, four);
    CHECK(a.checks == b.checks);
    CHECK(a.failures == b.failures);
    CHECK(a.failure_samples == b.failure_samples);
  }
}

TEST_CASE("suites run identically on the arbitrary-precision backend") {
  VerifyOptions opts;
  opts.window = 2;
  for (auto const* key : {"omega", "idem", "embed"}) {
    auto const narrow = run_suite<CheckedInt64>(key, opts);
    auto const wide = run_suite<Bigint>(key, opts);
    CHECK(narrow.checks == wide.checks);
    CHECK(narrow.failures == 0);
    CHECK(wide.failures == 0);
  }
}

TEST_CASE("every suite except the topology density clause is green") {
  VerifyOptions opts;
  opts.window = 3;
  opts.jobs = 2;
  for (auto const& info : suite_catalog()) {
    auto const result = run_suite<CheckedInt64>(info.key, opts);
    INFO(info.key);
    if (info.key == "topo") {
      // The density check wants another enumerated rational within 1/64
      // of each ray coordinate inside the first 10^4 values.  For the
      // nine values with denominator 1 or 2 none exists (near-integer
      // rationals need a continued-fraction digit >= 63, first reached
      // around index 2^63), so exactly 354 of the
      // 33 x 64 per-radius checks fail, whatever the window knob says.
      CHECK_FALSE(result.passed());
      CHECK(result.failures == 354);
      CHECK(result.failure_samples.front() ==
            "no enumeration value within 1/13 of index 0");
    } else {
      CHECK(result.passed());
      CHECK(result.failures == 0);
      CHECK(result.checks > 0);
    }
  }
}
