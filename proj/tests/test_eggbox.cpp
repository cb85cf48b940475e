#include <catch2/catch_amalgamated.hpp>

#include <bicyclic/eggbox.hpp>

using namespace bicyclic;

TEST_CASE("egg-box DOT output is deterministic") {
  Variant const v{0, 0};
  Window const w(-2, 2);
  CHECK(eggbox_dot(v, w) == eggbox_dot(v, w));
}

TEST_CASE("egg-box clusters are the D-classes of the window") {
  Variant const v{0, 0};
  Window const w(-1, 1);
  auto const dot = eggbox_dot(v, w);

  // On [-1,1]^2 the window splits into four D-classes: the non-negative
  // block, {(-1,0),(-1,1)}, {(0,-1),(1,-1)} and the singleton (-1,-1).
  std::size_t clusters = 0;
  for (std::size_t pos = dot.find("subgraph cluster_");
       pos != std::string::npos;
       pos = dot.find("subgraph cluster_", pos + 1)) {
    ++clusters;
  }
  CHECK(clusters == 4);

  // every window element appears as a node
  for (auto const& e : w.elements()) {
    CHECK(dot.find("\"(" + to_display_string(e.a) + "," +
                   to_display_string(e.b) + ")\"") != std::string::npos);
  }
  CHECK(dot.rfind("digraph eggbox {", 0) == 0);
}

TEST_CASE("rows are R-classes and share a rank") {
  Variant const v{0, 0};
  Window const w(0, 1);
  auto const dot = eggbox_dot(v, w);
  // all four elements are D-related; (0,0),(0,1) form one R-class row
  CHECK(dot.find("{ rank=same; \"(0,0)\"; \"(0,1)\"; }") != std::string::npos);
  CHECK(dot.find("{ rank=same; \"(1,0)\"; \"(1,1)\"; }") != std::string::npos);
}
