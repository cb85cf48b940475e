#ifndef BICYCLIC_EGGBOX_HPP_
#define BICYCLIC_EGGBOX_HPP_

// Egg-box rendering of a window of a sandwich variant as DOT text: one
// cluster per D-class, rows are R-classes, columns are L-classes.  All
// orderings are lexicographic on class representatives, so the output is
// deterministic.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "types.hpp"
#include "variants.hpp"

namespace bicyclic {

namespace detail {

//! Partition `points` by the given equivalence; classes and their member
//! lists come out sorted by least element.
template <Integer I, typename RelFn>
std::vector<std::vector<BasicElement<I>>> partition_by(
    std::vector<BasicElement<I>> const& points, RelFn&& related) {
  std::vector<std::vector<BasicElement<I>>> classes;
  for (auto const& x : points) {  // points are lexicographically sorted
    bool placed = false;
    for (auto& cls : classes) {
      if (related(cls.front(), x)) {
        cls.push_back(x);
        placed = true;
        break;
      }
    }
    if (!placed) {
      classes.push_back({x});
    }
  }
  return classes;
}

}  // namespace detail

template <Integer I>
std::string eggbox_dot(BasicVariant<I> const& v, BasicWindow<I> const& w) {
  auto const points = w.elements();
  auto const d_classes = detail::partition_by(
      points, [&](auto const& x, auto const& y) {
        return green_v(GreenRel::D, v, x, y);
      });

  auto node_id = [](BasicElement<I> const& e) {
    std::ostringstream os;
    os << "\"(" << e.a << "," << e.b << ")\"";
    return os.str();
  };

  std::ostringstream dot;
  dot << "digraph eggbox {\n";
  dot << "  // variant " << v << ", window " << w << "\n";
  dot << "  node [shape=box];\n";
  dot << "  edge [style=invis];\n";
  std::size_t cluster = 0;
  for (auto const& dcls : d_classes) {
    auto const rows = detail::partition_by(
        dcls, [&](auto const& x, auto const& y) {
          return green_v(GreenRel::R, v, x, y);
        });
    auto const cols = detail::partition_by(
        dcls, [&](auto const& x, auto const& y) {
          return green_v(GreenRel::L, v, x, y);
        });
    std::map<BasicElement<I>, std::size_t> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (auto const& e : cols[c]) {
        col_of[e] = c;
      }
    }

    dot << "  subgraph cluster_" << cluster << " {\n";
    dot << "    label=\"D" << cluster << "\";\n";
    // Rows: one rank per R-class, cells ordered by L-class column.
    std::vector<std::map<std::size_t, BasicElement<I>>> grid;
    for (auto const& row : rows) {
      std::map<std::size_t, BasicElement<I>> cells;
      for (auto const& e : row) {
        cells[col_of[e]] = e;  // H-classes are singletons
      }
      dot << "    { rank=same;";
      for (auto const& [c, e] : cells) {
        dot << " " << node_id(e) << ";";
      }
      dot << " }\n";
      grid.push_back(std::move(cells));
    }
    // Invisible edges pin the column alignment between consecutive rows.
    for (std::size_t r = 0; r + 1 < grid.size(); ++r) {
      for (auto const& [c, e] : grid[r]) {
        auto const below = grid[r + 1].find(c);
        if (below != grid[r + 1].end()) {
          dot << "    " << node_id(e) << " -> " << node_id(below->second)
              << ";\n";
        }
      }
    }
    dot << "  }\n";
    ++cluster;
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace bicyclic

#endif  // BICYCLIC_EGGBOX_HPP_
