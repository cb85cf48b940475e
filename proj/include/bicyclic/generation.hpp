#ifndef BICYCLIC_GENERATION_HPP_
#define BICYCLIC_GENERATION_HPP_

// Finite-generation analysis.  The closure of a finite generating set is
// only semi-decided inside a guard window; the non-generation witnesses
// do not rely on closure absence but on region bounds: every product of
// two or more plain generators keeps both coordinates at or above the
// least generator coordinate, and in a sandwich variant at or above the
// least one-sided ideal floors.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "core.hpp"
#include "types.hpp"
#include "variants.hpp"

namespace bicyclic {

//! A finite, non-empty generating set, in the plain semigroup when
//! params is absent and in the sandwich variant otherwise.
template <Integer I>
struct BasicGenSet {
  std::vector<BasicElement<I>> elements;  // sorted, duplicates removed
  std::optional<BasicVariant<I>> params;
};

using GenSet = BasicGenSet<CheckedInt64>;

template <Integer I>
BasicGenSet<I> make_gen_set(std::vector<BasicElement<I>> elements,
                            std::optional<BasicVariant<I>> params = {}) {
  if (elements.empty()) {
    throw InvalidArgumentError("generating set must be non-empty");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  return {std::move(elements), std::move(params)};
}

template <Integer I>
struct BasicClosureResult {
  std::set<BasicElement<I>> found;
  std::set<BasicElement<I>> frontier;  // products that escaped the guard
  bool saturated;                      // fixpoint reached, frontier empty
  BasicWindow<I> guard;
};

using ClosureResult = BasicClosureResult<CheckedInt64>;

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

//! Breadth-first closure of g under its product, expanding elements in
//! lexicographic order.  Products that land outside the guard window are
//! recorded in the frontier but never expanded, so `found` is the set of
//! generated elements reachable without ever leaving the guard.
template <Integer I>
BasicClosureResult<I> closure(BasicGenSet<I> const& g,
                              BasicWindow<I> const& guard,
                              std::size_t cap = kDefaultClosureCap) {
  if (g.elements.empty()) {
    throw InvalidArgumentError("generating set must be non-empty");
  }
  for (auto const& e : g.elements) {
    if (!guard.contains(e)) {
      std::ostringstream msg;
      msg << "generator " << e << " lies outside the guard window " << guard;
      throw InvalidArgumentError(msg.str());
    }
  }

  BasicClosureResult<I> out{{}, {}, false, guard};
  std::set<BasicElement<I>> pending(g.elements.begin(), g.elements.end());
  out.found.insert(g.elements.begin(), g.elements.end());

  auto offer = [&](BasicElement<I> const& p) {
    if (!guard.contains(p)) {
      out.frontier.insert(p);
      return;
    }
    if (out.found.insert(p).second) {
      if (out.found.size() > cap) {
        std::ostringstream msg;
        msg << "closure exceeded its budget of " << cap << " elements";
        throw BudgetExceededError(msg.str());
      }
      pending.insert(p);
    }
  };

  while (!pending.empty()) {
    auto const x = *pending.begin();
    pending.erase(pending.begin());
    // Snapshot: x itself is already a member, so x*x is covered.
    std::vector<BasicElement<I>> const known(out.found.begin(),
                                             out.found.end());
    for (auto const& f : known) {
      offer(product_in(g.params, x, f));
      offer(product_in(g.params, f, x));
    }
  }
  out.saturated = out.frontier.empty();
  return out;
}

//! Least coordinate over all generators; the plain closure stays inside
//! the corner {(i,j) : i,j >= min_corner}.
template <Integer I>
I min_corner(BasicGenSet<I> const& g) {
  I k = g.elements.front().a;
  for (auto const& e : g.elements) {
    k = min_val(k, min_val(e.a, e.b));
  }
  return k;
}

template <Integer I>
struct BasicCornerWitness {
  BasicElement<I> witness;
  I corner;  // the min_corner bound certifying exclusion
};

using CornerWitness = BasicCornerWitness<CheckedInt64>;

//! A point outside the subsemigroup generated by g in the plain
//! semigroup: (k-1, k-1) for k the least generator coordinate.
template <Integer I>
BasicCornerWitness<I> witness_cz(BasicGenSet<I> const& g) {
  if (g.params.has_value()) {
    throw InvalidArgumentError("witness_cz expects a plain generating set");
  }
  I const k = min_corner(g);
  return {{k - I(1), k - I(1)}, k};
}

template <Integer I>
struct BasicFloorBounds {
  I xstar{};  // least right ideal floor over the generators
  I ystar{};  // least left ideal floor over the generators
};

using FloorBounds = BasicFloorBounds<CheckedInt64>;

template <Integer I>
struct BasicVariantWitness {
  BasicElement<I> witness;
  BasicFloorBounds<I> floors;
};

using VariantWitness = BasicVariantWitness<CheckedInt64>;

//! A point outside the subsemigroup generated by g in its variant: every
//! product of two or more generators has first coordinate >= xstar and
//! second >= ystar, so the first diagonal point below both floors that is
//! not itself a generator cannot be generated.
template <Integer I>
BasicVariantWitness<I> witness_variant(BasicGenSet<I> const& g) {
  if (!g.params.has_value()) {
    throw InvalidArgumentError("witness_variant expects a variant generating set");
  }
  BasicFloorBounds<I> floors;
  bool first = true;
  for (auto const& e : g.elements) {
    auto const f = ideal_floors(*g.params, e);
    if (first) {
      floors = {f.right_floor, f.left_floor};
      first = false;
    } else {
      floors.xstar = min_val(floors.xstar, f.right_floor);
      floors.ystar = min_val(floors.ystar, f.left_floor);
    }
  }
  for (I t(0);; t += I(1)) {
    BasicElement<I> const w{floors.xstar - I(1) - t, floors.ystar - I(1) - t};
    if (std::find(g.elements.begin(), g.elements.end(), w) ==
        g.elements.end()) {
      return {w, floors};
    }
  }
}

}  // namespace bicyclic

#endif  // BICYCLIC_GENERATION_HPP_
