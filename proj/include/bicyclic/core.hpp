#ifndef BICYCLIC_CORE_HPP_
#define BICYCLIC_CORE_HPP_

// Exact arithmetic of the extended bicyclic semigroup on Z x Z:
//
//   (a,b) . (c,d) = (a-b+c, d)    if b < c
//                   (a, d)        if b = c
//                   (a, d+b-c)    if b > c
//
// The semigroup is inverse, simple and bisimple; the maps here are total
// and pure.

#include <cstdint>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "types.hpp"

namespace bicyclic {

template <Integer I>
BasicElement<I> mul(BasicElement<I> const& x, BasicElement<I> const& y) {
  if (x.b < y.a) {
    return {x.a - x.b + y.a, y.b};
  }
  if (x.b == y.a) {
    return {x.a, y.b};
  }
  return {x.a, y.b + x.b - y.a};
}

//! The unique inverse: (a,b)^-1 = (b,a); x x^-1 x = x holds.
template <Integer I>
BasicElement<I> inverse(BasicElement<I> const& x) {
  return {x.b, x.a};
}

enum class GreenRel { R, L, H, D, J };

inline char const* green_rel_name(GreenRel rel) {
  switch (rel) {
    case GreenRel::R: return "R";
    case GreenRel::L: return "L";
    case GreenRel::H: return "H";
    case GreenRel::D: return "D";
    case GreenRel::J: return "J";
  }
  return "?";
}

//! Green's relations on the extended bicyclic semigroup.  R-classes fix
//! the first coordinate, L-classes the second, every H-class is a
//! singleton, and the semigroup is bisimple and simple, so D and J are
//! total.  The brute-force counterpart lives in shift_oracle.hpp.
template <Integer I>
bool green_cz(GreenRel rel, BasicElement<I> const& x,
              BasicElement<I> const& y) {
  switch (rel) {
    case GreenRel::R: return x.a == y.a;
    case GreenRel::L: return x.b == y.b;
    case GreenRel::H: return x == y;
    case GreenRel::D:
    case GreenRel::J: return true;
  }
  return false;
}

//! Natural partial order e <= f iff ef = fe = e.  Takes the product as a
//! parameter so the same order serves the plain semigroup and every
//! sandwich variant.  Both operands must be idempotent under `product`.
template <Integer I, typename Mul>
bool natural_leq(Mul&& product, BasicElement<I> const& e,
                 BasicElement<I> const& f) {
  auto require_idempotent = [&](BasicElement<I> const& g, char const* which) {
    if (!(product(g, g) == g)) {
      std::ostringstream msg;
      msg << which << " operand " << g << " is not an idempotent";
      throw NotIdempotentError(which, msg.str());
    }
  };
  require_idempotent(e, "left");
  require_idempotent(f, "right");
  return product(e, f) == e && product(f, e) == e;
}

//! Cap on how far brute-force enumerations may widen a window before
//! they refuse with WindowTooSmallError.
inline constexpr std::int64_t kDefaultWideningGuard = 4096;

namespace detail {

//! In-box solutions u of rho . u = t under the plain product, returned as
//! candidates for the caller to verify with a direct multiplication.
//! Sandwich products reduce to this by pre-multiplying the sandwich
//! element into rho.
template <Integer I>
std::vector<BasicElement<I>> solve_right_cofactor(BasicElement<I> const& rho,
                                                  BasicElement<I> const& t,
                                                  I const& lo, I const& hi) {
  std::vector<BasicElement<I>> candidates;
  if (t.a > rho.a) {
    // rho . (c,d) with c > rho.b lands at (rho.a - rho.b + c, d).
    candidates.push_back({t.a - rho.a + rho.b, t.b});
  } else if (t.a == rho.a) {
    // Any c <= rho.b with d = t.b - rho.b + c works; both coordinates of
    // u grow with c, so the largest in-box choice decides feasibility.
    I c = min_val(rho.b, hi);
    c = min_val(c, hi + rho.b - t.b);
    candidates.push_back({c, t.b - rho.b + c});
  }
  std::vector<BasicElement<I>> in_box;
  for (auto const& u : candidates) {
    if (lo <= u.a && u.a <= hi && lo <= u.b && u.b <= hi) {
      in_box.push_back(u);
    }
  }
  return in_box;
}

}  // namespace detail

template <Integer I>
struct DiffCheck {
  BasicElement<I> product;
  bool holds;
};

//! Forms the product (plain, or sandwiched through `params` when present)
//! and reports whether (a-b) [+ m-n] + (c-d) = i-j for the result (i,j).
//! The identity is a theorem, so `holds` is expected to be true always;
//! it is computed, not assumed.
template <Integer I>
DiffCheck<I> diff_invariant_check(std::optional<BasicVariant<I>> const& params,
                                  BasicElement<I> const& x,
                                  BasicElement<I> const& y) {
  BasicElement<I> product;
  I lhs = (x.a - x.b) + (y.a - y.b);
  if (params.has_value()) {
    BasicElement<I> const sandwich{params->m, params->n};
    product = mul(mul(x, sandwich), y);
    lhs = lhs + (params->m - params->n);
  } else {
    product = mul(x, y);
  }
  return {product, lhs == product.a - product.b};
}

}  // namespace bicyclic

#endif  // BICYCLIC_CORE_HPP_
