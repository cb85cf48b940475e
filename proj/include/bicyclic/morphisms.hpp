#ifndef BICYCLIC_MORPHISMS_HPP_
#define BICYCLIC_MORPHISMS_HPP_

// Structure-preserving maps: the automorphism group of the extended
// bicyclic semigroup (diagonal translations, isomorphic to Z(+)), the
// embedding of the bicyclic monoid onto the corner {(i,j) : i,j >= k},
// and the translation isomorphisms between sandwich variants.

#include <sstream>

#include "core.hpp"
#include "types.hpp"
#include "variants.hpp"

namespace bicyclic {

//! The automorphism (i,j) -> (i+shift, j+shift); composition adds shifts,
//! inversion negates, shift 0 is the identity.
template <Integer I>
struct BasicAutomorphism {
  I shift{};

  friend bool operator==(BasicAutomorphism const& g,
                         BasicAutomorphism const& h) {
    return g.shift == h.shift;
  }
};

using Automorphism = BasicAutomorphism<CheckedInt64>;

template <Integer I>
BasicElement<I> aut_apply(BasicAutomorphism<I> const& h,
                          BasicElement<I> const& x) {
  return {x.a + h.shift, x.b + h.shift};
}

template <Integer I>
BasicAutomorphism<I> aut_compose(BasicAutomorphism<I> const& g,
                                 BasicAutomorphism<I> const& h) {
  return {g.shift + h.shift};
}

template <Integer I>
BasicAutomorphism<I> aut_invert(BasicAutomorphism<I> const& h) {
  return {I(0) - h.shift};
}

//! q^i p^j in the bicyclic monoid C(p, q) with pq = 1; exponents are
//! non-negative.
template <Integer I>
struct BasicBicyclicElement {
  I q_exp{};
  I p_exp{};

  friend bool operator==(BasicBicyclicElement const& u,
                         BasicBicyclicElement const& v) {
    return u.q_exp == v.q_exp && u.p_exp == v.p_exp;
  }

  friend std::ostream& operator<<(std::ostream& os,
                                  BasicBicyclicElement const& u) {
    return os << "q^" << u.q_exp << "p^" << u.p_exp;
  }
};

using BicyclicElement = BasicBicyclicElement<CheckedInt64>;

template <Integer I>
BasicBicyclicElement<I> bicyclic_element(I q_exp, I p_exp) {
  if (q_exp < I(0) || p_exp < I(0)) {
    std::ostringstream msg;
    msg << "bicyclic exponents must be non-negative, got q^" << q_exp << "p^"
        << p_exp;
    throw InvalidArgumentError(msg.str());
  }
  return {q_exp, p_exp};
}

//! q^i p^j -> (i+k, j+k); the image of the whole monoid is the corner
//! {(i,j) : i,j >= k} and the map transports bicyclic_mul to mul.
template <Integer I>
BasicElement<I> embed_bicyclic(I const& k, BasicBicyclicElement<I> const& u) {
  return {u.q_exp + k, u.p_exp + k};
}

//! Multiplication in C(p, q), computed on the image side: embed at k = 0,
//! multiply, pull back.  Products of non-negative pairs stay
//! non-negative, so the pull-back is total.
template <Integer I>
BasicBicyclicElement<I> bicyclic_mul(BasicBicyclicElement<I> const& u,
                                     BasicBicyclicElement<I> const& v) {
  BasicElement<I> const image =
      mul(embed_bicyclic(I(0), u), embed_bicyclic(I(0), v));
  return bicyclic_element(image.a, image.b);
}

//! A coordinate-translation isomorphism between two sandwich variants:
//! forward is (a,b) -> (a + shift_a, b + shift_b).
template <Integer I>
struct BasicIsoMap {
  BasicVariant<I> src;
  BasicVariant<I> dst;
  I shift_a{};
  I shift_b{};

  BasicElement<I> forward(BasicElement<I> const& x) const {
    return {x.a + shift_a, x.b + shift_b};
  }

  BasicElement<I> backward(BasicElement<I> const& x) const {
    return {x.a - shift_a, x.b - shift_b};
  }

  friend bool operator==(BasicIsoMap const& f, BasicIsoMap const& g) {
    return f.src == g.src && f.dst == g.dst && f.shift_a == g.shift_a &&
           f.shift_b == g.shift_b;
  }
};

using IsoMap = BasicIsoMap<CheckedInt64>;

template <Integer I>
BasicIsoMap<I> iso_compose(BasicIsoMap<I> const& f, BasicIsoMap<I> const& g) {
  if (!(f.dst == g.src)) {
    std::ostringstream msg;
    msg << "isomorphisms do not chain: dst " << f.dst << " vs src " << g.src;
    throw InvalidArgumentError(msg.str());
  }
  return {f.src, g.dst, f.shift_a + g.shift_a, f.shift_b + g.shift_b};
}

//! The diagonal automorphism as an isomorphism (0,0) -> (k,k).
template <Integer I>
BasicIsoMap<I> iso_diag(I const& k) {
  return {{I(0), I(0)}, {k, k}, k, k};
}

enum class PadDirection { right, left };

//! Padding isomorphisms out of the diagonal variant (r, r), p >= 1:
//!
//!   right: (r,r) -> (r+p, r), forward (a,b) -> (a, b+p);
//!   left:  (r,r) -> (r, r+p), forward (a,b) -> (a+p, b).
//!
//! The two directions pad opposite coordinates: growing the sandwich
//! element's first coordinate by p costs the image p more in the second
//! coordinate for the products to agree, and symmetrically.  (Check at
//! the idempotent (r,r): its image must again be idempotent, which in
//! (r+p, r) is (r, r+p) and in (r, r+p) is (r+p, r).)
template <Integer I>
BasicIsoMap<I> iso_pad(PadDirection direction, I const& r, I const& p) {
  if (p < I(1)) {
    std::ostringstream msg;
    msg << "padding must be a positive integer, got " << p;
    throw InvalidPaddingError(msg.str());
  }
  if (direction == PadDirection::right) {
    return {{r, r}, {r + p, r}, I(0), p};
  }
  return {{r, r}, {r, r + p}, p, I(0)};
}

//! The canonical isomorphism (0,0) -> (m,n): iso_diag(min(m,n)) followed
//! by the padding that grows the larger sandwich coordinate (none when
//! m = n).  The composite is asserted against its closed form
//! (a,b) -> (a+n, b+m), which carries e_i = (i,i) to (n+i, m+i) = e_i.
template <Integer I>
BasicIsoMap<I> canonical_iso(I const& m, I const& n) {
  I const lo = min_val(m, n);
  BasicIsoMap<I> composite = iso_diag(lo);
  if (m > n) {
    composite = iso_compose(composite, iso_pad(PadDirection::right, lo, m - n));
  } else if (n > m) {
    composite = iso_compose(composite, iso_pad(PadDirection::left, lo, n - m));
  }
  BasicIsoMap<I> const closed{{I(0), I(0)}, {m, n}, n, m};
  if (!(composite == closed)) {
    std::ostringstream msg;
    msg << "canonical isomorphism composite disagrees with its closed form "
        << "for variant (" << m << "," << n << ")";
    throw Error(msg.str());
  }
  return composite;
}

}  // namespace bicyclic

#endif  // BICYCLIC_MORPHISMS_HPP_
