#ifndef BICYCLIC_VARIANTS_HPP_
#define BICYCLIC_VARIANTS_HPP_

// Sandwich variants of the extended bicyclic semigroup: the same carrier
// Z x Z under x *_{m,n} y = x . (m,n) . y.  Idempotents form the
// omega-chain e_i = (n+i, m+i), principal ideals are half-planes with
// computable floors, and every variant is simple.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "core.hpp"
#include "types.hpp"

namespace bicyclic {

template <Integer I>
BasicElement<I> sandwich_element(BasicVariant<I> const& v) {
  return {v.m, v.n};
}

//! The variant product x *_{m,n} y = x . (m,n) . y.
template <Integer I>
BasicElement<I> smul(BasicVariant<I> const& v, BasicElement<I> const& x,
                     BasicElement<I> const& y) {
  return mul(mul(x, sandwich_element(v)), y);
}

//! Either the plain product or the sandwich product, depending on whether
//! a variant is supplied.  Several enumeration harnesses take this shape.
template <Integer I>
BasicElement<I> product_in(std::optional<BasicVariant<I>> const& params,
                           BasicElement<I> const& x,
                           BasicElement<I> const& y) {
  return params.has_value() ? smul(*params, x, y) : mul(x, y);
}

//! The idempotent e_i = (n+i, m+i) of the variant (m, n), i >= 0.
template <Integer I>
struct VariantIdempotent {
  BasicVariant<I> variant;
  I index{};

  BasicElement<I> element() const {
    return {variant.n + index, variant.m + index};
  }

  friend bool operator==(VariantIdempotent const& e,
                         VariantIdempotent const& f) {
    return e.variant == f.variant && e.index == f.index;
  }
};

template <Integer I>
VariantIdempotent<I> idempotent(BasicVariant<I> const& v, I index) {
  if (index < I(0)) {
    throw InvalidArgumentError("idempotent index must be non-negative");
  }
  return {v, index};
}

//! e_0 ... e_{count-1}.
template <Integer I>
std::vector<VariantIdempotent<I>> idempotents(BasicVariant<I> const& v,
                                              std::size_t count) {
  if (count == 0) {
    throw InvalidArgumentError("idempotent count must be positive");
  }
  std::vector<VariantIdempotent<I>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({v, I(static_cast<long long>(i))});
  }
  return out;
}

//! Arithmetic characterisation: (a,b) is idempotent in (m,n) iff
//! a - n = b - m >= 0.  Deliberately not phrased as smul(x,x) == x so the
//! exhaustive scans in the test suite are a genuine two-sided check.
template <Integer I>
bool is_idempotent(BasicVariant<I> const& v, BasicElement<I> const& x) {
  return x.a - v.n == x.b - v.m && x.a >= v.n;
}

//! Order on the idempotent omega-chain: e_i <= e_j iff j <= i; the chain
//! is isomorphic to (N_0, max) via e_i -> i.
template <Integer I>
bool omega_leq(BasicVariant<I> const& v, VariantIdempotent<I> const& e,
               VariantIdempotent<I> const& f) {
  if (!(e.variant == v) || !(f.variant == v)) {
    std::ostringstream msg;
    msg << "idempotents of variants " << e.variant << " and " << f.variant
        << " compared under variant " << v;
    throw VariantMismatchError(msg.str());
  }
  return f.index <= e.index;
}

template <Integer I>
struct IdealFloors {
  I right_floor{};  // x * S = {(p,q) : p >= right_floor}
  I left_floor{};   // S * x = {(p,q) : q >= left_floor}
};

//! Floors of the principal one-sided ideals of x in the variant:
//! right: a if b >= m, else a-b+m; left: b if a >= n, else n-a+b.
template <Integer I>
IdealFloors<I> ideal_floors(BasicVariant<I> const& v,
                            BasicElement<I> const& x) {
  IdealFloors<I> out;
  out.right_floor = x.b >= v.m ? x.a : x.a - x.b + v.m;
  out.left_floor = x.a >= v.n ? x.b : v.n - x.a + x.b;
  return out;
}

//! Green's relations on the variant (m,n), in closed form.
//!
//! R:  a=c and (b=d or b,d >= m)
//! L:  b=d and (a=c or a,c >= n)
//! H:  equality
//! D:  (a=c or a,c >= n) and (b=d or b,d >= m)
//! J:  total (every variant is simple)
//!
//! The D form follows from D = L o R: an element z with x L z and z R y
//! must agree with x in the second coordinate and with y in the first,
//! so z = (c, b) is the only candidate and membership in both classes
//! is exactly the conjunction above.  It is also the form transported
//! from the (0,0) variant by the canonical isomorphism.
template <Integer I>
bool green_v(GreenRel rel, BasicVariant<I> const& v, BasicElement<I> const& x,
             BasicElement<I> const& y) {
  auto const first_linked = [&] {
    return x.a == y.a || (x.a >= v.n && y.a >= v.n);
  };
  auto const second_linked = [&] {
    return x.b == y.b || (x.b >= v.m && y.b >= v.m);
  };
  switch (rel) {
    case GreenRel::R: return x.a == y.a && second_linked();
    case GreenRel::L: return x.b == y.b && first_linked();
    case GreenRel::H: return x == y;
    case GreenRel::D: return first_linked() && second_linked();
    case GreenRel::J: return true;
  }
  return false;
}

//! Verifies simplicity on a window: for every target t in w and every s
//! in w there are u, u' in the widened window with u * s * u' = t.  The
//! widening is sized from the witness shape u = (t.a, w1), u' = (w2, t.b)
//! with (w1, w2) = (m,n).s.(m,n), whose coordinates stay within five
//! times the largest magnitude in play.
template <Integer I>
bool simple_check(BasicVariant<I> const& v, BasicWindow<I> const& w,
                  std::int64_t guard = kDefaultWideningGuard) {
  I mag = max_val(abs_val(w.lo()), abs_val(w.hi()));
  mag = max_val(mag, max_val(abs_val(v.m), abs_val(v.n)));
  I const delta = I(5) * mag + I(2);
  if (to_int64(delta) > guard) {
    std::ostringstream msg;
    msg << "simple_check on " << w << " with variant " << v
        << " needs widening " << delta << " > guard " << guard;
    throw WindowTooSmallError(msg.str());
  }
  I const wlo = min_val(w.lo(), I(0) - delta);
  I const whi = max_val(w.hi(), delta);

  auto const targets = w.elements();
  for (auto const& t : targets) {
    for (auto const& s : targets) {
      bool found = false;
      for (I ua = wlo; !found && ua <= whi; ua += I(1)) {
        for (I ub = wlo; !found && ub <= whi; ub += I(1)) {
          BasicElement<I> const u{ua, ub};
          BasicElement<I> const r = smul(v, u, s);
          BasicElement<I> const rho = mul(r, sandwich_element(v));
          for (auto const& u2 :
               detail::solve_right_cofactor(rho, t, wlo, whi)) {
            if (smul(v, r, u2) == t) {
              found = true;
              break;
            }
          }
        }
      }
      if (!found) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace bicyclic

#endif  // BICYCLIC_VARIANTS_HPP_
