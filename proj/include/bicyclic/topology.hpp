#ifndef BICYCLIC_TOPOLOGY_HPP_
#define BICYCLIC_TOPOLOGY_HPP_

// A finitely describable model of the topology tau* on the (0,0) variant:
//
//  * every point with a > 0 or b > 0 is isolated (this much is forced on
//    any Hausdorff shift-continuous topology);
//  * the remaining points {a <= 0 and b <= 0} split into disjoint
//    diagonal rays A_(a,b) = {(a-i, b-i) : i >= 0} descending from the
//    boundary bases {ab = 0, a+b <= 0}, and each ray is clopen;
//  * inside a ray, the point of index i sits at the i-th positive
//    rational of the Calkin-Wilf enumeration and carries the order
//    topology of the rationals — dense in itself, so no ray point is
//    isolated.
//
// Products collapse: the sandwich product of full rays is a single point,
// which is what makes the two-argument operation continuous.

#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <variant>
#include <vector>

#include "core.hpp"
#include "types.hpp"
#include "variants.hpp"

namespace bicyclic {

// ---------------------------------------------------------------------
// Exact rationals for the ray coordinate
// ---------------------------------------------------------------------

//! A reduced fraction with positive denominator.  Kept at fixed 64-bit
//! width with 128-bit intermediates; ray coordinates stay tiny.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) {
      throw InvalidArgumentError("rational denominator must be non-zero");
    }
    constexpr std::int64_t kMin = -0x7fffffffffffffff - 1;
    if (num_ == kMin || den_ == kMin) {
      throw OverflowError("rational component out of range");
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    auto const g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  //! Floor division; exact for the positive values used here.
  std::int64_t floor() const {
    auto q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) {
      --q;
    }
    return q;
  }

  friend Rational operator+(Rational const& x, Rational const& y) {
    return from_wide(static_cast<__int128>(x.num_) * y.den_ +
                         static_cast<__int128>(y.num_) * x.den_,
                     static_cast<__int128>(x.den_) * y.den_);
  }

  friend Rational operator-(Rational const& x, Rational const& y) {
    return from_wide(static_cast<__int128>(x.num_) * y.den_ -
                         static_cast<__int128>(y.num_) * x.den_,
                     static_cast<__int128>(x.den_) * y.den_);
  }

  friend bool operator==(Rational const& x, Rational const& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  friend bool operator<(Rational const& x, Rational const& y) {
    return static_cast<__int128>(x.num_) * y.den_ <
           static_cast<__int128>(y.num_) * x.den_;
  }

  friend bool operator<=(Rational const& x, Rational const& y) {
    return !(y < x);
  }

  friend std::ostream& operator<<(std::ostream& os, Rational const& x) {
    return os << x.num_ << "/" << x.den_;
  }

 private:
  static Rational from_wide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      auto const t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    constexpr __int128 kMax = 0x7fffffffffffffff;
    if (num > kMax || num < -kMax || den > kMax) {
      throw OverflowError("rational arithmetic left the 64-bit range");
    }
    return Rational(static_cast<std::int64_t>(num),
                    static_cast<std::int64_t>(den), already_reduced{});
  }

  struct already_reduced {};
  Rational(std::int64_t num, std::int64_t den, already_reduced)
      : num_(num), den_(den) {}

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational rational_abs(Rational const& x) {
  return x.num() < 0 ? Rational(-x.num(), x.den()) : x;
}

inline constexpr std::uint64_t kMaxRationalEnumIndex = 1'000'000;

//! One step of the Calkin-Wilf recurrence r' = 1 / (2*floor(r) - r + 1);
//! starting from 1/1 this enumerates every positive rational exactly once.
inline Rational calkin_wilf_next(Rational const& r) {
  // 1 / ((2f+1) - p/q) = q / ((2f+1)q - p), already in lowest terms.
  auto const f = r.floor();
  return Rational(r.den(), (2 * f + 1) * r.den() - r.num());
}

//! The i-th positive rational in Calkin-Wilf order, r_0 = 1/1.
inline Rational rational_enum(std::uint64_t i) {
  if (i > kMaxRationalEnumIndex) {
    std::ostringstream msg;
    msg << "rational enumeration index " << i << " exceeds the supported "
        << "bound " << kMaxRationalEnumIndex;
    throw InvalidArgumentError(msg.str());
  }
  Rational r(1, 1);
  for (std::uint64_t k = 0; k < i; ++k) {
    r = calkin_wilf_next(r);
  }
  return r;
}

// ---------------------------------------------------------------------
// Point classification
// ---------------------------------------------------------------------

//! A whole diagonal ray A_base = {(base.a - i, base.b - i) : i >= 0};
//! bases satisfy base.a * base.b = 0 and base.a + base.b <= 0.
template <Integer I>
struct Ray {
  BasicElement<I> base;

  friend bool operator==(Ray const& r, Ray const& s) {
    return r.base == s.base;
  }
};

template <Integer I>
bool is_ray_base(BasicElement<I> const& e) {
  return (e.a == I(0) || e.b == I(0)) && e.a + e.b <= I(0);
}

template <Integer I>
Ray<I> ray(BasicElement<I> const& base) {
  if (!is_ray_base(base)) {
    std::ostringstream msg;
    msg << base << " is not a ray base (needs ab = 0 and a + b <= 0)";
    throw InvalidArgumentError(msg.str());
  }
  return {base};
}

//! The representative of index i on a ray.
template <Integer I>
BasicElement<I> ray_representative(Ray<I> const& r, I const& index) {
  return {r.base.a - index, r.base.b - index};
}

struct IsolatedPoint {
  friend bool operator==(IsolatedPoint, IsolatedPoint) { return true; }
};

//! A non-isolated point: position index on the ray descending from base.
template <Integer I>
struct RayPosition {
  BasicElement<I> base;
  I index{};

  friend bool operator==(RayPosition const& p, RayPosition const& q) {
    return p.base == q.base && p.index == q.index;
  }
};

template <Integer I>
using PointClass = std::variant<IsolatedPoint, RayPosition<I>>;

//! In tau*: isolated iff a > 0 or b > 0; otherwise the point lies on the
//! unique ray with base (a, b) + (t, t) for t = -max(a, b).
template <Integer I>
PointClass<I> classify(BasicElement<I> const& x) {
  if (x.a > I(0) || x.b > I(0)) {
    return IsolatedPoint{};
  }
  I const t = I(0) - max_val(x.a, x.b);
  return RayPosition<I>{{x.a + t, x.b + t}, t};
}

template <Integer I>
bool tau_star_isolated(BasicElement<I> const& x) {
  return std::holds_alternative<IsolatedPoint>(classify(x));
}

// ---------------------------------------------------------------------
// Basic open sets
// ---------------------------------------------------------------------

template <Integer I>
struct Singleton {
  BasicElement<I> point;
};

//! {(base.a - i, base.b - i) : rational_enum(i) in (lo, hi)}.
template <Integer I>
struct RayInterval {
  BasicElement<I> base;
  Rational lo;
  Rational hi;
};

template <Integer I>
using BasicOpen = std::variant<Singleton<I>, RayInterval<I>, Ray<I>>;

template <Integer I>
bool contains(BasicOpen<I> const& open, BasicElement<I> const& x) {
  auto const cls = classify(x);
  if (auto const* s = std::get_if<Singleton<I>>(&open)) {
    return s->point == x;
  }
  if (auto const* r = std::get_if<Ray<I>>(&open)) {
    auto const* pos = std::get_if<RayPosition<I>>(&cls);
    return pos != nullptr && pos->base == r->base;
  }
  auto const& iv = std::get<RayInterval<I>>(open);
  auto const* pos = std::get_if<RayPosition<I>>(&cls);
  if (pos == nullptr || !(pos->base == iv.base)) {
    return false;
  }
  auto const value =
      rational_enum(static_cast<std::uint64_t>(to_int64(pos->index)));
  return iv.lo < value && value < iv.hi;
}

//! A neighbourhood basis at x: the singleton for isolated points, and for
//! a ray point of index i the intervals (r_i - 1/d, r_i + 1/d) for
//! d = 1..resolution.
template <Integer I>
std::vector<BasicOpen<I>> basic_nbhds(BasicElement<I> const& x,
                                      std::size_t resolution) {
  if (resolution == 0) {
    throw InvalidArgumentError("neighbourhood resolution must be positive");
  }
  auto const cls = classify(x);
  if (std::holds_alternative<IsolatedPoint>(cls)) {
    return {Singleton<I>{x}};
  }
  auto const& pos = std::get<RayPosition<I>>(cls);
  auto const value =
      rational_enum(static_cast<std::uint64_t>(to_int64(pos.index)));
  std::vector<BasicOpen<I>> out;
  out.reserve(resolution);
  for (std::size_t d = 1; d <= resolution; ++d) {
    Rational const radius(1, static_cast<std::int64_t>(d));
    out.push_back(RayInterval<I>{pos.base, value - radius, value + radius});
  }
  return out;
}

// ---------------------------------------------------------------------
// The forced-isolation lint
// ---------------------------------------------------------------------

//! Checks a candidate classification against the necessary conditions on
//! any Hausdorff shift-continuous topology: every point with a > 0 or
//! b > 0 must be isolated.  Returns the offending points, in order.
template <Integer I, typename IsIsolatedFn>
std::vector<BasicElement<I>> lint_shift_constraints(IsIsolatedFn&& is_isolated,
                                                    BasicWindow<I> const& w) {
  std::vector<BasicElement<I>> violations;
  for (auto const& x : w.elements()) {
    if ((x.a > I(0) || x.b > I(0)) && !is_isolated(x)) {
      violations.push_back(x);
    }
  }
  return violations;
}

// ---------------------------------------------------------------------
// Collapsing products and continuity certificates
// ---------------------------------------------------------------------

//! Operand of a collapsing product: a full ray, or one concrete point.
template <Integer I>
using CollapseArg = std::variant<Ray<I>, BasicElement<I>>;

//! The sandwich product (in the (0,0) variant) of the operands is a
//! single element no matter which ray representatives are chosen:
//!
//!   ray (a,b)  * ray (c,d)   = (a-b, d-c)
//!   ray (a,b)  * point (c,d) = (a-b, d-c) if c <= 0, else (a-b+c, d)
//!   point (a,b)* ray (c,d)   = (a-b, d-c) if b <= 0, else (a, b-c+d)
//!
//! Each case is the value of (a-b, 0).(c, d) resp. (a, b).(0, d-c).
template <Integer I>
BasicElement<I> collapse_product(CollapseArg<I> const& x,
                                 CollapseArg<I> const& y) {
  auto const* xray = std::get_if<Ray<I>>(&x);
  auto const* yray = std::get_if<Ray<I>>(&y);
  if (xray == nullptr && yray == nullptr) {
    throw NotCollapsibleError(
        "collapse_product needs at least one full-ray operand; the product "
        "of two concrete points is an ordinary sandwich product");
  }
  if (xray != nullptr && yray != nullptr) {
    auto const& p = xray->base;
    auto const& q = yray->base;
    return {p.a - p.b, q.b - q.a};
  }
  if (xray != nullptr) {
    auto const& p = xray->base;
    auto const& q = std::get<BasicElement<I>>(y);
    if (q.a <= I(0)) {
      return {p.a - p.b, q.b - q.a};
    }
    return {p.a - p.b + q.a, q.b};
  }
  auto const& p = std::get<BasicElement<I>>(x);
  auto const& q = yray->base;
  if (p.b <= I(0)) {
    return {p.a - p.b, q.b - q.a};
  }
  return {p.a, p.b - q.a + q.b};
}

template <Integer I>
struct ContinuityCertificate {
  BasicOpen<I> u;  // neighbourhood of the left factor
  BasicOpen<I> v;  // neighbourhood of the right factor
};

//! Joint-continuity witness at (x, y) for a basic open W containing
//! x *_{0,0} y: isolated factors contribute their singleton, ray factors
//! their whole ray; the product over the returned neighbourhoods is the
//! single point x *_{0,0} y, hence inside W.
template <Integer I>
ContinuityCertificate<I> continuity_certificate(BasicElement<I> const& x,
                                                BasicElement<I> const& y,
                                                BasicOpen<I> const& w) {
  BasicVariant<I> const origin{I(0), I(0)};
  auto const product = smul(origin, x, y);
  if (!contains(w, product)) {
    std::ostringstream msg;
    msg << "target open set does not contain the product " << product;
    throw InvalidTargetError(msg.str());
  }
  auto neighbourhood = [](BasicElement<I> const& p) -> BasicOpen<I> {
    auto const cls = classify(p);
    if (auto const* pos = std::get_if<RayPosition<I>>(&cls)) {
      return Ray<I>{pos->base};
    }
    return Singleton<I>{p};
  };
  return {neighbourhood(x), neighbourhood(y)};
}

// ---------------------------------------------------------------------
// Hausdorff separation
// ---------------------------------------------------------------------

//! Disjointness certificate for the pairs produced by separate():
//! distinct singletons, opens on different rays, non-membership, or
//! non-overlapping rational intervals on a common ray.
template <Integer I>
bool provably_disjoint(BasicOpen<I> const& u, BasicOpen<I> const& v) {
  if (auto const* s = std::get_if<Singleton<I>>(&u)) {
    if (auto const* t = std::get_if<Singleton<I>>(&v)) {
      return !(s->point == t->point);
    }
    return !contains(v, s->point);
  }
  if (std::holds_alternative<Singleton<I>>(v)) {
    return provably_disjoint(v, u);
  }
  auto base_of = [](BasicOpen<I> const& open) {
    if (auto const* r = std::get_if<Ray<I>>(&open)) {
      return r->base;
    }
    return std::get<RayInterval<I>>(open).base;
  };
  if (!(base_of(u) == base_of(v))) {
    return true;  // rays are pairwise disjoint
  }
  auto const* iu = std::get_if<RayInterval<I>>(&u);
  auto const* iv = std::get_if<RayInterval<I>>(&v);
  if (iu == nullptr || iv == nullptr) {
    return false;  // a full ray meets anything non-empty on the same ray
  }
  return iu->hi <= iv->lo || iv->hi <= iu->lo;
}

//! Disjoint basic opens around two distinct points; exists for every
//! pair, which is the Hausdorff property of tau* in certificate form.
template <Integer I>
std::pair<BasicOpen<I>, BasicOpen<I>> separate(BasicElement<I> const& x,
                                               BasicElement<I> const& y) {
  if (x == y) {
    throw InvalidArgumentError("separate requires two distinct points");
  }
  auto const cx = classify(x);
  auto const cy = classify(y);
  auto const* px = std::get_if<RayPosition<I>>(&cx);
  auto const* py = std::get_if<RayPosition<I>>(&cy);
  if (px == nullptr && py == nullptr) {
    return {Singleton<I>{x}, Singleton<I>{y}};
  }
  if (px == nullptr || py == nullptr) {
    // One isolated point and one ray point: the singleton misses the ray.
    if (px == nullptr) {
      return {Singleton<I>{x}, BasicOpen<I>(Ray<I>{py->base})};
    }
    return {BasicOpen<I>(Ray<I>{px->base}), Singleton<I>{y}};
  }
  if (!(px->base == py->base)) {
    return {BasicOpen<I>(Ray<I>{px->base}), BasicOpen<I>(Ray<I>{py->base})};
  }
  // Same ray: split at the midpoint of the two (distinct) rationals.
  auto const rx =
      rational_enum(static_cast<std::uint64_t>(to_int64(px->index)));
  auto const ry =
      rational_enum(static_cast<std::uint64_t>(to_int64(py->index)));
  Rational const sum = rx + ry;
  Rational const mid(sum.num(), 2 * sum.den());
  Rational const one(1, 1);
  if (rx < ry) {
    return {RayInterval<I>{px->base, rx - one, mid},
            RayInterval<I>{py->base, mid, ry + one}};
  }
  return {RayInterval<I>{px->base, mid, rx + one},
          RayInterval<I>{py->base, ry - one, mid}};
}

//! Smallest Calkin-Wilf index j != i with |r_j - r_i| < radius, searched
//! up to `bound`.  The enumeration is dense in itself, so a witness
//! exists for every radius at SOME index; how soon depends on the target:
//! a value within 1/64 of an integer needs a continued-fraction digit of
//! at least 63, and the breadth-first enumeration only reaches those near
//! index 2^63.  Around targets with larger denominators witnesses appear
//! within a few thousand steps.
inline std::optional<std::uint64_t> find_enum_value_within(
    std::uint64_t i, Rational const& radius, std::uint64_t bound) {
  Rational const target = rational_enum(i);
  Rational r(1, 1);
  for (std::uint64_t j = 0; j <= bound; ++j) {
    if (j != i && rational_abs(r - target) < radius) {
      return j;
    }
    r = calkin_wilf_next(r);
  }
  return std::nullopt;
}

//! The least |r_j - r_i| over j != i, j <= bound.
inline Rational nearest_enum_distance(std::uint64_t i, std::uint64_t bound) {
  Rational const target = rational_enum(i);
  std::optional<Rational> best;
  Rational r(1, 1);
  for (std::uint64_t j = 0; j <= bound; ++j) {
    if (j != i) {
      auto const d = rational_abs(r - target);
      if (!best.has_value() || d < *best) {
        best = d;
      }
    }
    r = calkin_wilf_next(r);
  }
  return *best;
}

}  // namespace bicyclic

#endif  // BICYCLIC_TOPOLOGY_HPP_
