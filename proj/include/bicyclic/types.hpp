#ifndef BICYCLIC_TYPES_HPP_
#define BICYCLIC_TYPES_HPP_

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "checked_int.hpp"
#include "errors.hpp"

namespace bicyclic {

//! A point (a, b) of the extended bicyclic semigroup; the carrier is all
//! of Z x Z, so any pair of coordinates is valid.
template <Integer I>
struct BasicElement {
  I a{};
  I b{};

  friend bool operator==(BasicElement const& x, BasicElement const& y) {
    return x.a == y.a && x.b == y.b;
  }

  // Lexicographic; used for deterministic set ordering everywhere.
  friend bool operator<(BasicElement const& x, BasicElement const& y) {
    if (x.a != y.a) {
      return x.a < y.a;
    }
    return x.b < y.b;
  }

  friend std::ostream& operator<<(std::ostream& os, BasicElement const& x) {
    return os << "(" << x.a << "," << x.b << ")";
  }
};

//! A sandwich parameter pair (m, n): x *_{m,n} y = x . (m, n) . y.
template <Integer I>
struct BasicVariant {
  I m{};
  I n{};

  friend bool operator==(BasicVariant const& u, BasicVariant const& v) {
    return u.m == v.m && u.n == v.n;
  }

  friend bool operator<(BasicVariant const& u, BasicVariant const& v) {
    if (u.m != v.m) {
      return u.m < v.m;
    }
    return u.n < v.n;
  }

  friend std::ostream& operator<<(std::ostream& os, BasicVariant const& v) {
    return os << "(" << v.m << "," << v.n << ")";
  }
};

//! The inclusive square [lo, hi] x [lo, hi] used as a finite enumeration
//! domain when machine-checking laws.
template <Integer I>
class BasicWindow {
 public:
  BasicWindow(I lo, I hi) : lo_(lo), hi_(hi) {
    if (hi_ < lo_) {
      std::ostringstream msg;
      msg << "window requires lo <= hi, got [" << lo_ << "," << hi_ << "]";
      throw InvalidArgumentError(msg.str());
    }
  }

  I const& lo() const noexcept { return lo_; }
  I const& hi() const noexcept { return hi_; }

  bool contains(I const& v) const { return lo_ <= v && v <= hi_; }

  bool contains(BasicElement<I> const& e) const {
    return contains(e.a) && contains(e.b);
  }

  //! Side length hi - lo + 1 as a plain size; throws if absurdly large.
  std::size_t side() const {
    std::int64_t const w = to_int64(hi_ - lo_);
    return static_cast<std::size_t>(w) + 1;
  }

  //! All points of the square in lexicographic order.
  std::vector<BasicElement<I>> elements() const {
    std::vector<BasicElement<I>> out;
    out.reserve(side() * side());
    for (I a = lo_; a <= hi_; a += I(1)) {
      for (I b = lo_; b <= hi_; b += I(1)) {
        out.push_back({a, b});
      }
    }
    return out;
  }

  //! The window grown by delta on every side.
  BasicWindow widened(I const& delta) const {
    return BasicWindow(lo_ - delta, hi_ + delta);
  }

  friend bool operator==(BasicWindow const& v, BasicWindow const& w) {
    return v.lo_ == w.lo_ && v.hi_ == w.hi_;
  }

  friend std::ostream& operator<<(std::ostream& os, BasicWindow const& w) {
    return os << "[" << w.lo_ << "," << w.hi_ << "]";
  }

 private:
  I lo_;
  I hi_;
};

using Element = BasicElement<CheckedInt64>;
using Variant = BasicVariant<CheckedInt64>;
using Window = BasicWindow<CheckedInt64>;

template <typename T>
std::string to_display_string(T const& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace bicyclic

#endif  // BICYCLIC_TYPES_HPP_
