#ifndef BICYCLIC_CHECKED_INT_HPP_
#define BICYCLIC_CHECKED_INT_HPP_

// The default integer backend: a 64-bit signed integer whose +, - and *
// throw OverflowError instead of wrapping.  Window enumeration at desk
// scale never gets anywhere near the bound, so the checks are only a
// tripwire for misuse, not a cost worth avoiding.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace bicyclic {

//! The arithmetic a coordinate type must support.  Satisfied by
//! CheckedInt64, by Bigint (see bigint.hpp) and by the built-in signed
//! integer types.
template <typename T>
concept Integer = std::regular<T> && std::totally_ordered<T> &&
    std::constructible_from<T, int> && requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
};

class CheckedInt64 {
 public:
  constexpr CheckedInt64() noexcept : value_(0) {}
  constexpr CheckedInt64(long long value) noexcept : value_(value) {}

  constexpr std::int64_t value() const noexcept { return value_; }

  friend CheckedInt64 operator+(CheckedInt64 x, CheckedInt64 y) {
    std::int64_t r;
    if (__builtin_add_overflow(x.value_, y.value_, &r)) {
      throw OverflowError("checked 64-bit addition overflowed");
    }
    return CheckedInt64(r);
  }

  friend CheckedInt64 operator-(CheckedInt64 x, CheckedInt64 y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x.value_, y.value_, &r)) {
      throw OverflowError("checked 64-bit subtraction overflowed");
    }
    return CheckedInt64(r);
  }

  friend CheckedInt64 operator*(CheckedInt64 x, CheckedInt64 y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x.value_, y.value_, &r)) {
      throw OverflowError("checked 64-bit multiplication overflowed");
    }
    return CheckedInt64(r);
  }

  friend CheckedInt64 operator-(CheckedInt64 x) {
    return CheckedInt64(0) - x;
  }

  CheckedInt64& operator+=(CheckedInt64 y) { return *this = *this + y; }
  CheckedInt64& operator-=(CheckedInt64 y) { return *this = *this - y; }
  CheckedInt64& operator*=(CheckedInt64 y) { return *this = *this * y; }
  CheckedInt64& operator++() { return *this += 1; }
  CheckedInt64& operator--() { return *this -= 1; }

  friend constexpr bool operator==(CheckedInt64 x, CheckedInt64 y) noexcept {
    return x.value_ == y.value_;
  }
  friend constexpr std::strong_ordering operator<=>(CheckedInt64 x,
                                                    CheckedInt64 y) noexcept {
    return x.value_ <=> y.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, CheckedInt64 x) {
    return os << x.value_;
  }

 private:
  std::int64_t value_;
};

static_assert(Integer<CheckedInt64>);
static_assert(Integer<std::int64_t>);

//! Narrowing to int64 for indexing and I/O; throws when the coordinate
//! cannot be represented.
inline std::int64_t to_int64(CheckedInt64 x) { return x.value(); }

inline std::int64_t to_int64(std::int64_t x) { return x; }

template <Integer I>
std::int64_t to_int64(I const& x) {
  if (x > I(std::int64_t{0x7fffffffffffffff}) ||
      x < -I(std::int64_t{0x7fffffffffffffff}) - I(1)) {
    throw OverflowError("coordinate does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

template <Integer I>
I abs_val(I const& x) {
  return x < I(0) ? I(0) - x : x;
}

template <Integer I>
I max_val(I const& x, I const& y) {
  return x < y ? y : x;
}

template <Integer I>
I min_val(I const& x, I const& y) {
  return y < x ? y : x;
}

}  // namespace bicyclic

#endif  // BICYCLIC_CHECKED_INT_HPP_
