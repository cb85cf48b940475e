#ifndef BICYCLIC_BIGINT_HPP_
#define BICYCLIC_BIGINT_HPP_

// Arbitrary-precision backend, selected at runtime by the CLI through
// BICYCLIC_INT_MODE=bigint.  Kept in its own header so that programs on
// the default checked 64-bit backend do not pay for the Boost include.

#include <boost/multiprecision/cpp_int.hpp>

#include "checked_int.hpp"

namespace bicyclic {

// et_off: plain value semantics, no expression templates.
using Bigint = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>,
    boost::multiprecision::et_off>;

static_assert(Integer<Bigint>);

inline std::int64_t to_int64(Bigint const& x) {
  if (x > Bigint(std::int64_t{0x7fffffffffffffff}) ||
      x < -Bigint(std::int64_t{0x7fffffffffffffff}) - 1) {
    throw OverflowError("coordinate does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

}  // namespace bicyclic

#endif  // BICYCLIC_BIGINT_HPP_
