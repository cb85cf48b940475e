#ifndef BICYCLIC_ERRORS_HPP_
#define BICYCLIC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bicyclic {

//! Base class for every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string const& what) : std::runtime_error(what) {}
};

//! Checked integer arithmetic left the representable range.
class OverflowError : public Error {
 public:
  explicit OverflowError(std::string const& what) : Error(what) {}
};

//! A value violated a documented precondition or type invariant.
class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(std::string const& what) : Error(what) {}
};

//! An operand of the natural partial order is not an idempotent.
//! which() names the offending argument ("left" or "right").
class NotIdempotentError : public Error {
 public:
  NotIdempotentError(std::string which, std::string const& what)
      : Error(what), which_(std::move(which)) {}

  std::string const& which() const noexcept { return which_; }

 private:
  std::string which_;
};

//! Two idempotents belong to different sandwich variants.
class VariantMismatchError : public Error {
 public:
  explicit VariantMismatchError(std::string const& what) : Error(what) {}
};

//! Padding isomorphisms require a positive padding amount.
class InvalidPaddingError : public Error {
 public:
  explicit InvalidPaddingError(std::string const& what) : Error(what) {}
};

//! A brute-force enumeration would have to widen a window beyond its
//! configured guard bound.
class WindowTooSmallError : public Error {
 public:
  explicit WindowTooSmallError(std::string const& what) : Error(what) {}
};

//! A closure computation exceeded its element budget.
class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(std::string const& what) : Error(what) {}
};

//! collapse_product needs at least one full-ray operand.
class NotCollapsibleError : public Error {
 public:
  explicit NotCollapsibleError(std::string const& what) : Error(what) {}
};

//! The target open set of a continuity certificate does not contain the
//! product it is supposed to witness.
class InvalidTargetError : public Error {
 public:
  explicit InvalidTargetError(std::string const& what) : Error(what) {}
};

}  // namespace bicyclic

#endif  // BICYCLIC_ERRORS_HPP_
