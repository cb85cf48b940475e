#ifndef BICYCLIC_SHIFT_ORACLE_HPP_
#define BICYCLIC_SHIFT_ORACLE_HPP_

// Independent verification oracle.  An element (a, b) acts on Z as the
// partial translation x -> x + (b - a) defined on {x : x >= a}; products
// are re-derived as composition of partial maps and Green's relations as
// equality of enumerated principal ideals.  Nothing in this namespace
// consults the closed-form case split of the semigroup operation or the
// closed-form Green descriptions, with one exception: the two-sided
// ideal search is steered by an algebraic solver for the right cofactor,
// and every candidate it suggests is verified here by recomposing the
// product from shifts before it is accepted as a witness.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "core.hpp"
#include "types.hpp"

namespace bicyclic {
namespace oracle {

//! The partial translation x -> x + offset on the domain
//! {x in Z : x >= dom_min}.
template <Integer I>
struct PartialShift {
  I dom_min{};
  I offset{};

  friend bool operator==(PartialShift const& s, PartialShift const& t) {
    return s.dom_min == t.dom_min && s.offset == t.offset;
  }
};

template <Integer I>
PartialShift<I> to_shift(BasicElement<I> const& x) {
  return {x.a, x.b - x.a};
}

template <Integer I>
BasicElement<I> from_shift(PartialShift<I> const& s) {
  return {s.dom_min, s.dom_min + s.offset};
}

//! Composition with the left factor acting first.  The composite domain
//! is {t : t >= x.dom_min and t + x.offset >= y.dom_min} and offsets add.
template <Integer I>
PartialShift<I> compose(PartialShift<I> const& x, PartialShift<I> const& y) {
  return {max_val(x.dom_min, y.dom_min - x.offset), x.offset + y.offset};
}

template <Integer I>
BasicElement<I> oracle_mul(BasicElement<I> const& x, BasicElement<I> const& y) {
  return from_shift(compose(to_shift(x), to_shift(y)));
}

//! Plain or sandwich product, entirely through shift composition.
template <Integer I>
BasicElement<I> oracle_product_in(std::optional<BasicVariant<I>> const& params,
                                  BasicElement<I> const& x,
                                  BasicElement<I> const& y) {
  if (!params.has_value()) {
    return oracle_mul(x, y);
  }
  return oracle_mul(oracle_mul(x, BasicElement<I>{params->m, params->n}), y);
}

namespace detail {

// Bit set over the cells of a square box; principal-ideal signatures are
// compared as whole bitmaps.
using SigBits = std::vector<std::uint64_t>;

}  // namespace detail

//! Brute-force Green's relations over a window.  Construction fixes the
//! enumeration geometry:
//!
//!  * the comparison box is the window widened by 2*(max coordinate
//!    magnitude among window bounds and sandwich coordinates) + 2 —
//!    intermediate elements may lie outside the window itself;
//!  * the sampling box is widened further so that, inside the comparison
//!    box, the enumerated one-sided products are exactly the principal
//!    ideals (the right cofactor reaching (p, q) from e needs coordinates
//!    up to |e| + |p| + twice the sandwich magnitude).
//!
//! R is equality of enumerated right ideals restricted to the comparison
//! box, L dually, H their conjunction, D a search for a chain witness z
//! with x L z R y over the comparison box, and J mutual membership of the
//! enumerated two-sided ideals.
template <Integer I>
class BruteGreenTable {
 public:
  BruteGreenTable(std::optional<BasicVariant<I>> params, BasicWindow<I> w,
                  std::int64_t guard = kDefaultWideningGuard)
      : params_(std::move(params)),
        window_(w),
        cbox_(BasicWindow<I>(I(0), I(0))) {
    I mag = max_val(abs_val(w.lo()), abs_val(w.hi()));
    if (params_.has_value()) {
      mag = max_val(mag, abs_val(params_->m));
      mag = max_val(mag, abs_val(params_->n));
    }
    I const sandwich_mag =
        params_.has_value()
            ? max_val(abs_val(params_->m), abs_val(params_->n))
            : I(0);
    I const delta = I(2) * mag + I(2);
    cbox_ = w.widened(delta);
    I const cbox_mag = max_val(abs_val(cbox_.lo()), abs_val(cbox_.hi()));
    I const sample_reach = I(5) * cbox_mag + I(4) * sandwich_mag + I(2);
    sample_lo_ = min_val(w.lo(), I(0) - sample_reach);
    sample_hi_ = max_val(w.hi(), sample_reach);
    if (to_int64(max_val(abs_val(sample_lo_), sample_hi_)) > guard) {
      std::ostringstream msg;
      msg << "brute-force Green enumeration on " << w << " needs sampling up "
          << "to " << sample_hi_ << " > guard " << guard;
      throw WindowTooSmallError(msg.str());
    }
  }

  BasicWindow<I> const& comparison_box() const noexcept { return cbox_; }

  bool relation(GreenRel rel, BasicElement<I> const& x,
                BasicElement<I> const& y) {
    if (!window_.contains(x) || !window_.contains(y)) {
      std::ostringstream msg;
      msg << "brute_green operands " << x << ", " << y << " must lie in "
          << window_;
      throw InvalidArgumentError(msg.str());
    }
    switch (rel) {
      case GreenRel::R:
        ensure_signatures();
        return r_class_[cell(x)] == r_class_[cell(y)];
      case GreenRel::L:
        ensure_signatures();
        return l_class_[cell(x)] == l_class_[cell(y)];
      case GreenRel::H:
        ensure_signatures();
        return r_class_[cell(x)] == r_class_[cell(y)] &&
               l_class_[cell(x)] == l_class_[cell(y)];
      case GreenRel::D:
        ensure_signatures();
        // z with x L z and z R y, searched over the comparison box.
        return d_pairs_.count({l_class_[cell(x)], r_class_[cell(y)]}) > 0;
      case GreenRel::J:
        return two_sided_member(y, x) && two_sided_member(x, y);
    }
    return false;
  }

 private:
  BasicElement<I> prod(BasicElement<I> const& x, BasicElement<I> const& y) {
    return oracle_product_in(params_, x, y);
  }

  std::size_t cell(BasicElement<I> const& e) const {
    auto const side = cbox_.side();
    auto const row = static_cast<std::size_t>(to_int64(e.a - cbox_.lo()));
    auto const col = static_cast<std::size_t>(to_int64(e.b - cbox_.lo()));
    return row * side + col;
  }

  void ensure_signatures() {
    if (sigs_ready_) {
      return;
    }
    auto const cells = cbox_.elements();
    auto const side = cbox_.side();
    auto const words = (side * side + 63) / 64;
    r_class_.assign(side * side, -1);
    l_class_.assign(side * side, -1);

    std::map<detail::SigBits, int> r_ids;
    std::map<detail::SigBits, int> l_ids;
    detail::SigBits right_sig(words);
    detail::SigBits left_sig(words);
    for (auto const& e : cells) {
      std::fill(right_sig.begin(), right_sig.end(), 0);
      std::fill(left_sig.begin(), left_sig.end(), 0);
      auto mark = [&](detail::SigBits& sig, BasicElement<I> const& p) {
        if (cbox_.contains(p)) {
          auto const i = cell(p);
          sig[i / 64] |= std::uint64_t{1} << (i % 64);
        }
      };
      mark(right_sig, e);  // the ideal of S^1: {e} adjoined
      mark(left_sig, e);
      for (I sa = sample_lo_; sa <= sample_hi_; sa += I(1)) {
        for (I sb = sample_lo_; sb <= sample_hi_; sb += I(1)) {
          BasicElement<I> const s{sa, sb};
          mark(right_sig, prod(e, s));
          mark(left_sig, prod(s, e));
        }
      }
      auto const e_cell = cell(e);
      r_class_[e_cell] =
          r_ids.emplace(right_sig, static_cast<int>(r_ids.size()))
              .first->second;
      l_class_[e_cell] =
          l_ids.emplace(left_sig, static_cast<int>(l_ids.size()))
              .first->second;
    }
    for (auto const& z : cells) {
      d_pairs_.insert({l_class_[cell(z)], r_class_[cell(z)]});
    }
    sigs_ready_ = true;
  }

  //! Membership of t in the enumerated two-sided ideal
  //! {x} u xS u Sx u SxS.  The double-product part scans the left factor
  //! and solves for the right cofactor; solutions are only trusted after
  //! the full product is recomposed from shifts and compared with t.
  bool two_sided_member(BasicElement<I> const& t, BasicElement<I> const& x) {
    if (t == x) {
      return true;
    }
    BasicElement<I> const conj =
        params_.has_value()
            ? prod(prod(BasicElement<I>{params_->m, params_->n}, x),
                   BasicElement<I>{params_->m, params_->n})
            : x;
    I mag = max_val(abs_val(window_.lo()), abs_val(window_.hi()));
    mag = max_val(mag, max_val(abs_val(conj.a), abs_val(conj.b)));
    I const beta = mag + I(2);
    I const lo = I(0) - beta;

    for (I sa = lo; sa <= beta; sa += I(1)) {
      for (I sb = lo; sb <= beta; sb += I(1)) {
        BasicElement<I> const s{sa, sb};
        if (prod(x, s) == t || prod(s, x) == t) {
          return true;
        }
        BasicElement<I> const r = prod(s, x);
        BasicElement<I> const rho =
            params_.has_value()
                ? oracle_mul(r, BasicElement<I>{params_->m, params_->n})
                : r;
        for (auto const& u : bicyclic::detail::solve_right_cofactor(
                 rho, t, lo, beta)) {
          if (prod(r, u) == t) {
            return true;
          }
        }
      }
    }
    return false;
  }

  std::optional<BasicVariant<I>> params_;
  BasicWindow<I> window_;
  BasicWindow<I> cbox_;
  I sample_lo_{};
  I sample_hi_{};

  bool sigs_ready_ = false;
  std::vector<int> r_class_;
  std::vector<int> l_class_;
  std::set<std::pair<int, int>> d_pairs_;
};

//! One-shot form; for many queries over one window construct a
//! BruteGreenTable once instead.
template <Integer I>
bool brute_green(GreenRel rel, std::optional<BasicVariant<I>> const& params,
                 BasicElement<I> const& x, BasicElement<I> const& y,
                 BasicWindow<I> const& w,
                 std::int64_t guard = kDefaultWideningGuard) {
  BruteGreenTable<I> table(params, w, guard);
  return table.relation(rel, x, y);
}

}  // namespace oracle
}  // namespace bicyclic

#endif  // BICYCLIC_SHIFT_ORACLE_HPP_
