#ifndef BICYCLIC_VERIFY_HPP_
#define BICYCLIC_VERIFY_HPP_

// The machine-checkable law suites.  Every algebraic and topological
// statement the library implements in closed form is re-verified here by
// exhaustive enumeration on integer windows, against the shift oracle
// where one exists.  All tolerances are exact; a suite passes only with
// zero failures.
//
// Each suite derives its enumeration windows from a single half-width
// knob L (VerifyOptions::window); the defaults at L = 6 are the pinned
// verification geometry.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "core.hpp"
#include "generation.hpp"
#include "morphisms.hpp"
#include "shift_oracle.hpp"
#include "topology.hpp"
#include "types.hpp"
#include "variants.hpp"

namespace bicyclic {

struct VerifyOptions {
  std::int64_t window = 6;  // half-width knob for the window-parametric suites
  unsigned jobs = 1;
  std::uint64_t seed = 0x5eed1e5;
  std::size_t max_failure_samples = 5;
};

struct SuiteResult {
  std::string key;
  std::string title;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double seconds = 0.0;
  std::vector<std::string> failure_samples;

  bool passed() const { return failures == 0 && checks > 0; }
};

namespace detail {

//! Failure-collecting assertion sink.  The description callback runs only
//! when the check fails, so hot loops stay cheap.
class Law {
 public:
  Law(SuiteResult& result, std::size_t max_samples)
      : result_(result), max_samples_(max_samples) {}

  template <typename DescribeFn>
  void require(bool ok, DescribeFn&& describe) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      if (result_.failure_samples.size() < max_samples_) {
        result_.failure_samples.push_back(describe());
      }
    }
  }

 private:
  SuiteResult& result_;
  std::size_t max_samples_;
};

inline void merge_into(SuiteResult& total, SuiteResult const& part,
                       std::size_t max_samples) {
  total.checks += part.checks;
  total.failures += part.failures;
  for (auto const& s : part.failure_samples) {
    if (total.failure_samples.size() < max_samples) {
      total.failure_samples.push_back(s);
    }
  }
}

//! Runs work(task, local_result) for task = 0..tasks-1, fanned out over
//! `jobs` threads; per-task results merge in task order, so the outcome
//! does not depend on scheduling.
template <typename WorkFn>
void for_each_task(std::size_t tasks, unsigned jobs, SuiteResult& total,
                   std::size_t max_samples, WorkFn work) {
  if (tasks == 0) {
    return;
  }
  unsigned const workers =
      std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks)));
  if (workers == 1) {
    for (std::size_t t = 0; t < tasks; ++t) {
      SuiteResult local;
      work(t, local);
      merge_into(total, local, max_samples);
    }
    return;
  }
  std::vector<SuiteResult> locals(tasks);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned j = 0; j < workers; ++j) {
    threads.emplace_back([&] {
      for (std::size_t t = next++; t < tasks; t = next++) {
        work(t, locals[t]);
      }
    });
  }
  for (auto& th : threads) {
    th.join();
  }
  for (auto const& local : locals) {
    merge_into(total, local, max_samples);
  }
}

template <Integer I>
std::vector<BasicVariant<I>> variant_box(std::int64_t half_width) {
  std::vector<BasicVariant<I>> out;
  for (std::int64_t m = -half_width; m <= half_width; ++m) {
    for (std::int64_t n = -half_width; n <= half_width; ++n) {
      out.push_back({I(m), I(n)});
    }
  }
  return out;
}

//! The four sandwich variants pinned for the idempotent, omega-chain and
//! Green suites.
template <Integer I>
std::vector<BasicVariant<I>> pinned_variants() {
  return {{I(0), I(0)}, {I(2), I(-1)}, {I(-1), I(2)}, {I(-3), I(-3)}};
}

}  // namespace detail

// ---------------------------------------------------------------------
// Suite 1: associativity and oracle agreement for the plain product,
// with the difference identity asserted on every product formed.
// ---------------------------------------------------------------------
template <Integer I>
void suite_assoc_oracle(VerifyOptions const& opts, SuiteResult& result) {
  BasicWindow<I> const w(I(-opts.window), I(opts.window));
  auto const els = w.elements();
  std::size_t const n = els.size();

  std::vector<BasicElement<I>> products(n * n);
  {
    detail::Law law(result, opts.max_failure_samples);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const check =
            diff_invariant_check<I>(std::nullopt, els[i], els[j]);
        products[i * n + j] = check.product;
        law.require(check.holds, [&] {
          return "difference identity failed at " +
                 to_display_string(els[i]) + "." + to_display_string(els[j]);
        });
        law.require(oracle::oracle_mul(els[i], els[j]) == check.product, [&] {
          return "oracle product disagrees at " + to_display_string(els[i]) +
                 "." + to_display_string(els[j]);
        });
      }
    }
  }

  detail::for_each_task(
      n, opts.jobs, result, opts.max_failure_samples,
      [&](std::size_t i, SuiteResult& local) {
        detail::Law law(local, opts.max_failure_samples);
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            auto const left =
                diff_invariant_check<I>(std::nullopt, products[i * n + j],
                                        els[k]);
            auto const right =
                diff_invariant_check<I>(std::nullopt, els[i],
                                        products[j * n + k]);
            law.require(left.product == right.product, [&] {
              return "associativity failed at " + to_display_string(els[i]) +
                     "," + to_display_string(els[j]) + "," +
                     to_display_string(els[k]);
            });
            law.require(left.holds && right.holds, [&] {
              return "difference identity failed inside triple " +
                     to_display_string(els[i]) + "," +
                     to_display_string(els[j]) + "," +
                     to_display_string(els[k]);
            });
          }
        }
      });
}

// ---------------------------------------------------------------------
// Suite 2: the interassociativity identities linking the plain product
// with every sandwich product in a variant box.
// ---------------------------------------------------------------------
template <Integer I>
void suite_interassoc(VerifyOptions const& opts, SuiteResult& result) {
  std::int64_t const half = std::max<std::int64_t>(1, opts.window - 2);
  BasicWindow<I> const w(I(-half), I(half));
  auto const els = w.elements();
  std::size_t const n = els.size();
  auto const variants = detail::variant_box<I>(2);

  std::vector<BasicElement<I>> plain(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      plain[i * n + j] = mul(els[i], els[j]);
    }
  }

  detail::for_each_task(
      variants.size(), opts.jobs, result, opts.max_failure_samples,
      [&](std::size_t vi, SuiteResult& local) {
        auto const& v = variants[vi];
        detail::Law law(local, opts.max_failure_samples);
        std::vector<BasicElement<I>> sandwich(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            auto const check = diff_invariant_check<I>(v, els[i], els[j]);
            sandwich[i * n + j] = check.product;
            law.require(check.holds, [&] {
              return "difference identity failed at " +
                     to_display_string(els[i]) + "*" +
                     to_display_string(els[j]) + " in variant " +
                     to_display_string(v);
            });
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
              bool const first =
                  mul(els[i], sandwich[j * n + k]) ==
                  smul(v, plain[i * n + j], els[k]);
              bool const second =
                  smul(v, els[i], plain[j * n + k]) ==
                  mul(sandwich[i * n + j], els[k]);
              law.require(first && second, [&] {
                return "interassociativity failed at " +
                       to_display_string(els[i]) + "," +
                       to_display_string(els[j]) + "," +
                       to_display_string(els[k]) + " in variant " +
                       to_display_string(v);
              });
            }
          }
        }
      });
}

// ---------------------------------------------------------------------
// Suite 3: diagonal translations are automorphisms and form the group
// Z(+) under composition.
// ---------------------------------------------------------------------
template <Integer I>
void suite_automorphisms(VerifyOptions const& opts, SuiteResult& result) {
  BasicWindow<I> const w(I(-opts.window), I(opts.window));
  auto const els = w.elements();
  detail::Law law(result, opts.max_failure_samples);

  for (std::int64_t k = -5; k <= 5; ++k) {
    BasicAutomorphism<I> const h{I(k)};
    for (auto const& x : els) {
      for (auto const& y : els) {
        law.require(
            aut_apply(h, mul(x, y)) == mul(aut_apply(h, x), aut_apply(h, y)),
            [&] {
              return "translation by " + std::to_string(k) +
                     " is not a homomorphism at " + to_display_string(x) +
                     "," + to_display_string(y);
            });
      }
    }
  }

  BasicAutomorphism<I> const identity{I(0)};
  for (auto const& x : els) {
    law.require(aut_apply(identity, x) == x, [&] {
      return "identity automorphism moved " + to_display_string(x);
    });
  }

  for (std::int64_t k1 = -5; k1 <= 5; ++k1) {
    BasicAutomorphism<I> const h1{I(k1)};
    law.require(aut_compose(h1, aut_invert(h1)) == identity &&
                    aut_compose(aut_invert(h1), h1) == identity,
                [&] {
                  return "inverse law failed for shift " + std::to_string(k1);
                });
    for (std::int64_t k2 = -5; k2 <= 5; ++k2) {
      BasicAutomorphism<I> const h2{I(k2)};
      law.require(aut_compose(h1, h2) == aut_compose(h2, h1) &&
                      aut_compose(h1, h2).shift == I(k1 + k2),
                  [&] {
                    return "composition law failed for shifts " +
                           std::to_string(k1) + "," + std::to_string(k2);
                  });
      for (auto const& x : els) {
        law.require(aut_apply(aut_compose(h1, h2), x) ==
                        aut_apply(h1, aut_apply(h2, x)),
                    [&] {
                      return "pointwise composition failed at " +
                             to_display_string(x);
                    });
      }
    }
  }
}

// ---------------------------------------------------------------------
// Suite 4: the bicyclic monoid embeds onto each corner {(i,j) : i,j >= k}.
// ---------------------------------------------------------------------
template <Integer I>
void suite_embedding(VerifyOptions const& opts, SuiteResult& result) {
  detail::Law law(result, opts.max_failure_samples);
  std::int64_t const max_exp = 8;

  law.require(bicyclic_mul(bicyclic_element(I(0), I(1)),
                           bicyclic_element(I(1), I(0))) ==
                  bicyclic_element(I(0), I(0)),
              [] { return std::string("pq = 1 failed"); });

  for (std::int64_t k : {std::int64_t{-3}, std::int64_t{0}, std::int64_t{2}}) {
    std::vector<BasicBicyclicElement<I>> monoid;
    for (std::int64_t i = 0; i <= max_exp; ++i) {
      for (std::int64_t j = 0; j <= max_exp; ++j) {
        monoid.push_back(bicyclic_element(I(i), I(j)));
      }
    }

    std::set<BasicElement<I>> image;
    for (auto const& u : monoid) {
      image.insert(embed_bicyclic(I(k), u));
    }
    law.require(image.size() == monoid.size(), [&] {
      return "embedding at k=" + std::to_string(k) + " is not injective";
    });

    // Exactness: within [k-3, k+8]^2 the image is the corner >= k.
    BasicWindow<I> const window(I(k - 3), I(k + max_exp));
    for (auto const& p : window.elements()) {
      bool const in_corner = p.a >= I(k) && p.b >= I(k);
      law.require(image.count(p) == (in_corner ? 1u : 0u), [&] {
        return "image mismatch at " + to_display_string(p) +
               " for k=" + std::to_string(k);
      });
    }

    for (auto const& u : monoid) {
      for (auto const& v : monoid) {
        law.require(embed_bicyclic(I(k), bicyclic_mul(u, v)) ==
                        mul(embed_bicyclic(I(k), u), embed_bicyclic(I(k), v)),
                    [&] {
                      return "embedding at k=" + std::to_string(k) +
                             " is not a homomorphism at " +
                             to_display_string(u) + "," + to_display_string(v);
                    });
      }
    }
  }
}

// ---------------------------------------------------------------------
// Suite 5: the idempotents of a variant are exactly (n+i, m+i), i >= 0.
// ---------------------------------------------------------------------
template <Integer I>
void suite_idempotents(VerifyOptions const& opts, SuiteResult& result) {
  BasicWindow<I> const w(I(-(opts.window + 2)), I(opts.window + 2));
  detail::Law law(result, opts.max_failure_samples);
  for (auto const& v : detail::pinned_variants<I>()) {
    std::set<BasicElement<I>> expected;
    for (I i(0);; i += I(1)) {
      BasicElement<I> const e{v.n + i, v.m + i};
      if (!w.contains(e)) {
        if (e.a > w.hi() && e.b > w.hi()) {
          break;
        }
        continue;
      }
      expected.insert(e);
    }
    for (auto const& x : w.elements()) {
      bool const fixed_by_square = smul(v, x, x) == x;
      law.require(fixed_by_square == (expected.count(x) == 1), [&] {
        return "idempotent scan mismatch at " + to_display_string(x) +
               " in variant " + to_display_string(v);
      });
      law.require(is_idempotent(v, x) == fixed_by_square, [&] {
        return "arithmetic idempotent test mismatch at " +
               to_display_string(x) + " in variant " + to_display_string(v);
      });
    }
    auto const listed = idempotents(v, 8);
    for (std::size_t i = 0; i < listed.size(); ++i) {
      law.require(listed[i].element() ==
                      BasicElement<I>{v.n + I(static_cast<long long>(i)),
                                      v.m + I(static_cast<long long>(i))},
                  [&] {
                    return "idempotent list wrong at index " +
                           std::to_string(i) + " in variant " +
                           to_display_string(v);
                  });
    }
  }
}

// ---------------------------------------------------------------------
// Suite 6: the idempotent chain is an omega-chain isomorphic to
// (N_0, max) and the two order definitions agree.
// ---------------------------------------------------------------------
template <Integer I>
void suite_omega_chain(VerifyOptions const& opts, SuiteResult& result) {
  detail::Law law(result, opts.max_failure_samples);
  for (auto const& v : detail::pinned_variants<I>()) {
    auto const product = [&](BasicElement<I> const& x,
                             BasicElement<I> const& y) {
      return smul(v, x, y);
    };
    auto const chain = idempotents(v, 33);
    for (auto const& ei : chain) {
      for (auto const& ej : chain) {
        auto const expected =
            chain[static_cast<std::size_t>(to_int64(
                max_val(ei.index, ej.index)))];
        law.require(smul(v, ei.element(), ej.element()) == expected.element(),
                    [&] {
                      return "max rule failed at indices " +
                             to_display_string(ei.index) + "," +
                             to_display_string(ej.index) + " in variant " +
                             to_display_string(v);
                    });
        bool const leq = omega_leq(v, ei, ej);
        law.require(leq == (ej.index <= ei.index), [&] {
          return "omega order mismatch at indices " +
                 to_display_string(ei.index) + "," +
                 to_display_string(ej.index);
        });
        law.require(
            leq == natural_leq<I>(product, ei.element(), ej.element()), [&] {
              return "natural order disagrees with omega order at indices " +
                     to_display_string(ei.index) + "," +
                     to_display_string(ej.index);
            });
      }
    }
  }
}

// ---------------------------------------------------------------------
// Suite 7: closed-form Green's relations match the brute-force ideal
// comparisons, on the variants and on the plain semigroup.
// ---------------------------------------------------------------------
template <Integer I>
void suite_green(VerifyOptions const& opts, SuiteResult& result) {
  std::int64_t const half = std::max<std::int64_t>(1, opts.window - 1);
  auto const variants = detail::pinned_variants<I>();
  constexpr GreenRel kRels[] = {GreenRel::R, GreenRel::L, GreenRel::H,
                                GreenRel::D, GreenRel::J};

  detail::for_each_task(
      variants.size(), opts.jobs, result, opts.max_failure_samples,
      [&](std::size_t vi, SuiteResult& local) {
        auto const& v = variants[vi];
        detail::Law law(local, opts.max_failure_samples);
        BasicWindow<I> const w(I(-half), I(half));
        oracle::BruteGreenTable<I> table(std::optional<BasicVariant<I>>(v), w);
        auto const els = w.elements();
        for (auto const& x : els) {
          for (auto const& y : els) {
            for (auto const rel : kRels) {
              law.require(
                  green_v(rel, v, x, y) == table.relation(rel, x, y), [&] {
                    return std::string("Green ") + green_rel_name(rel) +
                           " mismatch at " + to_display_string(x) + "," +
                           to_display_string(y) + " in variant " +
                           to_display_string(v);
                  });
            }
          }
        }
      });

  // The plain semigroup against the same oracle.
  detail::Law law(result, opts.max_failure_samples);
  BasicWindow<I> const w(I(-3), I(3));
  oracle::BruteGreenTable<I> plain(std::nullopt, w);
  for (auto const& x : w.elements()) {
    for (auto const& y : w.elements()) {
      for (auto const rel : kRels) {
        law.require(green_cz(rel, x, y) == plain.relation(rel, x, y), [&] {
          return std::string("plain Green ") + green_rel_name(rel) +
                 " mismatch at " + to_display_string(x) + "," +
                 to_display_string(y);
        });
      }
    }
  }
}

// ---------------------------------------------------------------------
// Suite 8: the canonical isomorphism between any two variants.
// ---------------------------------------------------------------------
template <Integer I>
void suite_iso(VerifyOptions const& opts, SuiteResult& result) {
  std::int64_t const half = std::max<std::int64_t>(1, opts.window - 1);
  BasicWindow<I> const w(I(-half), I(half));
  auto const els = w.elements();
  BasicVariant<I> const origin{I(0), I(0)};
  detail::Law law(result, opts.max_failure_samples);

  for (std::int64_t m = -3; m <= 3; ++m) {
    for (std::int64_t n = -3; n <= 3; ++n) {
      auto const f = canonical_iso(I(m), I(n));
      BasicVariant<I> const target{I(m), I(n)};
      law.require(f.shift_a == I(n) && f.shift_b == I(m), [&] {
        return "closed form mismatch for variant (" + std::to_string(m) +
               "," + std::to_string(n) + ")";
      });

      std::set<BasicElement<I>> image;
      for (auto const& x : els) {
        image.insert(f.forward(x));
        law.require(f.backward(f.forward(x)) == x, [&] {
          return "backward . forward moved " + to_display_string(x);
        });
      }
      law.require(image.size() == els.size(), [&] {
        return "forward map not injective for variant (" + std::to_string(m) +
               "," + std::to_string(n) + ")";
      });

      for (auto const& x : els) {
        for (auto const& y : els) {
          law.require(f.forward(smul(origin, x, y)) ==
                          smul(target, f.forward(x), f.forward(y)),
                      [&] {
                        return "homomorphism failed at " +
                               to_display_string(x) + "," +
                               to_display_string(y) + " into variant (" +
                               std::to_string(m) + "," + std::to_string(n) +
                               ")";
                      });
        }
      }

      for (I i(0); i <= I(32); i += I(1)) {
        law.require(f.forward({i, i}) == BasicElement<I>{I(n) + i, I(m) + i},
                    [&] {
                      return "idempotent chain transport failed at index " +
                             to_display_string(i) + " for variant (" +
                             std::to_string(m) + "," + std::to_string(n) + ")";
                    });
      }
    }
  }
}

// ---------------------------------------------------------------------
// Suite 9: non-finite-generation witnesses against randomized closures.
// ---------------------------------------------------------------------
template <Integer I>
void suite_generation(VerifyOptions const& opts, SuiteResult& result) {
  // Rounds are seeded individually, so the outcome is independent of the
  // worker count.
  detail::for_each_task(200, opts.jobs, result, opts.max_failure_samples,
                        [&](std::size_t round, SuiteResult& local) {
    detail::Law law(local, opts.max_failure_samples);
    std::mt19937_64 rng(opts.seed + round);
    auto const draw_coord = [&rng]() {
      return static_cast<long long>(rng() % 21) - 10;  // uniform in [-10, 10]
    };

    std::size_t const size = 1 + static_cast<std::size_t>(rng() % 5);
    std::vector<BasicElement<I>> gens;
    for (std::size_t g = 0; g < size; ++g) {
      gens.push_back({I(draw_coord()), I(draw_coord())});
    }

    std::int64_t lo = to_int64(gens.front().a);
    std::int64_t hi = lo;
    for (auto const& e : gens) {
      lo = std::min(lo, std::min(to_int64(e.a), to_int64(e.b)));
      hi = std::max(hi, std::max(to_int64(e.a), to_int64(e.b)));
    }
    BasicWindow<I> const guard(I(lo - 6), I(hi + 6));

    // Plain mode: the witness sits below the least generator corner.
    {
      auto const gs = make_gen_set<I>(gens);
      auto const cw = witness_cz(gs);
      auto const closed = closure(gs, guard);
      law.require(closed.found.count(cw.witness) == 0, [&] {
        return "plain witness " + to_display_string(cw.witness) +
               " was generated (round " + std::to_string(round) + ")";
      });
      bool contained = true;
      for (auto const& e : closed.found) {
        contained = contained && e.a >= cw.corner && e.b >= cw.corner;
      }
      law.require(contained, [&] {
        return "closure left the corner bound in round " +
               std::to_string(round);
      });

      // Closing under inverses keeps the corner, so the same witness
      // also certifies non-generation as an inverse semigroup.
      auto with_inverses = gens;
      for (auto const& e : gens) {
        with_inverses.push_back(inverse(e));
      }
      auto const gs_inv = make_gen_set<I>(with_inverses);
      law.require(min_corner(gs_inv) == cw.corner, [&] {
        return "inverses changed the corner in round " +
               std::to_string(round);
      });
      auto const closed_inv = closure(gs_inv, guard);
      law.require(closed_inv.found.count(cw.witness) == 0, [&] {
        return "inverse-closure generated the witness in round " +
               std::to_string(round);
      });
    }

    // Variant mode: the witness sits below both ideal floors.
    {
      BasicVariant<I> const v{I(draw_coord()), I(draw_coord())};
      auto const gs = make_gen_set<I>(gens, v);
      auto const vw = witness_variant(gs);

      for (std::size_t len = 2; len <= 4; ++len) {
        // All products of exactly `len` generators.
        std::vector<BasicElement<I>> chains = gens;
        for (std::size_t step = 1; step < len; ++step) {
          std::vector<BasicElement<I>> grown;
          grown.reserve(chains.size() * gens.size());
          for (auto const& c : chains) {
            for (auto const& g : gens) {
              grown.push_back(smul(v, c, g));
            }
          }
          chains = std::move(grown);
        }
        bool floors_hold = true;
        for (auto const& c : chains) {
          floors_hold = floors_hold && c.a >= vw.floors.xstar &&
                        c.b >= vw.floors.ystar;
        }
        law.require(floors_hold, [&] {
          return "a length-" + std::to_string(len) +
                 " product broke the floor bounds in round " +
                 std::to_string(round);
        });
      }

      auto const closed = closure(gs, guard);
      law.require(closed.found.count(vw.witness) == 0, [&] {
        return "variant witness " + to_display_string(vw.witness) +
               " was generated (round " + std::to_string(round) + ")";
      });
    }
  });
}

// ---------------------------------------------------------------------
// Suite 10: the difference identity over the full product enumerations.
// ---------------------------------------------------------------------
template <Integer I>
void suite_diff_invariant(VerifyOptions const& opts, SuiteResult& result) {
  detail::Law law(result, opts.max_failure_samples);
  {
    BasicWindow<I> const w(I(-opts.window), I(opts.window));
    auto const els = w.elements();
    for (auto const& x : els) {
      for (auto const& y : els) {
        law.require(diff_invariant_check<I>(std::nullopt, x, y).holds, [&] {
          return "difference identity failed at " + to_display_string(x) +
                 "." + to_display_string(y);
        });
      }
    }
  }
  std::int64_t const half = std::max<std::int64_t>(1, opts.window - 2);
  BasicWindow<I> const w(I(-half), I(half));
  auto const els = w.elements();
  for (auto const& v : detail::variant_box<I>(2)) {
    for (auto const& x : els) {
      for (auto const& y : els) {
        law.require(diff_invariant_check<I>(v, x, y).holds, [&] {
          return "difference identity failed at " + to_display_string(x) +
                 "*" + to_display_string(y) + " in variant " +
                 to_display_string(v);
        });
      }
    }
  }
}

// ---------------------------------------------------------------------
// Suite 11: the topology model.
// ---------------------------------------------------------------------
template <Integer I>
void suite_topology(VerifyOptions const& opts, SuiteResult& result) {
  detail::Law law(result, opts.max_failure_samples);
  BasicVariant<I> const origin{I(0), I(0)};
  std::int64_t const lint_half = opts.window + 2;
  BasicWindow<I> const lint_w(I(-lint_half), I(lint_half));

  // Forced isolation: the tau* classifier is clean, a classifier that
  // isolates nothing is flagged at exactly the points with a>0 or b>0.
  law.require(
      lint_shift_constraints([](BasicElement<I> const& e) {
        return tau_star_isolated(e);
      }, lint_w).empty(),
      [] { return std::string("tau* classifier was flagged"); });
  {
    auto const violations = lint_shift_constraints(
        [](BasicElement<I> const&) { return false; }, lint_w);
    std::vector<BasicElement<I>> expected;
    for (auto const& e : lint_w.elements()) {
      if (e.a > I(0) || e.b > I(0)) {
        expected.push_back(e);
      }
    }
    law.require(violations == expected, [] {
      return std::string("wrong-classifier violation set mismatch");
    });
  }

  // Partition: every point is isolated or reconstructs from a valid ray.
  for (auto const& x : lint_w.elements()) {
    auto const cls = classify(x);
    if (auto const* pos = std::get_if<RayPosition<I>>(&cls)) {
      law.require(is_ray_base(pos->base) && pos->index >= I(0) &&
                      ray_representative(Ray<I>{pos->base}, pos->index) == x,
                  [&] {
                    return "ray round-trip failed at " + to_display_string(x);
                  });
    } else {
      law.require(x.a > I(0) || x.b > I(0), [&] {
        return "isolated classification wrong at " + to_display_string(x);
      });
    }
  }

  // Collapse constancy over all ray-base pairs and mixed forms.
  std::vector<Ray<I>> bases;
  for (std::int64_t t = -lint_half; t <= 0; ++t) {
    bases.push_back(ray(BasicElement<I>{I(t), I(0)}));
    if (t != 0) {
      bases.push_back(ray(BasicElement<I>{I(0), I(t)}));
    }
  }
  I const max_index(32);
  for (auto const& r1 : bases) {
    for (auto const& r2 : bases) {
      auto const expected = collapse_product<I>(r1, r2);
      bool constant = true;
      for (I i(0); i <= max_index; i += I(1)) {
        for (I j(0); j <= max_index; j += I(1)) {
          constant = constant && smul(origin, ray_representative(r1, i),
                                      ray_representative(r2, j)) == expected;
        }
      }
      law.require(constant, [&] {
        return "ray*ray collapse not constant for bases " +
               to_display_string(r1.base) + "," + to_display_string(r2.base);
      });
    }
  }
  {
    BasicWindow<I> const pts(I(-4), I(4));
    for (auto const& r1 : bases) {
      for (auto const& p : pts.elements()) {
        if (!tau_star_isolated(p)) {
          continue;
        }
        auto const ray_point = collapse_product<I>(r1, p);
        auto const point_ray = collapse_product<I>(p, r1);
        bool constant = true;
        for (I i(0); i <= max_index; i += I(1)) {
          constant = constant &&
                     smul(origin, ray_representative(r1, i), p) == ray_point &&
                     smul(origin, p, ray_representative(r1, i)) == point_ray;
        }
        law.require(constant, [&] {
          return "mixed collapse not constant for base " +
                 to_display_string(r1.base) + " and point " +
                 to_display_string(p);
        });
      }
    }
  }

  // Hausdorff separation certificates for all distinct pairs.
  {
    BasicWindow<I> const w(I(-opts.window), I(opts.window));
    auto const els = w.elements();
    for (std::size_t i = 0; i < els.size(); ++i) {
      for (std::size_t j = i + 1; j < els.size(); ++j) {
        auto const [u, v] = separate(els[i], els[j]);
        law.require(contains(u, els[i]) && contains(v, els[j]) &&
                        provably_disjoint(u, v),
                    [&] {
                      return "separation failed for " +
                             to_display_string(els[i]) + "," +
                             to_display_string(els[j]);
                    });
      }
    }
  }

  // Dense in itself: near every ray coordinate there is another one, at
  // every radius 1/d down to 1/64, within enumeration index 10^4.  (The
  // search radius a bounded scan can reach depends on the target's
  // denominator; see find_enum_value_within.)
  for (std::uint64_t i = 0; i <= 32; ++i) {
    auto const nearest = nearest_enum_distance(i, 10'000);
    for (std::int64_t d = 1; d <= 64; ++d) {
      law.require(nearest < Rational(1, d), [&] {
        return "no enumeration value within 1/" + std::to_string(d) +
               " of index " + std::to_string(i);
      });
    }
  }

  // Joint continuity certificates re-verified by enumeration.
  {
    std::int64_t const half = std::max<std::int64_t>(1, opts.window - 1);
    BasicWindow<I> const w(I(-half), I(half));
    auto const els = w.elements();
    auto representatives = [&](BasicOpen<I> const& open) {
      std::vector<BasicElement<I>> reps;
      if (auto const* s = std::get_if<Singleton<I>>(&open)) {
        reps.push_back(s->point);
      } else if (auto const* r = std::get_if<Ray<I>>(&open)) {
        for (I i(0); i <= max_index; i += I(1)) {
          reps.push_back(ray_representative(*r, i));
        }
      }
      return reps;
    };
    for (auto const& x : els) {
      for (auto const& y : els) {
        auto const product = smul(origin, x, y);
        for (auto const& w_open : basic_nbhds(product, 2)) {
          auto const cert = continuity_certificate(x, y, w_open);
          bool ok = contains(cert.u, x) && contains(cert.v, y);
          for (auto const& u_rep : representatives(cert.u)) {
            for (auto const& v_rep : representatives(cert.v)) {
              ok = ok && smul(origin, u_rep, v_rep) == product;
            }
          }
          ok = ok && contains(w_open, product);
          law.require(ok, [&] {
            return "continuity certificate failed at " +
                   to_display_string(x) + "," + to_display_string(y);
          });
        }
      }
    }
  }
}

// ---------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------

struct SuiteInfo {
  std::string key;
  std::string title;
};

inline std::vector<SuiteInfo> const& suite_catalog() {
  static std::vector<SuiteInfo> const catalog = {
      {"assoc", "associativity and shift-oracle agreement"},
      {"interassoc", "interassociativity of plain and sandwich products"},
      {"aut", "diagonal automorphisms and the group Z(+)"},
      {"embed", "bicyclic monoid embeddings onto corners"},
      {"idem", "variant idempotents (n+i, m+i)"},
      {"omega", "idempotent omega-chain isomorphic to (N_0, max)"},
      {"green", "Green's relations vs brute-force ideals"},
      {"iso", "canonical isomorphisms between variants"},
      {"gen", "non-finite-generation witnesses"},
      {"diff", "difference identity of products"},
      {"topo", "topology model: isolation, rays, continuity"},
  };
  return catalog;
}

template <Integer I>
SuiteResult run_suite(std::string const& key, VerifyOptions const& opts) {
  SuiteResult result;
  result.key = key;
  for (auto const& info : suite_catalog()) {
    if (info.key == key) {
      result.title = info.title;
    }
  }
  if (result.title.empty()) {
    throw InvalidArgumentError("unknown verification suite '" + key + "'");
  }
  auto const start = std::chrono::steady_clock::now();
  if (key == "assoc") {
    suite_assoc_oracle<I>(opts, result);
  } else if (key == "interassoc") {
    suite_interassoc<I>(opts, result);
  } else if (key == "aut") {
    suite_automorphisms<I>(opts, result);
  } else if (key == "embed") {
    suite_embedding<I>(opts, result);
  } else if (key == "idem") {
    suite_idempotents<I>(opts, result);
  } else if (key == "omega") {
    suite_omega_chain<I>(opts, result);
  } else if (key == "green") {
    suite_green<I>(opts, result);
  } else if (key == "iso") {
    suite_iso<I>(opts, result);
  } else if (key == "gen") {
    suite_generation<I>(opts, result);
  } else if (key == "diff") {
    suite_diff_invariant<I>(opts, result);
  } else if (key == "topo") {
    suite_topology<I>(opts, result);
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

template <Integer I>
std::vector<SuiteResult> run_all_suites(VerifyOptions const& opts) {
  std::vector<SuiteResult> results;
  for (auto const& info : suite_catalog()) {
    results.push_back(run_suite<I>(info.key, opts));
  }
  return results;
}

}  // namespace bicyclic

#endif  // BICYCLIC_VERIFY_HPP_
