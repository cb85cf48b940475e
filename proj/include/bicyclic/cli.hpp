#ifndef BICYCLIC_CLI_HPP_
#define BICYCLIC_CLI_HPP_

// Command-line front end.  Every subcommand writes one serialized result
// to stdout.  Exit codes: 0 success, 1 domain error (with a
// machine-readable error object), 2 usage error, 3 verification failure.
// BICYCLIC_INT_MODE=checked64|bigint selects the integer backend.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bigint.hpp"
#include "eggbox.hpp"
#include "serialize.hpp"
#include "verify.hpp"

namespace bicyclic {
namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;

namespace detail {

struct Args {
  std::string command;  // "mul", ..., "topo classify", ...
  std::string format = "json";

  std::string lhs;
  std::string rhs;
  std::string elem;
  std::string variant;
  std::string window;
  std::string guard;
  std::string gens;
  std::string rel;
  std::string k;
  std::string apply;
  std::string point;
  std::string x;
  std::string y;
  std::string nonisolated;
  std::string suite;
  std::size_t count = 0;
  std::size_t resolution = 4;
  std::size_t cap = kDefaultClosureCap;
  std::int64_t verify_window = 6;
  unsigned jobs = 1;
  std::uint64_t seed = VerifyOptions{}.seed;
};

inline void emit_text(std::ostream& out, Json const& value,
                      std::string indent = "") {
  if (value.is_object()) {
    for (auto const& [key, item] : value.items()) {
      if (item.is_object() || item.is_array()) {
        out << indent << key << ":\n";
        emit_text(out, item, indent + "  ");
      } else {
        out << indent << key << ": " << (item.is_string()
                                             ? item.get<std::string>()
                                             : item.dump())
            << "\n";
      }
    }
  } else if (value.is_array()) {
    for (auto const& item : value) {
      if (item.is_object() || item.is_array()) {
        emit_text(out, item, indent + "  ");
      } else {
        out << indent << "- " << item.dump() << "\n";
      }
    }
  } else {
    out << indent << value.dump() << "\n";
  }
}

inline void emit(std::ostream& out, Json const& value,
                 std::string const& format) {
  if (format == "text") {
    emit_text(out, value);
  } else {
    out << value.dump() << "\n";
  }
}

inline GreenRel parse_green_rel(std::string const& text) {
  if (text == "R") return GreenRel::R;
  if (text == "L") return GreenRel::L;
  if (text == "H") return GreenRel::H;
  if (text == "D") return GreenRel::D;
  if (text == "J") return GreenRel::J;
  throw InvalidArgumentError("--rel must be one of R|L|H|D|J, got '" + text +
                             "'");
}

template <Integer I>
std::optional<BasicVariant<I>> optional_variant(std::string const& text) {
  if (text.empty()) {
    return std::nullopt;
  }
  return parse_variant<I>(text);
}

template <Integer I>
int run_verify(Args const& args, std::ostream& out) {
  VerifyOptions opts;
  opts.window = args.verify_window;
  opts.jobs = args.jobs;
  opts.seed = args.seed;

  std::vector<SuiteResult> results;
  if (!args.suite.empty()) {
    results.push_back(run_suite<I>(args.suite, opts));
  } else {
    results = run_all_suites<I>(opts);
  }

  bool all_passed = true;
  if (args.format == "json") {
    Json suites = Json::array();
    for (auto const& r : results) {
      all_passed = all_passed && r.passed();
      Json samples = Json::array();
      for (auto const& s : r.failure_samples) {
        samples.push_back(s);
      }
      suites.push_back(Json{{"key", r.key},
                            {"title", r.title},
                            {"checks", r.checks},
                            {"failures", r.failures},
                            {"seconds", r.seconds},
                            {"passed", r.passed()},
                            {"failure_samples", std::move(samples)}});
    }
    emit(out, Json{{"suites", std::move(suites)}, {"passed", all_passed}},
         args.format);
  } else {
    std::size_t index = 1;
    for (auto const& r : results) {
      all_passed = all_passed && r.passed();
      std::ostringstream line;
      line << "[" << std::setw(2) << index++ << "/" << results.size() << "] "
           << r.key << ": " << r.title;
      std::string header = line.str();
      if (header.size() < 68) {
        header += std::string(68 - header.size(), '.');
      }
      out << header << (r.passed() ? " PASS" : " FAIL") << "  ("
          << r.checks << " checks, " << r.failures << " failures, "
          << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
      for (auto const& s : r.failure_samples) {
        out << "        " << s << "\n";
      }
    }
    out << (all_passed ? "VERIFICATION PASSED" : "VERIFICATION FAILED")
        << "\n";
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

template <Integer I>
int execute(Args const& args, std::ostream& out) {
  if (args.command == "mul") {
    auto const p = mul(parse_element<I>(args.lhs), parse_element<I>(args.rhs));
    emit(out, to_json(p), args.format);
    return kExitOk;
  }
  if (args.command == "smul") {
    auto const p = smul(parse_variant<I>(args.variant),
                        parse_element<I>(args.lhs),
                        parse_element<I>(args.rhs));
    emit(out, to_json(p), args.format);
    return kExitOk;
  }
  if (args.command == "inv") {
    emit(out, to_json(inverse(parse_element<I>(args.elem))), args.format);
    return kExitOk;
  }
  if (args.command == "idem") {
    auto const v = parse_variant<I>(args.variant);
    Json items = Json::array();
    for (auto const& e : idempotents(v, args.count)) {
      items.push_back(to_json(e));
    }
    emit(out, Json{{"variant", to_json(v)}, {"idempotents", std::move(items)}},
         args.format);
    return kExitOk;
  }
  if (args.command == "order") {
    auto const params = optional_variant<I>(args.variant);
    auto const product = [&](BasicElement<I> const& a,
                             BasicElement<I> const& b) {
      return product_in(params, a, b);
    };
    bool const leq = natural_leq<I>(product, parse_element<I>(args.lhs),
                                    parse_element<I>(args.rhs));
    emit(out, Json{{"leq", leq}}, args.format);
    return kExitOk;
  }
  if (args.command == "green") {
    auto const rel = parse_green_rel(args.rel);
    auto const x = parse_element<I>(args.lhs);
    auto const y = parse_element<I>(args.rhs);
    auto const params = optional_variant<I>(args.variant);
    bool const related =
        params.has_value() ? green_v(rel, *params, x, y) : green_cz(rel, x, y);
    emit(out, Json{{"related", related}}, args.format);
    return kExitOk;
  }
  if (args.command == "aut") {
    BasicAutomorphism<I> const h{parse_int<I>(args.k)};
    if (args.elem.empty()) {
      emit(out, Json{{"k", int_to_json(h.shift)}}, args.format);
    } else {
      emit(out, to_json(aut_apply(h, parse_element<I>(args.elem))),
           args.format);
    }
    return kExitOk;
  }
  if (args.command == "iso") {
    auto const v = parse_variant<I>(args.variant);
    auto const f = canonical_iso(v.m, v.n);
    Json result = to_json(f);
    if (!args.apply.empty()) {
      result["image"] = to_json(f.forward(parse_element<I>(args.apply)));
    }
    emit(out, result, args.format);
    return kExitOk;
  }
  if (args.command == "embed") {
    auto const exps = parse_element<I>(args.elem);
    auto const u = bicyclic_element(exps.a, exps.b);
    emit(out, to_json(embed_bicyclic(parse_int<I>(args.k), u)), args.format);
    return kExitOk;
  }
  if (args.command == "closure") {
    auto const gs = make_gen_set<I>(parse_element_list<I>(args.gens),
                                    optional_variant<I>(args.variant));
    auto const result = closure(gs, parse_window<I>(args.guard), args.cap);
    emit(out, to_json(result), args.format);
    return kExitOk;
  }
  if (args.command == "witness") {
    auto const params = optional_variant<I>(args.variant);
    auto const gs =
        make_gen_set<I>(parse_element_list<I>(args.gens), params);
    if (params.has_value()) {
      auto const vw = witness_variant(gs);
      emit(out,
           Json{{"witness", to_json(vw.witness)},
                {"floors", Json{{"xstar", int_to_json(vw.floors.xstar)},
                                {"ystar", int_to_json(vw.floors.ystar)}}}},
           args.format);
    } else {
      auto const cw = witness_cz(gs);
      emit(out,
           Json{{"witness", to_json(cw.witness)},
                {"min_corner", int_to_json(cw.corner)}},
           args.format);
    }
    return kExitOk;
  }
  if (args.command == "topo classify") {
    emit(out, to_json(classify(parse_element<I>(args.point))), args.format);
    return kExitOk;
  }
  if (args.command == "topo lint") {
    auto const w = parse_window<I>(args.window);
    std::vector<BasicElement<I>> marked;
    if (!args.nonisolated.empty()) {
      marked = parse_element_list<I>(args.nonisolated);
    }
    // Candidate classification: tau*, except the listed points are
    // declared non-isolated.
    auto const candidate = [&](BasicElement<I> const& e) {
      for (auto const& m : marked) {
        if (m == e) {
          return false;
        }
      }
      return tau_star_isolated(e);
    };
    auto const violations = lint_shift_constraints(candidate, w);
    Json items = Json::array();
    for (auto const& e : violations) {
      items.push_back(to_json(e));
    }
    emit(out,
         Json{{"window", to_json(w)},
              {"violations", std::move(items)},
              {"count", violations.size()}},
         args.format);
    return kExitOk;
  }
  if (args.command == "topo certify") {
    auto const x = parse_element<I>(args.x);
    auto const y = parse_element<I>(args.y);
    auto const product = smul(BasicVariant<I>{I(0), I(0)}, x, y);
    auto const w_open = basic_nbhds(product, args.resolution).front();
    auto const cert = continuity_certificate(x, y, w_open);
    emit(out,
         Json{{"x", to_json(x)},
              {"y", to_json(y)},
              {"product", to_json(product)},
              {"w", to_json(w_open)},
              {"u", to_json(cert.u)},
              {"v", to_json(cert.v)}},
         args.format);
    return kExitOk;
  }
  if (args.command == "eggbox") {
    auto const v = parse_variant<I>(args.variant);
    auto const w = parse_window<I>(args.window);
    auto const dot = eggbox_dot(v, w);
    if (args.format == "dot") {
      out << dot;
    } else {
      emit(out,
           Json{{"variant", to_json(v)}, {"window", to_json(w)},
                {"dot", dot}},
           args.format);
    }
    return kExitOk;
  }
  if (args.command == "verify") {
    return run_verify<I>(args, out);
  }
  throw InvalidArgumentError("unhandled command '" + args.command + "'");
}

}  // namespace detail

inline int run(std::vector<std::string> const& argv, std::ostream& out,
               std::ostream& err) {
  detail::Args args;

  CLI::App app{"Exact computation and machine verification in the extended "
               "bicyclic semigroup and its sandwich variants"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* cmd, std::string def = "json") {
    auto* opt = cmd->add_option("--format", args.format, "Output format")
                    ->check(CLI::IsMember({"json", "text", "dot"}));
    cmd->callback([&args, cmd, opt, def] {
      args.command = cmd->get_name();
      if (opt->count() == 0) {
        args.format = def;
      }
    });
    return cmd;
  };

  auto* mul_cmd = add_format(app.add_subcommand("mul", "Multiply two elements"));
  mul_cmd->add_option("--lhs", args.lhs, "Left factor as a,b")->required();
  mul_cmd->add_option("--rhs", args.rhs, "Right factor as a,b")->required();

  auto* smul_cmd = add_format(
      app.add_subcommand("smul", "Multiply in a sandwich variant"));
  smul_cmd->add_option("--variant", args.variant, "Sandwich pair m,n")
      ->required();
  smul_cmd->add_option("--lhs", args.lhs, "Left factor as a,b")->required();
  smul_cmd->add_option("--rhs", args.rhs, "Right factor as a,b")->required();

  auto* inv_cmd = add_format(app.add_subcommand("inv", "Invert an element"));
  inv_cmd->add_option("--elem", args.elem, "Element as a,b")->required();

  auto* idem_cmd = add_format(
      app.add_subcommand("idem", "List idempotents of a variant"));
  idem_cmd->add_option("--variant", args.variant, "Sandwich pair m,n")
      ->required();
  idem_cmd->add_option("--count", args.count, "How many, from e_0 up")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* order_cmd = add_format(app.add_subcommand(
      "order", "Natural partial order between two idempotents"));
  order_cmd->add_option("--lhs", args.lhs, "Left idempotent as a,b")
      ->required();
  order_cmd->add_option("--rhs", args.rhs, "Right idempotent as a,b")
      ->required();
  order_cmd->add_option("--variant", args.variant,
                        "Sandwich pair m,n (plain product when absent)");

  auto* green_cmd = add_format(
      app.add_subcommand("green", "Test a Green relation between elements"));
  green_cmd->add_option("--rel", args.rel, "One of R|L|H|D|J")->required();
  green_cmd->add_option("--lhs", args.lhs, "First element as a,b")->required();
  green_cmd->add_option("--rhs", args.rhs, "Second element as a,b")
      ->required();
  green_cmd->add_option("--variant", args.variant,
                        "Sandwich pair m,n (plain semigroup when absent)");

  auto* aut_cmd = add_format(
      app.add_subcommand("aut", "Apply the translation automorphism"));
  aut_cmd->add_option("--k", args.k, "Translation parameter")->required();
  aut_cmd->add_option("--elem", args.elem, "Element as a,b (optional)");

  auto* iso_cmd = add_format(app.add_subcommand(
      "iso", "Canonical isomorphism from variant (0,0) to (m,n)"));
  iso_cmd->add_option("--variant", args.variant, "Target variant m,n")
      ->required();
  iso_cmd->add_option("--apply", args.apply, "Also map this element a,b");

  auto* embed_cmd = add_format(app.add_subcommand(
      "embed", "Embed a bicyclic monoid element q^i p^j at corner k"));
  embed_cmd->add_option("--k", args.k, "Corner parameter")->required();
  embed_cmd->add_option("--elem", args.elem, "Exponents as i,j")->required();

  auto* closure_cmd = add_format(app.add_subcommand(
      "closure", "Generated-subsemigroup closure inside a guard window"));
  closure_cmd
      ->add_option("--gens", args.gens, "Generators as \"(a,b);(c,d)\"")
      ->required();
  closure_cmd->add_option("--variant", args.variant,
                          "Sandwich pair m,n (plain product when absent)");
  closure_cmd->add_option("--guard", args.guard, "Guard window as lo,hi")
      ->required();
  closure_cmd->add_option("--cap", args.cap, "Element budget");

  auto* witness_cmd = add_format(app.add_subcommand(
      "witness", "Constructive non-finite-generation witness"));
  witness_cmd
      ->add_option("--gens", args.gens, "Generators as \"(a,b);(c,d)\"")
      ->required();
  witness_cmd->add_option("--variant", args.variant,
                          "Sandwich pair m,n (plain semigroup when absent)");

  auto* topo = app.add_subcommand("topo", "Topology model of variant (0,0)");
  topo->require_subcommand(1);
  auto add_topo_format = [&](CLI::App* cmd) {
    auto* opt = cmd->add_option("--format", args.format, "Output format")
                    ->check(CLI::IsMember({"json", "text"}));
    std::string const name = "topo " + cmd->get_name();
    cmd->callback([&args, opt, name] {
      args.command = name;
      if (opt->count() == 0) {
        args.format = "json";
      }
    });
    return cmd;
  };
  auto* classify_cmd =
      add_topo_format(topo->add_subcommand("classify", "Classify a point"));
  classify_cmd->add_option("--point", args.point, "Point as a,b")->required();

  auto* lint_cmd = add_topo_format(topo->add_subcommand(
      "lint", "Check a classification against forced isolation"));
  lint_cmd->add_option("--window", args.window, "Window as lo,hi")
      ->required();
  lint_cmd->add_option(
      "--nonisolated", args.nonisolated,
      "Points a candidate classification marks non-isolated, as "
      "\"(a,b);(c,d)\"");

  auto* certify_cmd = add_topo_format(topo->add_subcommand(
      "certify", "Joint-continuity certificate at a pair of points"));
  certify_cmd->add_option("--x", args.x, "Left factor as a,b")->required();
  certify_cmd->add_option("--y", args.y, "Right factor as a,b")->required();
  certify_cmd->add_option("--resolution", args.resolution,
                          "Neighbourhood resolution for the target open");

  auto* eggbox_cmd = add_format(
      app.add_subcommand("eggbox", "Egg-box diagram of a window"), "dot");
  eggbox_cmd->add_option("--variant", args.variant, "Sandwich pair m,n")
      ->required();
  eggbox_cmd->add_option("--window", args.window, "Window as lo,hi")
      ->required();

  auto* verify_cmd = add_format(app.add_subcommand(
      "verify", "Run the exhaustive verification suites"), "text");
  verify_cmd->add_flag("--all", "Run every suite (the default)");
  verify_cmd->add_option("--suite", args.suite, "Run a single suite by key");
  verify_cmd->add_option("--window", args.verify_window,
                         "Window half-width knob (default 6)");
  verify_cmd->add_option("--jobs", args.jobs, "Worker threads");
  verify_cmd->add_option("--seed", args.seed, "Seed for randomized suites");

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    out << app.help();
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  char const* mode_env = std::getenv("BICYCLIC_INT_MODE");
  std::string const mode = mode_env == nullptr ? "checked64" : mode_env;

  try {
    if (mode == "checked64") {
      return detail::execute<CheckedInt64>(args, out);
    }
    if (mode == "bigint") {
      return detail::execute<Bigint>(args, out);
    }
    err << "usage error: BICYCLIC_INT_MODE must be checked64 or bigint, got '"
        << mode << "'\n";
    return kExitUsage;
  } catch (NotIdempotentError const& e) {
    detail::emit(out, error_json("NotIdempotent", e.what()), "json");
    return kExitDomainError;
  } catch (VariantMismatchError const& e) {
    detail::emit(out, error_json("VariantMismatch", e.what()), "json");
    return kExitDomainError;
  } catch (InvalidPaddingError const& e) {
    detail::emit(out, error_json("InvalidPadding", e.what()), "json");
    return kExitDomainError;
  } catch (WindowTooSmallError const& e) {
    detail::emit(out, error_json("WindowTooSmall", e.what()), "json");
    return kExitDomainError;
  } catch (BudgetExceededError const& e) {
    detail::emit(out, error_json("BudgetExceeded", e.what()), "json");
    return kExitDomainError;
  } catch (NotCollapsibleError const& e) {
    detail::emit(out, error_json("NotCollapsible", e.what()), "json");
    return kExitDomainError;
  } catch (InvalidTargetError const& e) {
    detail::emit(out, error_json("InvalidTarget", e.what()), "json");
    return kExitDomainError;
  } catch (OverflowError const& e) {
    detail::emit(out, error_json("Overflow", e.what()), "json");
    return kExitDomainError;
  } catch (InvalidArgumentError const& e) {
    detail::emit(out, error_json("InvalidArgument", e.what()), "json");
    return kExitDomainError;
  } catch (Error const& e) {
    detail::emit(out, error_json("Error", e.what()), "json");
    return kExitDomainError;
  }
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    args.emplace_back(argv[i]);
  }
  return run(args, std::cout, std::cerr);
}

}  // namespace cli
}  // namespace bicyclic

#endif  // BICYCLIC_CLI_HPP_
