#ifndef BICYCLIC_SERIALIZE_HPP_
#define BICYCLIC_SERIALIZE_HPP_

// Wire formats.  Flags carry elements as "a,b" and generator lists as
// semicolon-separated parenthesised pairs "(a,b);(c,d)" so that negative
// numbers parse unambiguously; JSON carries elements as {"a":..,"b":..}.
// Coordinates that fit in 64 bits are emitted as JSON numbers, wider ones
// (bigint backend) as decimal strings; the parsers accept both.

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "generation.hpp"
#include "morphisms.hpp"
#include "topology.hpp"
#include "types.hpp"
#include "variants.hpp"

namespace bicyclic {

using Json = nlohmann::json;

// ---------------------------------------------------------------------
// Integers
// ---------------------------------------------------------------------

template <Integer I>
Json int_to_json(I const& x) {
  std::ostringstream os;
  os << x;
  auto const text = os.str();
  try {
    return Json(std::stoll(text));
  } catch (std::out_of_range const&) {
    return Json(text);
  }
}

template <Integer I>
I parse_int(std::string const& text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      t += ch;
    }
  }
  if (t.empty()) {
    throw InvalidArgumentError("empty integer literal");
  }
  std::size_t pos = t[0] == '-' || t[0] == '+' ? 1 : 0;
  if (pos == t.size()) {
    throw InvalidArgumentError("sign without digits in integer literal");
  }
  I value(0);
  I const ten(10);
  for (; pos < t.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(t[pos]))) {
      throw InvalidArgumentError("malformed integer literal '" + text + "'");
    }
    value = value * ten + I(t[pos] - '0');
  }
  return t[0] == '-' ? I(0) - value : value;
}

template <Integer I>
I int_from_json(Json const& j) {
  if (j.is_string()) {
    return parse_int<I>(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return I(static_cast<long long>(j.get<std::int64_t>()));
  }
  throw InvalidArgumentError("expected an integer, got " + j.dump());
}

// ---------------------------------------------------------------------
// Flag parsing
// ---------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split(std::string const& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  return parts;
}

inline std::string strip(std::string const& text) {
  auto begin = text.begin();
  auto end = text.end();
  while (begin != end && std::isspace(static_cast<unsigned char>(*begin))) {
    ++begin;
  }
  while (end != begin && std::isspace(static_cast<unsigned char>(end[-1]))) {
    --end;
  }
  return std::string(begin, end);
}

}  // namespace detail

//! "a,b" -> element.
template <Integer I>
BasicElement<I> parse_element(std::string const& text) {
  auto const parts = detail::split(text, ',');
  if (parts.size() != 2) {
    throw InvalidArgumentError("expected 'a,b', got '" + text + "'");
  }
  return {parse_int<I>(parts[0]), parse_int<I>(parts[1])};
}

template <Integer I>
BasicVariant<I> parse_variant(std::string const& text) {
  auto const e = parse_element<I>(text);
  return {e.a, e.b};
}

template <Integer I>
BasicWindow<I> parse_window(std::string const& text) {
  auto const e = parse_element<I>(text);
  return BasicWindow<I>(e.a, e.b);
}

//! "(a,b);(c,d);..." -> elements.
template <Integer I>
std::vector<BasicElement<I>> parse_element_list(std::string const& text) {
  std::vector<BasicElement<I>> out;
  for (auto const& raw : detail::split(text, ';')) {
    auto const part = detail::strip(raw);
    if (part.empty()) {
      continue;
    }
    if (part.front() != '(' || part.back() != ')') {
      throw InvalidArgumentError("expected '(a,b)', got '" + part + "'");
    }
    out.push_back(parse_element<I>(part.substr(1, part.size() - 2)));
  }
  if (out.empty()) {
    throw InvalidArgumentError("empty element list '" + text + "'");
  }
  return out;
}

// ---------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------

template <Integer I>
Json to_json(BasicElement<I> const& e) {
  return Json{{"a", int_to_json(e.a)}, {"b", int_to_json(e.b)}};
}

template <Integer I>
BasicElement<I> element_from_json(Json const& j) {
  return {int_from_json<I>(j.at("a")), int_from_json<I>(j.at("b"))};
}

template <Integer I>
Json to_json(BasicVariant<I> const& v) {
  return Json{{"m", int_to_json(v.m)}, {"n", int_to_json(v.n)}};
}

template <Integer I>
BasicVariant<I> variant_from_json(Json const& j) {
  return {int_from_json<I>(j.at("m")), int_from_json<I>(j.at("n"))};
}

template <Integer I>
Json to_json(BasicWindow<I> const& w) {
  return Json{{"lo", int_to_json(w.lo())}, {"hi", int_to_json(w.hi())}};
}

template <Integer I>
BasicWindow<I> window_from_json(Json const& j) {
  return BasicWindow<I>(int_from_json<I>(j.at("lo")),
                        int_from_json<I>(j.at("hi")));
}

template <Integer I>
Json to_json(VariantIdempotent<I> const& e) {
  return Json{{"index", int_to_json(e.index)},
              {"element", to_json(e.element())}};
}

template <Integer I>
Json to_json(BasicIsoMap<I> const& f) {
  return Json{{"src", to_json(f.src)},
              {"dst", to_json(f.dst)},
              {"shift_a", int_to_json(f.shift_a)},
              {"shift_b", int_to_json(f.shift_b)}};
}

template <Integer I>
BasicIsoMap<I> iso_from_json(Json const& j) {
  return {variant_from_json<I>(j.at("src")), variant_from_json<I>(j.at("dst")),
          int_from_json<I>(j.at("shift_a")), int_from_json<I>(j.at("shift_b"))};
}

inline Json to_json(Rational const& r) {
  return Json{{"num", r.num()}, {"den", r.den()}};
}

inline Rational rational_from_json(Json const& j) {
  return Rational(j.at("num").get<std::int64_t>(),
                  j.at("den").get<std::int64_t>());
}

template <Integer I>
Json to_json(PointClass<I> const& cls) {
  if (std::holds_alternative<IsolatedPoint>(cls)) {
    return Json{{"kind", "isolated"}};
  }
  auto const& pos = std::get<RayPosition<I>>(cls);
  return Json{{"kind", "ray"},
              {"base", to_json(pos.base)},
              {"index", int_to_json(pos.index)}};
}

template <Integer I>
PointClass<I> point_class_from_json(Json const& j) {
  if (j.at("kind") == "isolated") {
    return IsolatedPoint{};
  }
  return RayPosition<I>{element_from_json<I>(j.at("base")),
                        int_from_json<I>(j.at("index"))};
}

template <Integer I>
Json to_json(BasicOpen<I> const& open) {
  if (auto const* s = std::get_if<Singleton<I>>(&open)) {
    return Json{{"kind", "singleton"}, {"point", to_json(s->point)}};
  }
  if (auto const* r = std::get_if<Ray<I>>(&open)) {
    return Json{{"kind", "ray"}, {"base", to_json(r->base)}};
  }
  auto const& iv = std::get<RayInterval<I>>(open);
  return Json{{"kind", "interval"},
              {"base", to_json(iv.base)},
              {"lo", to_json(iv.lo)},
              {"hi", to_json(iv.hi)}};
}

template <Integer I>
BasicOpen<I> basic_open_from_json(Json const& j) {
  auto const kind = j.at("kind").get<std::string>();
  if (kind == "singleton") {
    return Singleton<I>{element_from_json<I>(j.at("point"))};
  }
  if (kind == "ray") {
    return Ray<I>{element_from_json<I>(j.at("base"))};
  }
  if (kind != "interval") {
    throw InvalidArgumentError("unknown basic open kind '" + kind + "'");
  }
  return RayInterval<I>{element_from_json<I>(j.at("base")),
                        rational_from_json(j.at("lo")),
                        rational_from_json(j.at("hi"))};
}

template <Integer I>
Json to_json(BasicClosureResult<I> const& r) {
  Json found = Json::array();
  for (auto const& e : r.found) {
    found.push_back(to_json(e));
  }
  Json frontier = Json::array();
  for (auto const& e : r.frontier) {
    frontier.push_back(to_json(e));
  }
  return Json{{"found", std::move(found)},
              {"frontier", std::move(frontier)},
              {"saturated", r.saturated},
              {"guard", to_json(r.guard)}};
}

//! Machine-readable error object for the CLI.
inline Json error_json(std::string const& type, std::string const& message) {
  return Json{{"error", Json{{"type", type}, {"message", message}}}};
}

}  // namespace bicyclic

#endif  // BICYCLIC_SERIALIZE_HPP_
