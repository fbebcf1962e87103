#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace xha {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "p" or "p/q" with optional sign. Returns nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string& text);

/// Renders as "p" or "p/q" (lowest terms, q > 0).
std::string rational_to_string(const Rat& r);

}  // namespace xha
