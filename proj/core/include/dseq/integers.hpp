#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace dseq {

// Exact arithmetic everywhere: sequence terms over Z grow exponentially and
// quaternion coordinates are rationals, so no fixed-width type is safe.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "n" or "n/d" (d > 0 after normalization); throws std::invalid_argument.
Rat parse_rational(const std::string& text);

// Canonical forms: integers as "n", everything else as "n/d" with d > 0.
std::string rational_to_string(const Rat& value);

inline bool is_integer(const Rat& value) {
    return boost::multiprecision::denominator(value) == 1;
}

}  // namespace dseq
