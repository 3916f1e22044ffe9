#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace gl11 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Exact floor of the n-th root of a non-negative integer.
Int integer_nth_root(const Int& x, unsigned n);

// Exact n-th root of a rational, if it exists (x >= 0, n >= 1).
std::optional<Rat> rational_nth_root(const Rat& x, unsigned n);

inline std::optional<Rat> rational_sqrt(const Rat& x) { return rational_nth_root(x, 2); }

// "p/q" (q omitted when 1); the only numeric format used in files and CLI output.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace gl11
