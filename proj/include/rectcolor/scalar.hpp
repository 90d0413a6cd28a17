#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rectcolor {

/// Exact rational coordinate/weight. GMP keeps it canonical after every
/// arithmetic operation; values built from raw parts go through canonicalize().
using Scalar = mpq_class;

/// Parses "12", "-3/7", "0.25", "+1.5". Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// Canonical text: "5", "-3/7". parse_scalar(to_string(v)) == v.
std::string to_string(const Scalar& v);

double to_double(const Scalar& v);

/// floor(v * 2^64) / 2^64 for v >= 0 given as a double.
Scalar dyadic_floor(double v);

}  // namespace rectcolor
