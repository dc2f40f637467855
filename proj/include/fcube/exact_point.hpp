#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fcube/digit_set.hpp"

namespace fcube {

using Rational = boost::rational<std::int64_t>;

// A point of R^k with reduced rational coordinates. Ordered lexicographically.
using ExactPoint = std::vector<Rational>;

// "p/q", or "p" when q == 1.
std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view token);

std::string point_to_string(const ExactPoint& x);
// "(p1/q1,...,pk/qk)"
ExactPoint parse_point(std::string_view token);

// Fixed point d / (n-1) of x -> (x + d) / n.
ExactPoint fixed_point(const Digit& d, Coord n);

// (x + d) / n
ExactPoint apply_map(const ExactPoint& x, const Digit& d, Coord n);

}  // namespace fcube
