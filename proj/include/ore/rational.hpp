#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace ore {

using Rational = boost::rational<std::int64_t>;

// "p/q"; integers are rendered with an explicit "/1".
std::string to_string(const Rational& r);

// Accepts "p/q" or "p".
Rational parse_rational(const std::string& text);

}  // namespace ore
