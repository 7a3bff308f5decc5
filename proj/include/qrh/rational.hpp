#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace qrh {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q", "p" or a short decimal such as "0.25".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }
inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

}  // namespace qrh
