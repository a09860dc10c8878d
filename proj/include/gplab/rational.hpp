#pragma once

#include <boost/rational.hpp>
#include <cstdint>

namespace gplab {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& q) { return boost::rational_cast<double>(q); }

}  // namespace gplab
