#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace vinco {

/// Exact arbitrary-precision integer used by the formula and series layers.
using Int = boost::multiprecision::cpp_int;

}  // namespace vinco
