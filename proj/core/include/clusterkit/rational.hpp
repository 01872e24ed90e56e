#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace clusterkit {

// Exact arbitrary-precision arithmetic. All coefficient work in the library
// goes through these; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace clusterkit
