#pragma once

// Exact number types.  All linear algebra in this library is done over the
// rationals so that rank and span decisions are exact; no floating point
// appears anywhere in the decision paths.

#include <boost/multiprecision/cpp_int.hpp>

namespace cellnet {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace cellnet
