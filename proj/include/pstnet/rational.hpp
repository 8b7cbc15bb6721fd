#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pstnet {

// Exact arbitrary-precision rational scalar. All polynomial coefficients and
// integer scheme identities are carried exactly; doubles enter only in the
// spectral layer.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace pstnet
