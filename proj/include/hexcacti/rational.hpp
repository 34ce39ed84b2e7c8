#ifndef HEXCACTI_RATIONAL_HPP
#define HEXCACTI_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>
#include <string>

namespace hexcacti {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// ~50 significant decimal digits, enough headroom for pole analysis at n = 60.
using Real = boost::multiprecision::cpp_bin_float_50;

// Renders "p/q", omitting "/q" when the denominator is 1.
std::string rat_str(const BigRat& q);

// Accepts "p/q", plain integers and terminating decimals ("0.25"), all exact.
BigRat parse_rational(const std::string& s);

Real to_real(const BigRat& q);

}  // namespace hexcacti

#endif
