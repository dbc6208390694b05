#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace polylab {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

// Throws kOverflow if x does not fit.
std::int64_t to_int64(const BigInt& x);
double to_double(const BigInt& x);

BigInt factorial(int n);
BigInt power(const BigInt& base, unsigned exponent);

}  // namespace polylab
