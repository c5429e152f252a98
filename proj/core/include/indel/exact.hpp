#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace indel {

__extension__ typedef unsigned __int128 u128;

/// Arbitrary precision integer used for embedding numbers, ball sizes and
/// scaled objective values.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational used for expected distances and run statistics.
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k) as an exact integer; 0 when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

inline std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& v);

inline double to_double(const Rational& v) { return v.convert_to<double>(); }

}  // namespace indel
