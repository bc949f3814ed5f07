#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace latreal {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Floor division/remainder (C++ '/' truncates toward zero).
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor_mod(const BigInt& a, const BigInt& b);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

bool is_prime(const BigInt& n);

// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string rat_str(const BigRat& r);

BigInt rat_floor(const BigRat& r);

}  // namespace latreal
