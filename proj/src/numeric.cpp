#include "latreal/numeric.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace latreal {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

BigInt floor_mod(const BigInt& a, const BigInt& b) { return a - floor_div(a, b) * b; }

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

std::string rat_str(const BigRat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

BigInt rat_floor(const BigRat& r) { return floor_div(numerator(r), denominator(r)); }

}  // namespace latreal
