#ifndef COVDEPTH_RATIONAL_HPP
#define COVDEPTH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace covdepth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, r) with the convention that out-of-range indices give 0.
BigInt binomial(long long n, long long r);

/// H_n = 1 + 1/2 + ... + 1/n as an exact rational (H_0 = 0).
Rational harmonic(long long n);

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

/// Fixed-point decimal with `places` digits after the point, rounded half-up.
std::string decimal_fixed(const Rational& r, int places);

/// Decimal with `digits` significant digits, rounded half-up ("0" for zero).
std::string decimal_sig(const Rational& r, int digits = 12);

}  // namespace covdepth

#endif
