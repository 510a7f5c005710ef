#include "covdepth/rational.hpp"

#include <sstream>

namespace covdepth {

BigInt binomial(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt acc = 1;
  for (long long i = 1; i <= r; ++i) {
    acc *= (n - r + i);
    acc /= i;
  }
  return acc;
}

Rational harmonic(long long n) {
  Rational h = 0;
  for (long long i = 1; i <= n; ++i) h += Rational(1, i);
  return h;
}

namespace {

BigInt pow10(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

// round(|num|/den * 10^scale) half-up, scale may be negative.
BigInt scaled_round(BigInt num, BigInt den, int scale) {
  if (scale >= 0)
    num *= pow10(scale);
  else
    den *= pow10(-scale);
  BigInt q = num / den;
  BigInt rem = num - q * den;
  if (2 * rem >= den) ++q;
  return q;
}

}  // namespace

std::string decimal_fixed(const Rational& r, int places) {
  bool neg = r < 0;
  BigInt num = boost::multiprecision::abs(numerator(r));
  BigInt den = denominator(r);
  BigInt scaled = scaled_round(num, den, places);
  std::string digits = scaled.str();
  std::string out;
  if (places == 0) {
    out = digits;
  } else {
    if (static_cast<int>(digits.size()) <= places)
      digits.insert(0, places + 1 - digits.size(), '0');
    out = digits.substr(0, digits.size() - places) + "." +
          digits.substr(digits.size() - places);
  }
  if (neg && scaled != 0) out.insert(0, "-");
  return out;
}

std::string decimal_sig(const Rational& r, int digits) {
  if (r == 0) return "0";
  bool neg = r < 0;
  BigInt num = boost::multiprecision::abs(numerator(r));
  BigInt den = denominator(r);
  // exponent e with 10^e <= |r| < 10^{e+1}
  int e = 0;
  BigInt lo = num, hi = den;  // compare |r| against 10^e by cross-multiplying
  while (lo < hi) {
    lo *= 10;
    --e;
  }
  while (lo >= 10 * hi) {
    hi *= 10;
    ++e;
  }
  BigInt scaled = scaled_round(num, den, digits - 1 - e);
  // rounding may carry into one more digit (e.g. 9.99 -> 10.0)
  if (scaled >= pow10(digits)) {
    scaled /= 10;
    ++e;
  }
  std::string ds = scaled.str();
  std::string out;
  if (e >= 0 && e < digits) {
    out = ds.substr(0, e + 1);
    std::string frac = ds.substr(e + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else {
    std::string frac = ds.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = ds.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    out += "e" + std::to_string(e);
  }
  if (neg) out.insert(0, "-");
  return out;
}

}  // namespace covdepth
