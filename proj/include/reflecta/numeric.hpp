#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace reflecta {

// Exact scalars.  The ground field is Q throughout; Int is the shared
// arbitrary-precision integer used for content-free row storage.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// High-precision binary float for the orthogonal-form construction.
// Default working precision is 256 bits; the acceptance tolerance for
// relation residues is 2^-100 and the internal zero cutoff is 2^-128.
using ApproxScalar = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

inline constexpr unsigned kApproxPrecisionBits = 256;

inline ApproxScalar make_approx(long v = 0) {
  ApproxScalar x(v);
  x.precision(boost::multiprecision::detail::digits2_2_10(kApproxPrecisionBits));
  return x;
}

inline ApproxScalar approx_from_rational(const Rational& q) {
  ApproxScalar num = make_approx();
  num.assign(numerator(q).str());
  ApproxScalar den = make_approx();
  den.assign(denominator(q).str());
  return num / den;
}

// 2^-128, the relative tolerance below which approx values count as zero.
inline ApproxScalar approx_zero_tolerance() {
  ApproxScalar t = make_approx(1);
  return ldexp(t, -128);
}

inline std::string rational_to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rational(num, den);
}

}  // namespace reflecta
