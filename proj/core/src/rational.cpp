// Copyright 2026 The coho authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coho/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace coho {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator");
    }
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
  }
}

std::string format_rational(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

Rational rationalize(double x, std::uint64_t max_den) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("rationalize: non-finite input");
  }
  bool negative = x < 0;
  double v = std::fabs(x);
  // Convergents p/q of the continued fraction of v.
  std::uint64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > static_cast<double>(UINT64_MAX / 2)) break;
    std::uint64_t a = static_cast<std::uint64_t>(fl);
    std::uint64_t p2 = a * p1 + p0;
    std::uint64_t q2 = a * q1 + q0;
    if (q2 > max_den) {
      // Best semiconvergent that still fits the bound.
      std::uint64_t k = (max_den - q0) / q1;
      std::uint64_t ps = k * p1 + p0, qs = k * q1 + q0;
      Rational semi(BigInt(ps), BigInt(qs));
      Rational conv(BigInt(p1), BigInt(q1));
      Rational vx(v);  // exact binary value of the double
      Rational best = boost::multiprecision::abs(semi - vx) <
                              boost::multiprecision::abs(conv - vx)
                          ? semi
                          : conv;
      return negative ? -best : best;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  Rational best(BigInt(p1), BigInt(q1));
  return negative ? -best : best;
}

double to_double(const Rational& r) {
  return r.convert_to<double>();
}

}  // namespace coho
