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

#ifndef COHO_RATIONAL_HPP
#define COHO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace coho {

/// Exact arbitrary-precision rational; all fraction/LP arithmetic uses it.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q" or "p" (decimal integers, optional leading '-').
Rational parse_rational(std::string_view text);

/// Canonical form: "p/q", or just "p" when the denominator is one.
std::string format_rational(const Rational& r);

/// Closest rational to x with denominator at most max_den, via the
/// continued-fraction convergent/semiconvergent walk.
Rational rationalize(double x, std::uint64_t max_den);

double to_double(const Rational& r);

}  // namespace coho

#endif  // COHO_RATIONAL_HPP
