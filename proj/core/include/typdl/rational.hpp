// Copyright 2026 The typdl Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TYPDL_RATIONAL_HPP
#define TYPDL_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace typdl {

/// Exact rational number. Probabilities are never stored as floating point.
using Rational = boost::multiprecision::cpp_rational;

/// Parses a plain decimal literal such as "0.8" or "1" into an exact value.
/// Returns false on malformed input.
bool parse_decimal(std::string_view text, Rational& out);

/// "num/den" in lowest terms ("1" style output is never used; 1 is "1/1").
std::string to_fraction_string(const Rational& r);

/// Exact decimal expansion when the denominator has only factors 2 and 5,
/// otherwise rounded to `digits` fractional digits.
std::string to_decimal_string(const Rational& r, int digits = 20);

/// True iff the decimal expansion of r terminates.
bool has_finite_decimal(const Rational& r);

}  // namespace typdl

#endif  // TYPDL_RATIONAL_HPP
