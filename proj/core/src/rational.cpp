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

#include "typdl/rational.hpp"

#include <cctype>

namespace typdl {

using boost::multiprecision::cpp_int;

bool parse_decimal(std::string_view text, Rational& out) {
  if (text.empty()) return false;
  cpp_int whole = 0;
  cpp_int frac = 0;
  cpp_int scale = 1;
  std::size_t i = 0;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    whole = whole * 10 + (text[i] - '0');
  }
  if (i == 0) return false;
  if (i < text.size() && text[i] == '.') {
    const std::size_t point = ++i;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      frac = frac * 10 + (text[i] - '0');
      scale *= 10;
    }
    if (i == point) return false;
  }
  if (i != text.size()) return false;
  out = Rational(whole) + Rational(frac, scale);
  return true;
}

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

bool has_finite_decimal(const Rational& r) {
  cpp_int d = denominator(r);
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

std::string to_decimal_string(const Rational& r, int digits) {
  cpp_int num = numerator(r);
  const cpp_int den = denominator(r);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  const bool exact = has_finite_decimal(r);
  cpp_int whole = num / den;
  cpp_int rem = num % den;
  std::string frac;
  if (exact) {
    while (rem != 0) {
      rem *= 10;
      frac.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
      rem %= den;
    }
  } else {
    // round half up at `digits`
    for (int k = 0; k < digits; ++k) {
      rem *= 10;
      frac.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
      rem %= den;
    }
    if (rem * 2 >= den) {
      int k = static_cast<int>(frac.size()) - 1;
      for (; k >= 0; --k) {
        if (frac[k] == '9') {
          frac[k] = '0';
        } else {
          ++frac[k];
          break;
        }
      }
      if (k < 0) whole += 1;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
  }
  std::string out = sign + whole.str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace typdl
