// Copyright 2026 The rdlab Authors
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

#include "rdlab/rational.h"

#include <cctype>
#include <stdexcept>

namespace rdlab {
namespace {

bool IsIntegerLiteral(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"}
                                      : text.substr(slash + 1);
  if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den) || den.front() == '-') {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string FormatRational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string FormatDecimal(const Rational& value, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = sgn(value) < 0;
  const Rational magnitude = abs(value);
  // round(|x| * 10^digits) with ties away from zero
  mpz_class scaled = (magnitude.get_num() * scale * 2 + magnitude.get_den()) /
                     (magnitude.get_den() * 2);
  const mpz_class whole = scaled / scale;
  std::string frac = mpz_class(scaled % scale).get_str();
  if (static_cast<int>(frac.size()) < digits) {
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
  }
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace rdlab
