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

#ifndef RDLAB_RATIONAL_H_
#define RDLAB_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rdlab {

// All values in the lab are exact. mpq_class keeps itself canonical after
// every arithmetic operation.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" (q > 0). Throws std::invalid_argument otherwise.
Rational ParseRational(std::string_view text);

// Canonical form: "0", "-3", "1/2", "-7/4". ParseRational(FormatRational(x))
// == x and the text is unique per value.
std::string FormatRational(const Rational& value);

// Fixed-point decimal rounded half away from zero, e.g. "0.333333333333".
std::string FormatDecimal(const Rational& value, int digits = 12);

inline Rational Pow2Neg(long exponent) {
  Rational r(1);
  if (exponent >= 0) {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), exponent);
  } else {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), -exponent);
  }
  r.canonicalize();
  return r;
}

}  // namespace rdlab

#endif  // RDLAB_RATIONAL_H_
