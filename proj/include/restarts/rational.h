// Copyright 2026 The Restarts Authors
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

#ifndef RESTARTS_RATIONAL_H_
#define RESTARTS_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "restarts/scaled_rational.h"

namespace restarts {

// Arbitrary-precision rational used wherever a discount factor enters:
// powers of beta = 1 - 2^-16 outgrow 64 bits after a handful of rounds.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational ToRational(const ScaledRational& value) {
  return Rational(value.num(), value.scale());
}

// Parses "P/Q" or "P" with optional leading '-'. Decimal and exponent forms
// are rejected. Throws std::invalid_argument.
Rational ParseRational(std::string_view text);

// "P/Q" in lowest terms, or "P" for integers.
std::string RationalToString(const Rational& value);

}  // namespace restarts

#endif  // RESTARTS_RATIONAL_H_
