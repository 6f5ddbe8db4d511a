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

#include "restarts/rational.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace restarts {
namespace {

bool AllDigits(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num_text = text;
  std::string_view den_text = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_text = text.substr(0, slash);
    den_text = text.substr(slash + 1);
  }
  if (!AllDigits(num_text) || !AllDigits(den_text)) {
    throw std::invalid_argument("expected an exact fraction P/Q, got '" +
                                original + "'");
  }
  BigInt num{std::string(num_text)};
  BigInt den{std::string(den_text)};
  if (den == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
  Rational value(num, den);
  return negative ? Rational(-value) : value;
}

std::string RationalToString(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace restarts
