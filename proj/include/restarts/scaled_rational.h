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

#ifndef RESTARTS_SCALED_RATIONAL_H_
#define RESTARTS_SCALED_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace restarts {

// An element of (1/scale) * Z. Every hazing quantity derived from a goal of
// length r lives on the grid (1/r) * Z, so values are kept as an integer
// numerator over an explicit scale instead of a reduced fraction.
//
// Mixed-scale arithmetic moves both operands to the least common multiple of
// their scales. Comparison and equality are by value, so 14/2 == 7/1.
class ScaledRational {
 public:
  constexpr ScaledRational() = default;
  // Throws std::invalid_argument if scale < 1.
  ScaledRational(std::int64_t num, std::int64_t scale = 1);

  std::int64_t num() const { return num_; }
  std::int64_t scale() const { return scale_; }

  // Same value with denominator `scale`. Throws std::invalid_argument if the
  // value is not representable on that grid.
  ScaledRational Rescaled(std::int64_t scale) const;
  // Numerator on the grid (1/scale) * Z, rounding toward -infinity.
  std::int64_t FloorAt(std::int64_t scale) const;

  bool IsInteger() const { return num_ % scale_ == 0; }
  double ToDouble() const { return static_cast<double>(num_) / scale_; }

  // Reduced human-readable form: "17/2", "-3", "0".
  std::string ToString() const;

  ScaledRational operator-() const { return {-num_, scale_}; }
  friend ScaledRational operator+(const ScaledRational& a,
                                  const ScaledRational& b);
  friend ScaledRational operator-(const ScaledRational& a,
                                  const ScaledRational& b);
  ScaledRational& operator+=(const ScaledRational& other) {
    return *this = *this + other;
  }
  ScaledRational& operator-=(const ScaledRational& other) {
    return *this = *this - other;
  }

  friend std::strong_ordering operator<=>(const ScaledRational& a,
                                          const ScaledRational& b);
  friend bool operator==(const ScaledRational& a, const ScaledRational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  // Representation equality: same numerator and same scale.
  bool IdenticalTo(const ScaledRational& other) const {
    return num_ == other.num_ && scale_ == other.scale_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t scale_ = 1;
};

std::ostream& operator<<(std::ostream& os, const ScaledRational& value);

}  // namespace restarts

#endif  // RESTARTS_SCALED_RATIONAL_H_
