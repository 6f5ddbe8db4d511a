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

#include "restarts/scaled_rational.h"

#include <numeric>
#include <stdexcept>

namespace restarts {
namespace {

using Wide = __int128;

std::int64_t Narrow(Wide value) {
  if (value > INT64_MAX || value < INT64_MIN) {
    throw std::overflow_error("ScaledRational: numerator overflow");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace

ScaledRational::ScaledRational(std::int64_t num, std::int64_t scale)
    : num_(num), scale_(scale) {
  if (scale < 1) {
    throw std::invalid_argument("ScaledRational: scale must be >= 1");
  }
}

ScaledRational ScaledRational::Rescaled(std::int64_t scale) const {
  if (scale < 1) {
    throw std::invalid_argument("ScaledRational: scale must be >= 1");
  }
  Wide scaled = static_cast<Wide>(num_) * scale;
  if (scaled % scale_ != 0) {
    throw std::invalid_argument("ScaledRational: " + ToString() +
                                " is not on the 1/" + std::to_string(scale) +
                                " grid");
  }
  return {Narrow(scaled / scale_), scale};
}

std::int64_t ScaledRational::FloorAt(std::int64_t scale) const {
  Wide scaled = static_cast<Wide>(num_) * scale;
  Wide q = scaled / scale_;
  if (scaled % scale_ != 0 && scaled < 0) --q;
  return Narrow(q);
}

std::string ScaledRational::ToString() const {
  std::int64_t g = std::gcd(num_, scale_);
  if (g == 0) g = 1;
  std::int64_t n = num_ / g;
  std::int64_t d = scale_ / g;
  if (d == 1) return std::to_string(n);
  return std::to_string(n) + "/" + std::to_string(d);
}

ScaledRational operator+(const ScaledRational& a, const ScaledRational& b) {
  if (a.scale_ == b.scale_) {
    return {Narrow(static_cast<Wide>(a.num_) + b.num_), a.scale_};
  }
  std::int64_t l = std::lcm(a.scale_, b.scale_);
  Wide sum = static_cast<Wide>(a.num_) * (l / a.scale_) +
             static_cast<Wide>(b.num_) * (l / b.scale_);
  return {Narrow(sum), l};
}

ScaledRational operator-(const ScaledRational& a, const ScaledRational& b) {
  return a + (-b);
}

std::strong_ordering operator<=>(const ScaledRational& a,
                                 const ScaledRational& b) {
  Wide lhs = static_cast<Wide>(a.num_) * b.scale_;
  Wide rhs = static_cast<Wide>(b.num_) * a.scale_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ScaledRational& value) {
  return os << value.ToString();
}

}  // namespace restarts
