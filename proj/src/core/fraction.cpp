// Copyright 2026 The cforge Authors
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

#include "cforge/fraction.hpp"

#include <numeric>

namespace cforge {

Fraction::Fraction(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::invalid_argument("Fraction: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::string Fraction::to_decimal(int places) const
{
    std::int64_t scale = 1;
    for (int i = 0; i < places; ++i)
        scale *= 10;
    const bool negative = num_ < 0;
    const std::int64_t n = negative ? -num_ : num_;
    // round half up on the magnitude
    const std::int64_t scaled = (n * scale * 2 + den_) / (den_ * 2);
    std::string out = negative && scaled != 0 ? "-" : "";
    out += std::to_string(scaled / scale);
    if (places > 0) {
        std::string frac = std::to_string(scaled % scale);
        out += '.';
        out.append(static_cast<std::size_t>(places) - frac.size(), '0');
        out += frac;
    }
    return out;
}

Fraction operator+(const Fraction& a, const Fraction& b)
{
    const std::int64_t l = std::lcm(a.den_, b.den_);
    return Fraction(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

Fraction operator/(const Fraction& a, std::int64_t d)
{
    return Fraction(a.num_, a.den_ * d);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept
{
    // denominators are positive, so cross-multiplication preserves order
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

}  // namespace cforge
