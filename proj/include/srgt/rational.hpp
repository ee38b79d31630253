// Copyright 2026 The SRGT Authors
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

#ifndef SRGT_RATIONAL_HPP_
#define SRGT_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace srgt {

// Exact rational scalar used by all pure-strategy analysis and by the
// support-enumeration solver. Arbitrary precision so that Gaussian
// elimination never overflows.
using Rat = boost::multiprecision::cpp_rational;

// Accepts "3", "-10", "+7", "1/2", "-3/4". Throws ParseError on anything
// else (including a zero denominator).
Rat parse_rational(std::string_view text);

// Canonical form: "3" for integers, "1/2" otherwise (sign on the numerator).
std::string to_string(const Rat& value);

double to_double(const Rat& value);

}  // namespace srgt

#endif  // SRGT_RATIONAL_HPP_
