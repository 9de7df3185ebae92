// Copyright 2026 The wstate Authors
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

#ifndef WSTATE_REPORT_FORMAT_HPP
#define WSTATE_REPORT_FORMAT_HPP

#include <optional>
#include <string>

#include "wstate/linalg.hpp"
#include "wstate/postselect.hpp"
#include "wstate/schemes.hpp"

namespace wstate {

enum class OutputFormat { kJson, kCsv, kTable };

/// Parses "json", "csv" or "table".
std::optional<OutputFormat> parse_output_format(const std::string& text);

struct Rational {
  long numerator = 0;
  long denominator = 1;
};

/// Smallest-denominator p/q with q <= max_denominator and |x - p/q| <= tol.
std::optional<Rational> nearest_rational(double x, long max_denominator = 64, double tol = 1e-12);

/// "p/q", or empty when x is not close to a fraction with a denominator above 1.
std::string rational_annotation(double x);

/// 12 significant digits.
std::string format_real(double x);
/// 12 significant digits plus " (p/q)" when rational_annotation finds one.
std::string format_probability(double x);
std::string format_complex(Complex z);

std::string format_state_table(const SuperposedState& state);
std::string format_state_csv(const SuperposedState& state,
                             const CoincidencePattern* pattern = nullptr);
std::string format_postselection_table(const PostSelectionResult& r);

std::string format_report_table(const SchemeReport& r);
/// Path schemes: "port,probability" rows. Polarization: "key,value" rows.
std::string format_report_csv(const SchemeReport& r);

}  // namespace wstate

#endif  // WSTATE_REPORT_FORMAT_HPP
