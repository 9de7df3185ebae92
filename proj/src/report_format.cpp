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

#include "wstate/report_format.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace wstate {

std::optional<OutputFormat> parse_output_format(const std::string& text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "table") return OutputFormat::kTable;
  return std::nullopt;
}

std::optional<Rational> nearest_rational(double x, long max_denominator, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  for (long q = 1; q <= max_denominator; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    if (std::abs(x - p / static_cast<double>(q)) <= tol) {
      return Rational{static_cast<long>(p), q};
    }
  }
  return std::nullopt;
}

std::string rational_annotation(double x) {
  const std::optional<Rational> r = nearest_rational(x);
  if (!r || r->denominator == 1) return "";
  return std::to_string(r->numerator) + "/" + std::to_string(r->denominator);
}

std::string format_real(double x) {
  // Collapse -0 so that round-off on either side of zero prints the same.
  if (std::abs(x) < 5e-13) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_probability(double x) {
  const std::string exact = rational_annotation(x);
  return exact.empty() ? format_real(x) : format_real(x) + " (" + exact + ")";
}

std::string format_complex(Complex z) {
  const std::string re = format_real(z.real());
  const std::string im = format_real(z.imag());
  return re + (im.front() == '-' ? "" : "+") + im + "i";
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

void kv(std::ostringstream& os, const std::string& key, const std::string& value) {
  os << pad(key, 22) << value << "\n";
}

std::size_t label_width(const SuperposedState& state) {
  std::size_t w = 6;
  for (const auto& [basis, amp] : state.terms()) w = std::max(w, basis.label().size() + 2);
  return w;
}

void term_rows(std::ostringstream& os, const SuperposedState& state) {
  const std::size_t w = label_width(state);
  os << pad("state", w) << pad("amplitude", 34) << "probability\n";
  for (const auto& [basis, amp] : state.terms()) {
    os << pad(basis.label(), w) << pad(format_complex(amp), 34) << format_probability(std::norm(amp))
       << "\n";
  }
}

}  // namespace

std::string format_state_table(const SuperposedState& state) {
  std::ostringstream os;
  kv(os, "ports", std::to_string(state.n_ports()));
  kv(os, "terms", std::to_string(state.size()));
  term_rows(os, state);
  return os.str();
}

std::string format_state_csv(const SuperposedState& state, const CoincidencePattern* pattern) {
  std::ostringstream os;
  os << "state,re,im,probability" << (pattern ? ",kept" : "") << "\n";
  for (const auto& [basis, amp] : state.terms()) {
    os << '"' << basis.label() << "\"," << format_real(amp.real()) << "," << format_real(amp.imag()) << ","
       << format_real(std::norm(amp));
    if (pattern) os << "," << (pattern->accepts(basis) ? 1 : 0);
    os << "\n";
  }
  return os.str();
}

std::string format_postselection_table(const PostSelectionResult& r) {
  std::ostringstream os;
  kv(os, "probability", format_probability(r.probability));
  kv(os, "dropped probability", format_probability(r.dropped_probability));
  kv(os, "kept terms", std::to_string(r.kept_terms));
  if (r.vanished()) {
    kv(os, "conditional state", "none (destructive interference)");
  } else {
    os << "conditional state:\n";
    term_rows(os, r.conditional);
  }
  return os.str();
}

std::string format_report_table(const SchemeReport& r) {
  std::ostringstream os;
  kv(os, "scheme", to_string(r.kind));
  kv(os, "n", std::to_string(r.n));
  if (r.input_port) kv(os, "input port", std::to_string(*r.input_port));
  kv(os, "success probability", format_probability(r.success_probability));
  kv(os, "fidelity to target", format_real(r.fidelity_to_target));
  kv(os, r.kind == SchemeKind::kPolarizationW ? "equal branches" : "uniform distribution",
     r.distribution_match ? "yes" : "no");
  kv(os, "reference", r.reference);
  if (!r.port_probabilities.empty()) {
    os << pad("port", 6) << pad("amplitude", 34) << "probability\n";
    for (std::size_t p = 0; p < r.n; ++p) {
      const Complex amp = r.output_state.amplitude(single_photon_state(p, Polarization::H, r.n));
      os << pad(std::to_string(p), 6) << pad(format_complex(amp), 34)
         << format_probability(r.port_probabilities[p]) << "\n";
    }
  }
  if (r.post_selection) {
    os << "post-selection (one photon per port):\n";
    os << format_postselection_table(*r.post_selection);
  }
  return os.str();
}

std::string format_report_csv(const SchemeReport& r) {
  std::ostringstream os;
  if (!r.port_probabilities.empty()) {
    os << "port,probability\n";
    for (std::size_t p = 0; p < r.port_probabilities.size(); ++p) {
      os << p << "," << format_real(r.port_probabilities[p]) << "\n";
    }
    return os.str();
  }
  os << "key,value\n";
  os << "scheme," << to_string(r.kind) << "\n";
  os << "n," << r.n << "\n";
  os << "probability," << format_real(r.success_probability) << "\n";
  if (r.post_selection) {
    os << "droppedProbability," << format_real(r.post_selection->dropped_probability) << "\n";
    os << "keptTerms," << r.post_selection->kept_terms << "\n";
  }
  os << "fidelity," << format_real(r.fidelity_to_target) << "\n";
  os << "distributionMatch," << (r.distribution_match ? 1 : 0) << "\n";
  os << "reference,\"" << r.reference << "\"\n";
  return os.str();
}

}  // namespace wstate
