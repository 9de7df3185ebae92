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

#include "wstate/postselect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wstate {

CoincidencePattern CoincidencePattern::one_per_port() {
  CoincidencePattern p;
  p.one_per_port_ = true;
  return p;
}

CoincidencePattern CoincidencePattern::explicit_counts(std::map<std::size_t, int> required) {
  for (const auto& [port, count] : required) {
    if (count < 0) {
      throw std::invalid_argument("required count at port " + std::to_string(port) +
                                  " is negative");
    }
  }
  CoincidencePattern p;
  p.required_ = std::move(required);
  return p;
}

void CoincidencePattern::validate(std::size_t n_ports) const {
  for (const auto& [port, count] : required_) {
    if (port >= n_ports) {
      throw std::invalid_argument("pattern references port " + std::to_string(port) +
                                  " of a " + std::to_string(n_ports) + "-port state");
    }
  }
}

bool CoincidencePattern::accepts(const FockState& basis) const {
  if (one_per_port_) {
    for (std::size_t p = 0; p < basis.n_ports(); ++p) {
      if (basis.port_total(p) != 1) return false;
    }
  }
  for (const auto& [port, count] : required_) {
    if (basis.port_total(port) != count) return false;
  }
  return true;
}

CoincidencePattern CoincidencePattern::tightened(std::size_t port, int count) const {
  if (count < 0) throw std::invalid_argument("required count must be non-negative");
  CoincidencePattern p = *this;
  p.required_[port] = count;
  return p;
}

namespace {

void check_normalized(const SuperposedState& s, const char* what) {
  if (!s.is_normalized()) {
    throw std::invalid_argument(std::string(what) + " is not normalized");
  }
}

}  // namespace

PostSelectionResult postselect(const SuperposedState& state, const CoincidencePattern& pattern) {
  pattern.validate(state.n_ports());
  check_normalized(state, "post-selected state");

  SuperposedState::Terms kept;
  double kept_p = 0.0;
  double dropped_p = 0.0;
  for (const auto& [basis, amp] : state.terms()) {
    if (pattern.accepts(basis)) {
      kept.emplace_hint(kept.end(), basis, amp);
      kept_p += std::norm(amp);
    } else {
      dropped_p += std::norm(amp);
    }
  }

  PostSelectionResult result{SuperposedState::normalized(state.n_ports(), {}), kept_p,
                             kept.size(), dropped_p};
  if (kept_p < kZeroProbability) return result;
  const double scale = 1.0 / std::sqrt(kept_p);
  for (auto& [basis, amp] : kept) amp *= scale;
  result.conditional = SuperposedState::normalized(state.n_ports(), std::move(kept));
  return result;
}

double fidelity(const SuperposedState& state, const SuperposedState& target) {
  if (state.n_ports() != target.n_ports()) {
    throw std::invalid_argument("fidelity between states with different port counts");
  }
  check_normalized(state, "state");
  check_normalized(target, "target");
  Complex overlap = 0.0;
  for (const auto& [basis, amp] : target.terms()) overlap += std::conj(amp) * state.amplitude(basis);
  // Clamp round-off that would push a perfect overlap past 1.
  return std::min(1.0, std::norm(overlap));
}

std::vector<std::pair<FockState, Complex>> branch_amplitude_report(
    const SuperposedState& state, const CoincidencePattern& pattern) {
  pattern.validate(state.n_ports());
  check_normalized(state, "reported state");
  std::vector<std::pair<FockState, Complex>> out;
  for (const auto& [basis, amp] : state.terms()) {
    if (pattern.accepts(basis)) out.emplace_back(basis, amp);
  }
  return out;
}

}  // namespace wstate
