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

#ifndef WSTATE_POSTSELECT_HPP
#define WSTATE_POSTSELECT_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "wstate/fock.hpp"

namespace wstate {

/// Below this the post-selected branch is treated as destructive
/// interference rather than renormalized.
inline constexpr double kZeroProbability = 1e-12;

/// Detector predicate on photon counts per spatial port, summed over
/// polarization (polarization is resolved after the coincidence).
class CoincidencePattern {
 public:
  /// Exactly one photon in every one of the device's ports.
  static CoincidencePattern one_per_port();
  /// The listed ports must hold exactly the given counts; other ports are free.
  /// An empty map accepts every term.
  static CoincidencePattern explicit_counts(std::map<std::size_t, int> required);

  bool is_one_per_port() const { return one_per_port_; }
  const std::map<std::size_t, int>& required() const { return required_; }

  /// Throws std::invalid_argument if the pattern names a port >= n_ports.
  void validate(std::size_t n_ports) const;
  bool accepts(const FockState& basis) const;

  /// Same pattern with one more port constraint.
  CoincidencePattern tightened(std::size_t port, int count) const;

 private:
  bool one_per_port_ = false;
  std::map<std::size_t, int> required_;
};

struct PostSelectionResult {
  /// Renormalized kept branch; empty when probability < kZeroProbability.
  SuperposedState conditional;
  double probability = 0.0;
  std::size_t kept_terms = 0;
  double dropped_probability = 0.0;

  bool vanished() const { return conditional.empty(); }
};

PostSelectionResult postselect(const SuperposedState& state, const CoincidencePattern& pattern);

/// |<target|state>|^2 for normalized pure states.
double fidelity(const SuperposedState& state, const SuperposedState& target);

/// The kept terms with their amplitudes before renormalization.
std::vector<std::pair<FockState, Complex>> branch_amplitude_report(
    const SuperposedState& state, const CoincidencePattern& pattern);

}  // namespace wstate

#endif  // WSTATE_POSTSELECT_HPP
