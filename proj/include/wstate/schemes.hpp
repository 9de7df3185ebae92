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

#ifndef WSTATE_SCHEMES_HPP
#define WSTATE_SCHEMES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wstate/evolve.hpp"
#include "wstate/fock.hpp"
#include "wstate/linalg.hpp"
#include "wstate/postselect.hpp"

namespace wstate {

enum class SchemeKind { kPathW, kPolarizationW, kDesignedPath };

std::string to_string(SchemeKind kind);

/// Outcome of one end-to-end run.
///
/// For single-photon schemes success_probability is exactly 1 and
/// post_selection is absent. port_probabilities holds |amplitude|^2 per output
/// port for those schemes; for the polarization scheme it is empty.
struct SchemeReport {
  SchemeKind kind;
  std::size_t n;
  std::optional<std::size_t> input_port;
  MultiportUnitary unitary;
  FockState input;
  SuperposedState output_state;
  std::optional<PostSelectionResult> post_selection;
  SuperposedState target;
  double fidelity_to_target;
  double success_probability;
  std::vector<double> port_probabilities;
  // Path: every port has probability 1/n within 1e-12, phases aside.
  // Polarization: every kept branch has one V photon and the kept amplitudes
  // agree within 1e-12.
  bool distribution_match;
  std::string reference;
};

/// A single H photon at input_port of dft_multiport(n), compared with the
/// uniform path W.
SchemeReport run_path_w(std::size_t n, std::size_t input_port);

/// The coupler the polarization scheme uses for n photons: the Hadamard
/// quarter for n = 4, dft_multiport(n) otherwise.
MultiportUnitary polarization_w_coupler(std::size_t n);

/// H photons at ports 0..n-2 and a V photon at port n-1 through
/// polarization_w_coupler(n), post-selected on one photon per port.
SchemeReport run_polarization_w(std::size_t n);

/// Same scheme through a caller-supplied coupler.
SchemeReport run_polarization_w(const MultiportUnitary& coupler);

/// Completes a coupler from target, sends a photon into port 0 and checks
/// that the output amplitudes reproduce target within 1e-10 (std::runtime_error otherwise).
SchemeReport run_designed_path(const TargetColumn& target);

}  // namespace wstate

#endif  // WSTATE_SCHEMES_HPP
