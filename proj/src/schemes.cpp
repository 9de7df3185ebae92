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

#include "wstate/schemes.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace wstate {

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kPathW:
      return "path-W";
    case SchemeKind::kPolarizationW:
      return "polarization-W";
    case SchemeKind::kDesignedPath:
      return "designed-path";
  }
  return "unknown";
}

namespace {

constexpr double kDistributionTolerance = 1e-12;
constexpr double kDesignTolerance = 1e-10;
constexpr char kNoReference[] = "computed, no published reference";

std::vector<double> single_photon_port_probabilities(const SuperposedState& state) {
  std::vector<double> probs(state.n_ports(), 0.0);
  for (std::size_t p = 0; p < state.n_ports(); ++p) {
    probs[p] = std::norm(state.amplitude(single_photon_state(p, Polarization::H, state.n_ports())));
  }
  return probs;
}

}  // namespace

SchemeReport run_path_w(std::size_t n, std::size_t input_port) {
  MultiportUnitary u = dft_multiport(n);
  if (input_port >= n) {
    throw std::invalid_argument("input port " + std::to_string(input_port) +
                                " out of range for n = " + std::to_string(n));
  }
  FockState input = single_photon_state(input_port, Polarization::H, n);
  SuperposedState out = evolve(u, input);
  SuperposedState target = w_state_path(n);
  const double f = fidelity(out, target);
  std::vector<double> probs = single_photon_port_probabilities(out);
  bool uniform = true;
  for (double p : probs) uniform = uniform && std::abs(p - 1.0 / static_cast<double>(n)) <= kDistributionTolerance;

  return SchemeReport{
      .kind = SchemeKind::kPathW,
      .n = n,
      .input_port = input_port,
      .unitary = std::move(u),
      .input = std::move(input),
      .output_state = std::move(out),
      .post_selection = std::nullopt,
      .target = std::move(target),
      .fidelity_to_target = f,
      .success_probability = 1.0,
      .port_probabilities = std::move(probs),
      .distribution_match = uniform,
      .reference = "published: success probability 1 for any n",
  };
}

MultiportUnitary polarization_w_coupler(std::size_t n) {
  return n == 4 ? hadamard_quarter() : dft_multiport(n);
}

SchemeReport run_polarization_w(std::size_t n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (n > static_cast<std::size_t>(kMaxPhotons)) {
    throw CapacityExceeded(std::to_string(n) + " photons exceed the enumeration cap of " +
                           std::to_string(kMaxPhotons));
  }
  return run_polarization_w(polarization_w_coupler(n));
}

SchemeReport run_polarization_w(const MultiportUnitary& coupler) {
  const std::size_t n = coupler.n();
  if (n > static_cast<std::size_t>(kMaxPhotons)) {
    throw CapacityExceeded(std::to_string(n) + " photons exceed the enumeration cap of " +
                           std::to_string(kMaxPhotons));
  }
  std::vector<std::pair<std::size_t, Polarization>> photons;
  for (std::size_t p = 0; p + 1 < n; ++p) photons.emplace_back(p, Polarization::H);
  photons.emplace_back(n - 1, Polarization::V);
  FockState input = product_input(photons, n);

  SuperposedState out = evolve(coupler, input);
  PostSelectionResult ps = postselect(out, CoincidencePattern::one_per_port());
  SuperposedState target = w_state_polarization(n);
  const double f = ps.vanished() ? 0.0 : fidelity(ps.conditional, target);

  bool equal_branches = !ps.vanished();
  const std::vector<std::pair<FockState, Complex>> kept =
      branch_amplitude_report(out, CoincidencePattern::one_per_port());
  for (const auto& [basis, amp] : kept) {
    equal_branches = equal_branches && basis.total(Polarization::V) == 1 &&
                     std::abs(amp - kept.front().second) <= kDistributionTolerance;
  }

  std::string reference = kNoReference;
  const bool stock_coupler = coupler == polarization_w_coupler(n);
  if (stock_coupler && n == 3) reference = "published: 1/9";
  if (stock_coupler && n == 4) reference = "published: 1/16";

  const double p = ps.probability;
  return SchemeReport{
      .kind = SchemeKind::kPolarizationW,
      .n = n,
      .input_port = std::nullopt,
      .unitary = coupler,
      .input = std::move(input),
      .output_state = std::move(out),
      .post_selection = std::move(ps),
      .target = std::move(target),
      .fidelity_to_target = f,
      .success_probability = p,
      .port_probabilities = {},
      .distribution_match = equal_branches,
      .reference = std::move(reference),
  };
}

SchemeReport run_designed_path(const TargetColumn& target) {
  MultiportUnitary u = complete_unitary_from_column(target);
  const std::size_t n = u.n();
  FockState input = single_photon_state(0, Polarization::H, n);
  SuperposedState out = evolve(u, input);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex got = out.amplitude(single_photon_state(k, Polarization::H, n));
    if (std::abs(got - target[k]) > kDesignTolerance) {
      throw std::runtime_error("designed coupler misses the target at port " + std::to_string(k));
    }
  }
  SuperposedState target_state = path_state_from_column(target);
  const double f = fidelity(out, target_state);
  std::vector<double> probs = single_photon_port_probabilities(out);

  return SchemeReport{
      .kind = SchemeKind::kDesignedPath,
      .n = n,
      .input_port = 0,
      .unitary = std::move(u),
      .input = std::move(input),
      .output_state = std::move(out),
      .post_selection = std::nullopt,
      .target = std::move(target_state),
      .fidelity_to_target = f,
      .success_probability = 1.0,
      .port_probabilities = std::move(probs),
      .distribution_match = true,
      .reference = "published: success probability 1 for any n",
  };
}

}  // namespace wstate
