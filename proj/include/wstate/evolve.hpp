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

#ifndef WSTATE_EVOLVE_HPP
#define WSTATE_EVOLVE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wstate/fock.hpp"
#include "wstate/linalg.hpp"

namespace wstate {

// Enumeration caps for evolve().
inline constexpr int kMaxPhotons = 12;
inline constexpr std::uint64_t kMaxPatternsPerPolarization = 1'000'000;
inline constexpr std::uint64_t kMaxOutputTerms = 4'000'000;

// Caps for oracle_evolve().
inline constexpr int kOracleMaxPhotons = 4;
inline constexpr std::size_t kOracleMaxPorts = 4;

/// n! for 0 <= n <= kMaxPhotons; CapacityExceeded above.
std::uint64_t exact_factorial(int n);

/// Number of ways to put k photons into n ports, C(n + k - 1, k). Saturates
/// at UINT64_MAX instead of overflowing.
std::uint64_t pattern_count(std::size_t n, int k);

/// All occupation vectors of k photons over n ports in ascending lexicographic order.
std::vector<std::vector<int>> occupation_patterns(std::size_t n, int k);

/// The 2n x 2n mode-level matrix, modes indexed pol * n + port. The coupler
/// acts identically on both polarizations and never mixes them.
ComplexMatrix lift_to_modes(const MultiportUnitary& u);

/// <output| U |input> via permanents of the row/column-repeated submatrix
/// with factorial normalization; zero when the per-polarization photon
/// numbers differ.
Complex transition_amplitude(const MultiportUnitary& u, const FockState& input,
                             const FockState& output);

/// Full output state of a Fock input. H and V photons are evolved as two
/// independent spatial problems and the sector amplitudes multiplied.
/// Throws CapacityExceeded past kMaxPhotons, kMaxPatternsPerPolarization or
/// kMaxOutputTerms.
SuperposedState evolve(const MultiportUnitary& u, const FockState& input);

/// Reference evolution: expands the product of transformed creation
/// operators over the lifted matrix and collects monomials with sqrt(n!)
/// bosonic normalization. Limited to kOracleMaxPhotons / kOracleMaxPorts.
SuperposedState oracle_evolve(const MultiportUnitary& u, const FockState& input);

}  // namespace wstate

#endif  // WSTATE_EVOLVE_HPP
