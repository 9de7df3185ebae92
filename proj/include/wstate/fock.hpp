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

#ifndef WSTATE_FOCK_HPP
#define WSTATE_FOCK_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wstate/linalg.hpp"

namespace wstate {

enum class Polarization : std::uint8_t { H = 0, V = 1 };

inline constexpr Polarization kPolarizations[] = {Polarization::H, Polarization::V};

char to_char(Polarization pol);

/// A bosonic mode: a spatial port together with a polarization.
/// Ordered by (port, pol) with H < V.
struct Mode {
  std::size_t port = 0;
  Polarization pol = Polarization::H;

  friend auto operator<=>(const Mode&, const Mode&) = default;
};

/// Amplitudes smaller than this are dropped when a superposition is built.
inline constexpr double kPruneThreshold = 1e-12;

/// Tolerance of the normalization invariant of SuperposedState.
inline constexpr double kStateNormTolerance = 1e-9;

/// Occupation numbers over the 2 * n_ports modes of an n-port device.
///
/// Counts are stored densely, H sector first, so the natural ordering is
/// lexicographic over occupation vectors, H-sector major. Zero counts are
/// simply absent from occupations().
class FockState {
 public:
  /// Largest occupation a single mode may hold.
  static constexpr int kMaxModeCount = 255;

  /// The vacuum over n_ports ports.
  explicit FockState(std::size_t n_ports);
  FockState(std::size_t n_ports, const std::map<Mode, int>& occupations);
  /// Builds directly from per-polarization occupation vectors of length n_ports.
  FockState(std::span<const int> h_counts, std::span<const int> v_counts);

  std::size_t n_ports() const { return n_ports_; }
  int count(Mode mode) const;
  int total() const;
  int total(Polarization pol) const;
  /// Photons at a port summed over polarization.
  int port_total(std::size_t port) const;
  std::vector<int> occupation_vector(Polarization pol) const;

  /// Non-zero occupations sorted by (port, pol).
  std::map<Mode, int> occupations() const;

  /// Copy with the count of one mode replaced (0 removes it).
  FockState with_count(Mode mode, int count) const;

  /// Ket label: "|100>" when only H photons are present, otherwise one token
  /// per port such as "|HHV>" or "|HH,0,V>".
  std::string label() const;

  std::size_t hash() const;

  friend auto operator<=>(const FockState&, const FockState&) = default;
  friend bool operator==(const FockState&, const FockState&) = default;

 private:
  std::size_t index(Mode mode) const;

  std::size_t n_ports_ = 0;
  std::vector<std::uint8_t> counts_;
};

/// A finite superposition of Fock states over a common device, in the
/// deterministic FockState order. All terms share n_ports and the per
/// polarization photon numbers.
class SuperposedState {
 public:
  using Terms = std::map<FockState, Complex>;

  /// Builds a state that must be normalized within kStateNormTolerance.
  /// Terms below kPruneThreshold are dropped; the empty state is allowed and
  /// stands for "no state".
  static SuperposedState normalized(std::size_t n_ports, Terms terms);
  /// Builds an intermediate that is not required to be normalized.
  static SuperposedState unnormalized(std::size_t n_ports, Terms terms);

  std::size_t n_ports() const { return n_ports_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool is_normalized() const;
  double norm_squared() const;
  Complex amplitude(const FockState& basis) const;
  /// Photons of one polarization carried by every term (0 for the empty state).
  int photon_count(Polarization pol) const;

  friend bool operator==(const SuperposedState&, const SuperposedState&) = default;

 private:
  SuperposedState(std::size_t n_ports, Terms terms);

  std::size_t n_ports_ = 0;
  Terms terms_;
};

enum class WKind { kPath, kPolarization };

FockState single_photon_state(std::size_t port, Polarization pol, std::size_t n_ports);

/// Multiset of photons; several photons may share a mode.
FockState product_input(std::span<const std::pair<std::size_t, Polarization>> photons,
                        std::size_t n_ports);

/// Uniform single-photon path W over n ports, every term an H photon with amplitude 1/sqrt(n).
SuperposedState w_state_path(std::size_t n);

/// Uniform polarization W: one photon per port, a single V shared over the ports.
SuperposedState w_state_polarization(std::size_t n);

/// W-shaped state with the given coefficients. Coefficient k multiplies the
/// term whose excitation sits at port n-1-k, so the first coefficient goes
/// with |0...01> and |H...HV>.
SuperposedState target_from_coefficients(const TargetColumn& coeffs, WKind kind);

/// Single-photon path state whose amplitude at port k is column[k], the
/// state a photon entering port 0 of a coupler with that first column leaves in.
SuperposedState path_state_from_column(const TargetColumn& column);

}  // namespace wstate

template <>
struct std::hash<wstate::FockState> {
  std::size_t operator()(const wstate::FockState& s) const noexcept { return s.hash(); }
};

#endif  // WSTATE_FOCK_HPP
