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

#include "wstate/fock.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wstate {

char to_char(Polarization pol) { return pol == Polarization::H ? 'H' : 'V'; }

namespace {

std::uint8_t checked_count(int count) {
  if (count < 0) throw std::invalid_argument("occupation counts must be non-negative");
  if (count > FockState::kMaxModeCount) {
    throw std::invalid_argument("occupation count " + std::to_string(count) + " exceeds " +
                                std::to_string(FockState::kMaxModeCount));
  }
  return static_cast<std::uint8_t>(count);
}

void check_port(std::size_t port, std::size_t n_ports) {
  if (port >= n_ports) {
    throw std::invalid_argument("port " + std::to_string(port) + " out of range for " +
                                std::to_string(n_ports) + " ports");
  }
}

}  // namespace

FockState::FockState(std::size_t n_ports) : n_ports_(n_ports), counts_(2 * n_ports, 0) {
  if (n_ports == 0) throw std::invalid_argument("a Fock state needs at least one port");
}

FockState::FockState(std::size_t n_ports, const std::map<Mode, int>& occupations)
    : FockState(n_ports) {
  for (const auto& [mode, count] : occupations) {
    check_port(mode.port, n_ports_);
    counts_[index(mode)] = checked_count(count);
  }
}

FockState::FockState(std::span<const int> h_counts, std::span<const int> v_counts)
    : FockState(h_counts.size()) {
  if (v_counts.size() != h_counts.size()) {
    throw std::invalid_argument("H and V occupation vectors differ in length");
  }
  for (std::size_t p = 0; p < n_ports_; ++p) {
    counts_[p] = checked_count(h_counts[p]);
    counts_[n_ports_ + p] = checked_count(v_counts[p]);
  }
}

std::size_t FockState::index(Mode mode) const {
  return static_cast<std::size_t>(mode.pol) * n_ports_ + mode.port;
}

int FockState::count(Mode mode) const {
  check_port(mode.port, n_ports_);
  return counts_[index(mode)];
}

int FockState::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

int FockState::total(Polarization pol) const {
  const auto begin = counts_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(pol) * n_ports_);
  return std::accumulate(begin, begin + static_cast<std::ptrdiff_t>(n_ports_), 0);
}

int FockState::port_total(std::size_t port) const {
  check_port(port, n_ports_);
  return counts_[port] + counts_[n_ports_ + port];
}

std::vector<int> FockState::occupation_vector(Polarization pol) const {
  const std::size_t offset = static_cast<std::size_t>(pol) * n_ports_;
  return {counts_.begin() + static_cast<std::ptrdiff_t>(offset),
          counts_.begin() + static_cast<std::ptrdiff_t>(offset + n_ports_)};
}

std::map<Mode, int> FockState::occupations() const {
  std::map<Mode, int> out;
  for (std::size_t p = 0; p < n_ports_; ++p) {
    for (Polarization pol : kPolarizations) {
      const int c = counts_[index({p, pol})];
      if (c != 0) out.emplace(Mode{p, pol}, c);
    }
  }
  return out;
}

FockState FockState::with_count(Mode mode, int count) const {
  check_port(mode.port, n_ports_);
  FockState out = *this;
  out.counts_[index(mode)] = checked_count(count);
  return out;
}

std::string FockState::label() const {
  const bool has_v = total(Polarization::V) > 0;
  bool wide = false;
  std::vector<std::string> tokens;
  for (std::size_t p = 0; p < n_ports_; ++p) {
    const int h = counts_[p];
    const int v = counts_[n_ports_ + p];
    std::string token;
    if (!has_v) {
      token = std::to_string(h);
    } else if (h + v == 0) {
      token = "0";
    } else {
      token = std::string(static_cast<std::size_t>(h), 'H') + std::string(static_cast<std::size_t>(v), 'V');
    }
    wide = wide || token.size() > 1;
    tokens.push_back(std::move(token));
  }
  std::string out = "|";
  for (std::size_t p = 0; p < tokens.size(); ++p) {
    if (wide && p > 0) out += ',';
    out += tokens[p];
  }
  return out + ">";
}

std::size_t FockState::hash() const {
  std::size_t h = std::hash<std::size_t>{}(n_ports_);
  for (std::uint8_t c : counts_) h = h * 1099511628211ULL ^ c;
  return h;
}

SuperposedState::SuperposedState(std::size_t n_ports, Terms terms) : n_ports_(n_ports) {
  if (n_ports == 0) throw std::invalid_argument("a state needs at least one port");
  int h = -1;
  int v = -1;
  for (auto& [basis, amp] : terms) {
    if (basis.n_ports() != n_ports) {
      throw std::invalid_argument("term " + basis.label() + " has " +
                                  std::to_string(basis.n_ports()) + " ports, expected " +
                                  std::to_string(n_ports));
    }
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
      throw std::invalid_argument("non-finite amplitude on " + basis.label());
    }
    if (h < 0) {
      h = basis.total(Polarization::H);
      v = basis.total(Polarization::V);
    } else if (basis.total(Polarization::H) != h || basis.total(Polarization::V) != v) {
      throw std::invalid_argument("terms of a superposition must share per-polarization photon numbers");
    }
  }
  std::erase_if(terms, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
  terms_ = std::move(terms);
}

SuperposedState SuperposedState::normalized(std::size_t n_ports, Terms terms) {
  SuperposedState s(n_ports, std::move(terms));
  if (!s.empty() && !s.is_normalized()) {
    throw std::invalid_argument("state is not normalized (norm^2 = " +
                                std::to_string(s.norm_squared()) + ")");
  }
  return s;
}

SuperposedState SuperposedState::unnormalized(std::size_t n_ports, Terms terms) {
  return SuperposedState(n_ports, std::move(terms));
}

double SuperposedState::norm_squared() const {
  double total = 0.0;
  for (const auto& [basis, amp] : terms_) total += std::norm(amp);
  return total;
}

bool SuperposedState::is_normalized() const {
  return std::abs(norm_squared() - 1.0) <= kStateNormTolerance;
}

Complex SuperposedState::amplitude(const FockState& basis) const {
  const auto it = terms_.find(basis);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

int SuperposedState::photon_count(Polarization pol) const {
  return terms_.empty() ? 0 : terms_.begin()->first.total(pol);
}

FockState single_photon_state(std::size_t port, Polarization pol, std::size_t n_ports) {
  check_port(port, n_ports);
  return FockState(n_ports, {{Mode{port, pol}, 1}});
}

FockState product_input(std::span<const std::pair<std::size_t, Polarization>> photons,
                        std::size_t n_ports) {
  std::map<Mode, int> occ;
  for (const auto& [port, pol] : photons) {
    check_port(port, n_ports);
    ++occ[Mode{port, pol}];
  }
  return FockState(n_ports, occ);
}

namespace {

void check_w_size(std::size_t n) {
  if (n < 2) throw std::invalid_argument("a W state needs n >= 2");
}

FockState polarization_w_term(std::size_t n, std::size_t v_port) {
  std::map<Mode, int> occ;
  for (std::size_t p = 0; p < n; ++p) {
    occ.emplace(Mode{p, p == v_port ? Polarization::V : Polarization::H}, 1);
  }
  return FockState(n, occ);
}

}  // namespace

SuperposedState w_state_path(std::size_t n) {
  check_w_size(n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  SuperposedState::Terms terms;
  for (std::size_t p = 0; p < n; ++p) terms.emplace(single_photon_state(p, Polarization::H, n), amp);
  return SuperposedState::normalized(n, std::move(terms));
}

SuperposedState w_state_polarization(std::size_t n) {
  check_w_size(n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  SuperposedState::Terms terms;
  for (std::size_t p = 0; p < n; ++p) terms.emplace(polarization_w_term(n, p), amp);
  return SuperposedState::normalized(n, std::move(terms));
}

SuperposedState target_from_coefficients(const TargetColumn& coeffs, WKind kind) {
  const std::size_t n = coeffs.size();
  check_w_size(n);
  SuperposedState::Terms terms;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t port = n - 1 - k;
    FockState basis = kind == WKind::kPath ? single_photon_state(port, Polarization::H, n)
                                           : polarization_w_term(n, port);
    terms.emplace(std::move(basis), coeffs[k]);
  }
  return SuperposedState::normalized(n, std::move(terms));
}

SuperposedState path_state_from_column(const TargetColumn& column) {
  const std::size_t n = column.size();
  check_w_size(n);
  SuperposedState::Terms terms;
  for (std::size_t k = 0; k < n; ++k) {
    terms.emplace(single_photon_state(k, Polarization::H, n), column[k]);
  }
  return SuperposedState::normalized(n, std::move(terms));
}

}  // namespace wstate
