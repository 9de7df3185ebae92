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

#include "wstate/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace wstate {

std::uint64_t exact_factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  if (n > kMaxPhotons) {
    throw CapacityExceeded("factorial of " + std::to_string(n) + " exceeds the photon cap " +
                           std::to_string(kMaxPhotons));
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t pattern_count(std::size_t n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  // C(n-1+k, k) built incrementally; every partial product is itself a binomial.
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - 1) + static_cast<std::uint64_t>(i);
    if (c > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    c = c * num / static_cast<std::uint64_t>(i);
  }
  return c;
}

std::vector<std::vector<int>> occupation_patterns(std::size_t n, int k) {
  if (n == 0) throw std::invalid_argument("need at least one port");
  if (k < 0) throw std::invalid_argument("negative photon number");
  std::vector<std::vector<int>> out;
  std::vector<int> c(n, 0);
  c[n - 1] = k;
  while (true) {
    out.push_back(c);
    // Rightmost position below the last with photons somewhere to its right.
    int tail = c[n - 1];
    std::size_t i = n - 1;
    while (i > 0 && tail == 0) {
      --i;
      tail += c[i];
    }
    if (i == 0) break;
    // tail now counts photons in [i, n); step position i-1 up by one.
    --i;
    ++c[i];
    for (std::size_t j = i + 1; j < n; ++j) c[j] = 0;
    c[n - 1] = tail - 1;
  }
  return out;
}

ComplexMatrix lift_to_modes(const MultiportUnitary& u) {
  const std::size_t n = u.n();
  ComplexMatrix lifted(2 * n, 2 * n);
  for (std::size_t block = 0; block < 2; ++block) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) lifted(block * n + k, block * n + j) = u(k, j);
    }
  }
  return lifted;
}

namespace {

std::vector<std::size_t> repeated_ports(const std::vector<int>& occupation) {
  std::vector<std::size_t> ports;
  for (std::size_t p = 0; p < occupation.size(); ++p) {
    for (int c = 0; c < occupation[p]; ++c) ports.push_back(p);
  }
  return ports;
}

double factorial_norm(const std::vector<int>& occupation) {
  std::uint64_t prod = 1;
  for (int c : occupation) prod *= exact_factorial(c);
  return static_cast<double>(prod);
}

// Amplitude for one polarization sector: the photons at in_cols (with
// repetition) land on the occupation out_occ.
Complex sector_amplitude(const MultiportUnitary& u, const std::vector<std::size_t>& in_cols,
                         double in_norm, const std::vector<int>& out_occ) {
  if (in_cols.empty()) return 1.0;
  const std::vector<std::size_t> rows = repeated_ports(out_occ);
  const std::size_t k = in_cols.size();
  ComplexMatrix sub(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) sub(r, c) = u(rows[r], in_cols[c]);
  }
  return permanent(sub) / std::sqrt(in_norm * factorial_norm(out_occ));
}

void check_ports(const MultiportUnitary& u, const FockState& s) {
  if (s.n_ports() != u.n()) {
    throw std::invalid_argument("state has " + std::to_string(s.n_ports()) +
                                " ports but the coupler has " + std::to_string(u.n()));
  }
}

void check_photon_cap(const FockState& input) {
  if (input.total() > kMaxPhotons) {
    throw CapacityExceeded("input carries " + std::to_string(input.total()) +
                           " photons; the enumeration cap is " + std::to_string(kMaxPhotons));
  }
}

struct Sector {
  std::vector<std::vector<int>> patterns;
  std::vector<Complex> amplitudes;
};

Sector evolve_sector(const MultiportUnitary& u, const std::vector<int>& in_occ) {
  Sector sector;
  const int k = std::accumulate(in_occ.begin(), in_occ.end(), 0);
  sector.patterns = occupation_patterns(u.n(), k);
  sector.amplitudes.resize(sector.patterns.size());
  const std::vector<std::size_t> cols = repeated_ports(in_occ);
  const double in_norm = factorial_norm(in_occ);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      sector.amplitudes[i] = sector_amplitude(u, cols, in_norm, sector.patterns[i]);
    }
  };

  // Every slot is written by exactly one thread, so the result does not
  // depend on the thread count.
  const std::size_t count = sector.patterns.size();
  const double cost = static_cast<double>(count) * std::ldexp(1.0, k) * (k + 1);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t threads = cost < 1e6 ? 1 : std::min<std::size_t>(hw, count);
  if (threads <= 1) {
    work(0, count);
    return sector;
  }
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(count, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }
  return sector;
}

}  // namespace

Complex transition_amplitude(const MultiportUnitary& u, const FockState& input,
                             const FockState& output) {
  if (input.n_ports() != output.n_ports()) {
    throw std::invalid_argument("input and output states have different port counts");
  }
  check_ports(u, input);
  check_photon_cap(input);
  Complex amp = 1.0;
  for (Polarization pol : kPolarizations) {
    if (input.total(pol) != output.total(pol)) return 0.0;
    const std::vector<int> in_occ = input.occupation_vector(pol);
    amp *= sector_amplitude(u, repeated_ports(in_occ), factorial_norm(in_occ),
                            output.occupation_vector(pol));
  }
  return amp;
}

SuperposedState evolve(const MultiportUnitary& u, const FockState& input) {
  check_ports(u, input);
  check_photon_cap(input);
  const std::uint64_t h_patterns = pattern_count(u.n(), input.total(Polarization::H));
  const std::uint64_t v_patterns = pattern_count(u.n(), input.total(Polarization::V));
  if (h_patterns > kMaxPatternsPerPolarization || v_patterns > kMaxPatternsPerPolarization) {
    throw CapacityExceeded("output patterns per polarization (" +
                           std::to_string(std::max(h_patterns, v_patterns)) + ") exceed cap " +
                           std::to_string(kMaxPatternsPerPolarization));
  }
  if (h_patterns * v_patterns > kMaxOutputTerms) {
    throw CapacityExceeded("output terms (" + std::to_string(h_patterns * v_patterns) +
                           ") exceed cap " + std::to_string(kMaxOutputTerms));
  }

  const Sector h = evolve_sector(u, input.occupation_vector(Polarization::H));
  const Sector v = evolve_sector(u, input.occupation_vector(Polarization::V));

  // Both sectors come out in ascending order, so the H-major product is
  // already in FockState order and can be appended at the end of the map.
  SuperposedState::Terms terms;
  for (std::size_t i = 0; i < h.patterns.size(); ++i) {
    if (std::abs(h.amplitudes[i]) < kPruneThreshold) continue;
    for (std::size_t j = 0; j < v.patterns.size(); ++j) {
      const Complex amp = h.amplitudes[i] * v.amplitudes[j];
      if (std::abs(amp) < kPruneThreshold) continue;
      terms.emplace_hint(terms.end(), FockState(h.patterns[i], v.patterns[j]), amp);
    }
  }
  return SuperposedState::normalized(u.n(), std::move(terms));
}

SuperposedState oracle_evolve(const MultiportUnitary& u, const FockState& input) {
  check_ports(u, input);
  if (input.total() > kOracleMaxPhotons || u.n() > kOracleMaxPorts) {
    throw CapacityExceeded("oracle limited to " + std::to_string(kOracleMaxPhotons) +
                           " photons over " + std::to_string(kOracleMaxPorts) + " ports");
  }
  const std::size_t n = u.n();
  const std::size_t modes = 2 * n;
  const ComplexMatrix lifted = lift_to_modes(u);

  // Each input photon in mode m becomes sum_k L[k, m] a_k^dagger; multiply
  // these factors out as a polynomial in the output creation operators.
  std::map<std::vector<int>, Complex> poly{{std::vector<int>(modes, 0), Complex{1.0, 0.0}}};
  double input_norm = 1.0;
  for (std::size_t m = 0; m < modes; ++m) {
    const int count = input.count(Mode{m % n, m < n ? Polarization::H : Polarization::V});
    input_norm *= static_cast<double>(exact_factorial(count));
    for (int photon = 0; photon < count; ++photon) {
      std::map<std::vector<int>, Complex> next;
      for (const auto& [monomial, coeff] : poly) {
        for (std::size_t k = 0; k < modes; ++k) {
          if (lifted(k, m) == Complex{0.0, 0.0}) continue;
          std::vector<int> grown = monomial;
          ++grown[k];
          next[grown] += coeff * lifted(k, m);
        }
      }
      poly = std::move(next);
    }
  }

  // (a^dagger)^c |0> = sqrt(c!) |c>, and the input carries 1/sqrt(prod in!).
  SuperposedState::Terms terms;
  for (const auto& [monomial, coeff] : poly) {
    double bosonic = 1.0;
    for (int c : monomial) bosonic *= static_cast<double>(exact_factorial(c));
    const std::span<const int> all(monomial);
    terms.emplace(FockState(all.first(n), all.subspan(n)),
                  coeff * std::sqrt(bosonic / input_norm));
  }
  return SuperposedState::normalized(n, std::move(terms));
}

}  // namespace wstate
