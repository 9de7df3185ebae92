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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unordered_set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "wstate/fock.hpp"

using namespace wstate;
using P = Polarization;

TEST_CASE("single_photon_state") {
  const FockState s = single_photon_state(0, P::H, 3);
  CHECK(s.total() == 1);
  CHECK(s.count({0, P::H}) == 1);
  CHECK(s.total(P::V) == 0);
  CHECK(s.label() == "|100>");

  const FockState v = single_photon_state(2, P::V, 3);
  CHECK(v.occupations() == std::map<Mode, int>{{Mode{2, P::V}, 1}});

  CHECK_THROWS_AS(single_photon_state(5, P::H, 4), std::invalid_argument);
}

TEST_CASE("product_input uses multiset counts") {
  const std::vector<std::pair<std::size_t, P>> three = {{0, P::H}, {1, P::H}, {2, P::V}};
  const FockState s = product_input(three, 3);
  CHECK(s.total(P::H) == 2);
  CHECK(s.total(P::V) == 1);
  CHECK(s.label() == "|HHV>");

  const std::vector<std::pair<std::size_t, P>> pair = {{0, P::H}, {0, P::H}};
  CHECK(product_input(pair, 2).count({0, P::H}) == 2);

  const std::vector<std::pair<std::size_t, P>> four = {{0, P::H}, {1, P::H}, {2, P::H}, {3, P::V}};
  const FockState f = product_input(four, 4);
  CHECK(f.total() == 4);
  CHECK(f.label() == "|HHHV>");

  const std::vector<std::pair<std::size_t, P>> bad = {{4, P::H}};
  CHECK_THROWS_AS(product_input(bad, 4), std::invalid_argument);
}

TEST_CASE("product_input is order-free") {
  std::vector<std::pair<std::size_t, P>> photons = {{0, P::H}, {2, P::V}, {1, P::H}, {2, P::H}};
  const FockState reference = product_input(photons, 3);
  std::sort(photons.begin(), photons.end());
  do {
    CHECK(product_input(photons, 3) == reference);
  } while (std::next_permutation(photons.begin(), photons.end()));
}

TEST_CASE("canonical form and structural equality") {
  const FockState s = single_photon_state(1, P::H, 3);
  const FockState padded = s.with_count({2, P::V}, 0);
  CHECK(padded == s);
  CHECK(padded.hash() == s.hash());
  CHECK(padded.occupations().size() == 1);

  const FockState bumped = s.with_count({2, P::V}, 1);
  CHECK(bumped != s);
  CHECK(bumped.with_count({2, P::V}, 0) == s);

  std::unordered_set<FockState> set{s, padded, bumped};
  CHECK(set.size() == 2);

  CHECK_THROWS_AS(s.with_count({0, P::H}, -1), std::invalid_argument);
  CHECK_THROWS_AS(FockState(3, {{Mode{3, P::H}, 1}}), std::invalid_argument);
}

TEST_CASE("ordering is lexicographic over occupation vectors, H sector first") {
  const std::vector<int> zero = {0, 0, 0};
  const FockState a(std::vector<int>{0, 0, 1}, zero);
  const FockState b(std::vector<int>{0, 1, 0}, zero);
  const FockState c(std::vector<int>{1, 0, 0}, zero);
  CHECK(a < b);
  CHECK(b < c);
  const FockState hv(std::vector<int>{0, 1, 1}, std::vector<int>{1, 0, 0});
  const FockState vh(std::vector<int>{1, 1, 0}, std::vector<int>{0, 0, 1});
  CHECK(hv < vh);
}

TEST_CASE("labels") {
  CHECK(FockState(std::vector<int>{2, 0, 1}, std::vector<int>{0, 0, 0}).label() == "|201>");
  CHECK(FockState(std::vector<int>{2, 0, 0}, std::vector<int>{0, 0, 1}).label() == "|HH,0,V>");
  CHECK(FockState(3).label() == "|000>");
}

TEST_CASE("w_state_path") {
  const SuperposedState w3 = w_state_path(3);
  CHECK(w3.size() == 3);
  CHECK(w3.norm_squared() == doctest::Approx(1.0).epsilon(1e-15));
  for (std::size_t p = 0; p < 3; ++p) {
    CHECK(w3.amplitude(single_photon_state(p, P::H, 3)) == Complex(1.0 / std::sqrt(3.0), 0.0));
  }
  CHECK(w_state_path(2).size() == 2);
  const SuperposedState w4 = w_state_path(4);
  for (const auto& [basis, amp] : w4.terms()) CHECK(amp == Complex(0.5, 0.0));
  CHECK_THROWS_AS(w_state_path(1), std::invalid_argument);
}

TEST_CASE("w_state_polarization") {
  const SuperposedState w3 = w_state_polarization(3);
  std::vector<std::string> labels;
  for (const auto& [basis, amp] : w3.terms()) {
    labels.push_back(basis.label());
    CHECK(amp == Complex(1.0 / std::sqrt(3.0), 0.0));
    CHECK(basis.total(P::V) == 1);
  }
  CHECK(labels == std::vector<std::string>{"|VHH>", "|HVH>", "|HHV>"});

  const SuperposedState w4 = w_state_polarization(4);
  CHECK(w4.size() == 4);
  for (const auto& [basis, amp] : w4.terms()) CHECK(amp == Complex(0.5, 0.0));
  CHECK(w_state_polarization(2).size() == 2);
  CHECK(w4.is_normalized());
  CHECK_THROWS_AS(w_state_polarization(0), std::invalid_argument);
}

TEST_CASE("target_from_coefficients follows the V-at-last-port-first order") {
  SUBCASE("basis coefficient lands on the last port") {
    const SuperposedState s = target_from_coefficients(TargetColumn({1.0, 0.0, 0.0}), WKind::kPath);
    CHECK(s.size() == 1);
    CHECK(s.terms().begin()->first == single_photon_state(2, P::H, 3));
  }
  SUBCASE("clone coefficients") {
    const double a = std::sqrt(2.0 / 3.0), b = -std::sqrt(1.0 / 6.0);
    const SuperposedState s = target_from_coefficients(TargetColumn({a, b, b}), WKind::kPath);
    CHECK(s.amplitude(single_photon_state(2, P::H, 3)) == Complex(a, 0.0));
    CHECK(s.amplitude(single_photon_state(1, P::H, 3)) == Complex(b, 0.0));
    CHECK(s.amplitude(single_photon_state(0, P::H, 3)) == Complex(b, 0.0));
  }
  SUBCASE("uniform coefficients reproduce the W constructors") {
    for (std::size_t n = 2; n <= 6; ++n) {
      const double s = 1.0 / std::sqrt(static_cast<double>(n));
      const TargetColumn uniform(std::vector<Complex>(n, s));
      const SuperposedState pol = target_from_coefficients(uniform, WKind::kPolarization);
      const SuperposedState path = target_from_coefficients(uniform, WKind::kPath);
      CHECK(testing::max_term_difference(pol, w_state_polarization(n)) <= 1e-12);
      CHECK(testing::max_term_difference(path, w_state_path(n)) <= 1e-12);
    }
  }
  SUBCASE("first coefficient multiplies |H...HV>") {
    const SuperposedState s =
        target_from_coefficients(TargetColumn({0.6, 0.8, 0.0}), WKind::kPolarization);
    const std::vector<std::pair<std::size_t, P>> hhv = {{0, P::H}, {1, P::H}, {2, P::V}};
    CHECK(s.amplitude(product_input(hhv, 3)) == Complex(0.6, 0.0));
  }
  CHECK_THROWS_AS(TargetColumn({0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("SuperposedState invariants") {
  const FockState a = single_photon_state(0, P::H, 2);
  const FockState b = single_photon_state(1, P::H, 2);
  const FockState v = single_photon_state(1, P::V, 2);

  CHECK_THROWS_AS(SuperposedState::normalized(2, {{a, 1.0}, {b, 1.0}}), std::invalid_argument);
  CHECK_NOTHROW(SuperposedState::unnormalized(2, {{a, 1.0}, {b, 1.0}}));
  CHECK_THROWS_AS(SuperposedState::normalized(2, {{a, 0.6}, {v, 0.8}}), std::invalid_argument);
  CHECK_THROWS_AS(SuperposedState::normalized(3, {{a, 1.0}}), std::invalid_argument);

  const SuperposedState pruned = SuperposedState::normalized(2, {{a, 1.0}, {b, 1e-13}});
  CHECK(pruned.size() == 1);
  CHECK(pruned.photon_count(P::H) == 1);
  CHECK(SuperposedState::normalized(2, {}).empty());
}
