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

#include "wstate/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "wstate/report_format.hpp"

namespace wstate {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("malformed JSON: " + what);
}

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) malformed(std::string(what) + " is not finite");
  return x;
}

std::size_t count_field(const Json& j, const char* key, std::size_t min_value) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(min_value)) {
    malformed(std::string("\"") + key + "\" must be an integer >= " + std::to_string(min_value));
  }
  return v.get<std::size_t>();
}

const Json& array_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    malformed(std::string("\"") + key + "\" must be an array");
  }
  return j.at(key);
}

// nlohmann throws its own exception types; surface them as invalid input.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) malformed("complex value must be [re, im]");
  return {finite_number(j[0], "real part"), finite_number(j[1], "imaginary part")};
}

Json matrix_to_json(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("only square matrices are serialized");
  Json entries = Json::array();
  for (const Complex& z : m.row_major()) entries.push_back(complex_to_json(z));
  return Json{{"n", m.rows()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  return guarded([&] {
    const std::size_t n = count_field(j, "n", 1);
    const Json& entries = array_field(j, "entries");
    if (entries.size() != n * n) {
      malformed("matrix with n = " + std::to_string(n) + " needs " + std::to_string(n * n) +
                " entries, got " + std::to_string(entries.size()));
    }
    std::vector<Complex> data;
    data.reserve(entries.size());
    for (const Json& e : entries) data.push_back(complex_from_json(e));
    return ComplexMatrix(n, n, std::move(data));
  });
}

std::vector<Complex> complex_vector_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_array()) malformed("expected an array of [re, im] pairs");
    std::vector<Complex> out;
    for (const Json& e : j) out.push_back(complex_from_json(e));
    return out;
  });
}

Json fock_to_json(const FockState& s) {
  Json occ = Json::array();
  for (const auto& [mode, count] : s.occupations()) {
    occ.push_back(Json{{"port", mode.port}, {"pol", std::string(1, to_char(mode.pol))}, {"count", count}});
  }
  return Json{{"nPorts", s.n_ports()}, {"occ", std::move(occ)}};
}

FockState fock_from_json(const Json& j) {
  return guarded([&] {
    const std::size_t n = count_field(j, "nPorts", 1);
    std::map<Mode, int> occ;
    for (const Json& e : array_field(j, "occ")) {
      const std::size_t port = count_field(e, "port", 0);
      if (port >= n) malformed("port " + std::to_string(port) + " out of range");
      if (!e.contains("pol") || !e.at("pol").is_string()) malformed("\"pol\" must be \"H\" or \"V\"");
      const std::string pol = e.at("pol").get<std::string>();
      if (pol != "H" && pol != "V") malformed("\"pol\" must be \"H\" or \"V\"");
      const Mode mode{port, pol == "H" ? Polarization::H : Polarization::V};
      if (occ.contains(mode)) malformed("mode listed twice");
      occ[mode] = static_cast<int>(count_field(e, "count", 0));
    }
    return FockState(n, occ);
  });
}

Json state_to_json(const SuperposedState& s) {
  Json terms = Json::array();
  for (const auto& [basis, amp] : s.terms()) {
    terms.push_back(Json{{"state", fock_to_json(basis)}, {"amp", complex_to_json(amp)}});
  }
  return Json{{"nPorts", s.n_ports()}, {"terms", std::move(terms)}};
}

SuperposedState state_from_json(const Json& j) {
  return guarded([&] {
    const std::size_t n = count_field(j, "nPorts", 1);
    SuperposedState::Terms terms;
    for (const Json& t : array_field(j, "terms")) {
      if (!t.is_object() || !t.contains("state") || !t.contains("amp")) {
        malformed("term needs \"state\" and \"amp\"");
      }
      auto [it, inserted] = terms.emplace(fock_from_json(t.at("state")), complex_from_json(t.at("amp")));
      if (!inserted) malformed("basis state " + it->first.label() + " listed twice");
    }
    return SuperposedState::normalized(n, std::move(terms));
  });
}

Json postselection_to_json(const PostSelectionResult& r) {
  return Json{{"probability", r.probability},
              {"droppedProbability", r.dropped_probability},
              {"keptTerms", r.kept_terms},
              {"conditional", state_to_json(r.conditional)}};
}

PostSelectionResult postselection_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object()) malformed("post-selection result must be an object");
    PostSelectionResult r{state_from_json(j.at("conditional")),
                          finite_number(j.at("probability"), "probability"),
                          count_field(j, "keptTerms", 0),
                          finite_number(j.at("droppedProbability"), "droppedProbability")};
    return r;
  });
}

Json report_to_json(const SchemeReport& r) {
  Json j{{"scheme", to_string(r.kind)},
         {"n", r.n},
         {"unitary", matrix_to_json(r.unitary.matrix())},
         {"input", fock_to_json(r.input)},
         {"outputState", state_to_json(r.output_state)},
         {"target", state_to_json(r.target)},
         {"fidelityToTarget", r.fidelity_to_target},
         {"successProbability", r.success_probability},
         {"distributionMatch", r.distribution_match},
         {"reference", r.reference}};
  if (r.input_port) j["inputPort"] = *r.input_port;
  if (r.post_selection) j["postSelection"] = postselection_to_json(*r.post_selection);
  if (!r.port_probabilities.empty()) j["portProbabilities"] = r.port_probabilities;
  const std::string exact = rational_annotation(r.success_probability);
  if (!exact.empty()) j["successProbabilityExact"] = exact;
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace wstate
