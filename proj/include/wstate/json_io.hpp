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

// JSON encodings used by the command line tool:
//
//   matrix      { "n": n, "entries": [[re, im], ...] }            row-major, n*n pairs
//   FockState   { "nPorts": n, "occ": [{"port": p, "pol": "H", "count": c}, ...] }
//   state       { "nPorts": n, "terms": [{"state": FockState, "amp": [re, im]}, ...] }
//   postselect  { "probability": x, "droppedProbability": y, "keptTerms": m,
//                 "conditional": state }
//
// Doubles are written in shortest round-trip form. Readers throw
// std::invalid_argument on malformed, non-square or non-finite input.

#ifndef WSTATE_JSON_IO_HPP
#define WSTATE_JSON_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "wstate/fock.hpp"
#include "wstate/linalg.hpp"
#include "wstate/postselect.hpp"
#include "wstate/schemes.hpp"

namespace wstate {

using Json = nlohmann::json;

/// File could not be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const ComplexMatrix& m);
/// Square and finite; unitarity is left to the caller.
ComplexMatrix matrix_from_json(const Json& j);

/// JSON array of [re, im] pairs.
std::vector<Complex> complex_vector_from_json(const Json& j);

Json fock_to_json(const FockState& s);
FockState fock_from_json(const Json& j);

Json state_to_json(const SuperposedState& s);
SuperposedState state_from_json(const Json& j);

Json postselection_to_json(const PostSelectionResult& r);
PostSelectionResult postselection_from_json(const Json& j);

Json report_to_json(const SchemeReport& r);

/// Parses a file as JSON (std::invalid_argument on syntax errors, IoError if unreadable).
Json read_json_file(const std::filesystem::path& path);
/// Writes text, creating or truncating path (IoError on failure).
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace wstate

#endif  // WSTATE_JSON_IO_HPP
