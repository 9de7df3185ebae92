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

#include "wstate/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wstate/evolve.hpp"
#include "wstate/json_io.hpp"
#include "wstate/report_format.hpp"
#include "wstate/schemes.hpp"

namespace wstate::cli {

namespace {

struct Options {
  long n = 0;
  long input_port = 0;
  std::string format = "table";
  std::string matrix_path;
  std::string input_path;
  std::string out_path;
  std::string postselect;
};

// Failure with a known exit code and message.
struct CommandError {
  int code;
  std::string message;
};

OutputFormat require_format(const std::string& text) {
  const std::optional<OutputFormat> f = parse_output_format(text);
  if (!f) throw CommandError{kExitInvalidInput, "unknown format '" + text + "' (json, csv or table)"};
  return *f;
}

std::size_t require_n(long n) {
  if (n < 2) throw CommandError{kExitInvalidInput, "n must be ≥ 2"};
  return static_cast<std::size_t>(n);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// "one-per-port", or "port=count" pairs separated by commas.
CoincidencePattern parse_pattern(const std::string& text) {
  if (text == "one-per-port") return CoincidencePattern::one_per_port();
  std::map<std::size_t, int> required;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    std::size_t port = 0;
    int count = 0;
    try {
      if (eq == std::string::npos) throw std::invalid_argument(item);
      std::size_t used = 0;
      const long p = std::stol(item.substr(0, eq), &used);
      if (used != eq || p < 0) throw std::invalid_argument(item);
      const std::string rhs = item.substr(eq + 1);
      count = std::stoi(rhs, &used);
      if (used != rhs.size()) throw std::invalid_argument(item);
      port = static_cast<std::size_t>(p);
    } catch (const std::exception&) {
      throw CommandError{kExitInvalidInput,
                         "bad --postselect '" + text + "' (one-per-port or port=count,...)"};
    }
    required[port] = count;
  }
  if (required.empty()) throw CommandError{kExitInvalidInput, "empty --postselect pattern"};
  return CoincidencePattern::explicit_counts(std::move(required));
}

void emit(std::ostream& out, const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_text_file(out_path, text);
  }
}

void print_report(std::ostream& out, const SchemeReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson:
      out << dump(report_to_json(r));
      break;
    case OutputFormat::kCsv:
      out << format_report_csv(r);
      break;
    case OutputFormat::kTable:
      out << format_report_table(r);
      break;
  }
}

int cmd_multiport(const Options& o, std::ostream& out) {
  const std::size_t n = require_n(o.n);
  emit(out, dump(matrix_to_json(dft_multiport(n).matrix())), o.out_path);
  return kExitOk;
}

int cmd_path_w(const Options& o, std::ostream& out) {
  const OutputFormat f = require_format(o.format);
  const std::size_t n = require_n(o.n);
  if (o.input_port < 0 || static_cast<std::size_t>(o.input_port) >= n) {
    throw CommandError{kExitInvalidInput, "--input-port must be in [0, " + std::to_string(n) + ")"};
  }
  print_report(out, run_path_w(n, static_cast<std::size_t>(o.input_port)), f);
  return kExitOk;
}

MultiportUnitary load_unitary(const std::string& path) {
  const ComplexMatrix m = matrix_from_json(read_json_file(path));
  if (m.rows() < 2) throw CommandError{kExitInvalidInput, "matrix needs at least 2 ports"};
  if (!verify_unitary(m, kUnitaryTolerance)) {
    throw CommandError{kExitNumericalFailure, "matrix not unitary within 1e-10"};
  }
  return MultiportUnitary(m);
}

int cmd_polar_w(const Options& o, std::ostream& out) {
  const OutputFormat f = require_format(o.format);
  if (!o.matrix_path.empty()) {
    const MultiportUnitary u = load_unitary(o.matrix_path);
    if (o.n != 0 && static_cast<std::size_t>(o.n) != u.n()) {
      throw CommandError{kExitInvalidInput, "--n disagrees with the matrix size"};
    }
    print_report(out, run_polarization_w(u), f);
    return kExitOk;
  }
  print_report(out, run_polarization_w(require_n(o.n)), f);
  return kExitOk;
}

bool same_file(const std::string& a, const std::string& b) {
  std::error_code ec;
  return std::filesystem::exists(b, ec) && std::filesystem::equivalent(a, b, ec);
}

int cmd_design(const Options& o, std::ostream& out) {
  if (same_file(o.input_path, o.out_path)) {
    throw CommandError{kExitInvalidInput, "--out would overwrite the target file"};
  }
  const TargetColumn target(complex_vector_from_json(read_json_file(o.input_path)));
  const MultiportUnitary u = complete_unitary_from_column(target);

  double column_error = 0.0;
  for (std::size_t k = 0; k < target.size(); ++k) {
    column_error = std::max(column_error, std::abs(u(k, 0) - target[k]));
  }
  const double defect = unitarity_defect(u.matrix());
  const bool column_ok = column_error <= kColumnNormTolerance;
  const bool unitary_ok = defect <= kUnitaryTolerance;
  out << "column match: " << (column_ok ? "PASS" : "FAIL") << " (max error " << format_real(column_error) << ")\n";
  out << "unitarity: " << (unitary_ok ? "PASS" : "FAIL") << " (max |U^dagger U - I| " << format_real(defect) << ")\n";
  if (!column_ok || !unitary_ok) {
    throw CommandError{kExitNumericalFailure, "designed coupler failed verification"};
  }
  write_text_file(o.out_path, dump(matrix_to_json(u.matrix())));
  out << "wrote " << o.out_path << "\n";
  return kExitOk;
}

int cmd_evolve(const Options& o, std::ostream& out) {
  const OutputFormat f = require_format(o.format);
  std::optional<CoincidencePattern> pattern;
  if (!o.postselect.empty()) pattern = parse_pattern(o.postselect);
  const MultiportUnitary u = load_unitary(o.matrix_path);
  const FockState input = fock_from_json(read_json_file(o.input_path));
  if (input.n_ports() != u.n()) {
    throw CommandError{kExitInvalidInput, "input has " + std::to_string(input.n_ports()) +
                                              " ports but the matrix has " + std::to_string(u.n())};
  }
  const SuperposedState state = evolve(u, input);
  std::optional<PostSelectionResult> ps;
  std::vector<std::pair<FockState, Complex>> branches;
  if (pattern) {
    ps = postselect(state, *pattern);
    branches = branch_amplitude_report(state, *pattern);
  }

  switch (f) {
    case OutputFormat::kJson: {
      if (!ps) {
        out << dump(state_to_json(state));
        break;
      }
      Json branch_json = Json::array();
      for (const auto& [basis, amp] : branches) {
        branch_json.push_back(Json{{"state", fock_to_json(basis)}, {"amp", complex_to_json(amp)}});
      }
      out << dump(Json{{"outputState", state_to_json(state)},
                       {"postSelection", postselection_to_json(*ps)},
                       {"branches", std::move(branch_json)}});
      break;
    }
    case OutputFormat::kCsv:
      out << format_state_csv(state, pattern ? &*pattern : nullptr);
      break;
    case OutputFormat::kTable:
      out << "output state:\n" << format_state_table(state);
      if (ps) {
        out << "kept branches (before renormalization):\n";
        for (const auto& [basis, amp] : branches) {
          out << "  " << basis.label() << "  " << format_complex(amp) << "\n";
        }
        out << "post-selection:\n" << format_postselection_table(*ps);
      }
      break;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact simulator for W-state generation with multiport fiber couplers", "wstate"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format: json, csv or table")->default_str("table");
  };

  CLI::App* multiport = app.add_subcommand("multiport", "Write the n-port DFT coupler as matrix JSON");
  multiport->add_option("--n", o.n, "Port count")->required();
  multiport->add_option("--out", o.out_path, "Output file (stdout when omitted)");

  CLI::App* path_w = app.add_subcommand("path-w", "Single photon through an n-port DFT coupler");
  path_w->add_option("--n", o.n, "Port count")->required();
  path_w->add_option("--input-port", o.input_port, "Input port, zero-based")->default_str("0");
  add_format(path_w);

  CLI::App* polar_w = app.add_subcommand("polar-w", "n photons, one V, post-selected on one photon per port");
  polar_w->add_option("--n", o.n, "Photon and port count");
  polar_w->add_option("--matrix", o.matrix_path, "Use this coupler instead of the stock one");
  add_format(polar_w);

  CLI::App* design = app.add_subcommand("design", "Complete a coupler whose first column is the target");
  design->add_option("--input,--target", o.input_path, "JSON array of [re, im] amplitudes")->required();
  design->add_option("--out", o.out_path, "Where to write the matrix JSON")->required();

  CLI::App* evolve_cmd = app.add_subcommand("evolve", "Evolve a Fock input through a coupler");
  evolve_cmd->add_option("--matrix", o.matrix_path, "Matrix JSON")->required();
  evolve_cmd->add_option("--input", o.input_path, "Fock state JSON")->required();
  evolve_cmd->add_option("--postselect", o.postselect, "one-per-port, or port=count,...");
  add_format(evolve_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  const std::vector<std::pair<CLI::App*, std::function<int()>>> handlers = {
      {multiport, [&] { return cmd_multiport(o, out); }},
      {path_w, [&] { return cmd_path_w(o, out); }},
      {polar_w, [&] { return cmd_polar_w(o, out); }},
      {design, [&] { return cmd_design(o, out); }},
      {evolve_cmd, [&] { return cmd_evolve(o, out); }},
  };
  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler();
    }
  } catch (const CommandError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const CapacityExceeded& e) {
    err << "error: capacity exceeded: " << e.what() << "\n";
    return kExitNumericalFailure;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  }
  return kExitInvalidInput;
}

}  // namespace wstate::cli
