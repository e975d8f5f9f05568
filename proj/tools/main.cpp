// Copyright 2026 su2lift authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "su2lift/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw su2lift::ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw su2lift::ParseError("cannot open output file: " + path);
  out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SO(3) -> SU(2) lifting and two-qubit correlation-matrix engineering"};
  app.require_subcommand(1);

  std::string in_path = "-";
  std::string out_path = "-";
  double tol = su2lift::kSignEps;
  int seeds = 10000;
  int brute = 0;
  std::string side = "left";

  const struct {
    const char* name;
    const char* help;
  } commands[] = {
      {"lift", "Rotation document -> SU(2) unitary inducing it on the Bloch sphere"},
      {"adjoint", "Unitary document -> induced SO(3) rotation"},
      {"diagonalize", "Diagonalize a state's correlation matrix with local unitaries"},
      {"triangularize", "One-sided QR triangularization of the correlation matrix"},
      {"symmetrize", "One-sided symmetrization of the correlation matrix"},
      {"ortho", "Orthogonality check for a pair of unitaries (array of two documents)"},
      {"transform", "Apply rotations L, R to a state (array: state, rotation, rotation)"},
      {"verify", "Round-trip verification sweep over seeded random rotations"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--in", in_path, "Input file, or - for stdin");
    sub->add_option("--out", out_path, "Output file, or - for stdout");
    sub->add_option("--tol", tol, "Numerical zero threshold for sign decisions");
    if (std::string(c.name) == "verify") {
      sub->add_option("--seeds", seeds, "Number of seeded random rotations");
      sub->add_option("--brute", brute, "Brute-force oracle cross-checks to run");
    }
    if (std::string(c.name) == "triangularize" || std::string(c.name) == "symmetrize") {
      sub->add_option("--side", side, "Which system to rotate: left or right")
          ->check(CLI::IsMember({"left", "right"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const auto command = su2lift::command_from_name(name);
  if (!command) {
    std::cerr << "error: unknown command " << name << "\n";
    return 2;
  }

  su2lift::CommandOptions options;
  options.tol = tol;
  options.seeds = seeds;
  options.brute = brute;
  options.side = side == "right" ? su2lift::Side::Right : su2lift::Side::Left;

  try {
    std::vector<su2lift::MatrixDocument> inputs;
    if (*command != su2lift::Command::Verify) {
      inputs = su2lift::parse_documents(read_input(in_path));
    }
    const su2lift::CommandOutcome outcome = su2lift::run_command(*command, inputs, options);
    write_output(out_path, outcome.output);
    return outcome.exit_code;
  } catch (const su2lift::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const su2lift::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const su2lift::InternalConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
