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

#include "su2lift/group_kernel.hpp"
#include "su2lift/lift.hpp"
#include "su2lift/two_qubit.hpp"
#include "su2lift/verify.hpp"

#include <cmath>

namespace su2lift {

namespace {

using nlohmann::ordered_json;

constexpr const char* kPairNote = "the pair {U, -U} induces the same rotation; -U is equally valid";

void require_inputs(const std::vector<MatrixDocument>& inputs, std::size_t n, const char* cmd) {
  if (inputs.size() != n) {
    throw ParseError(std::string(cmd) + " expects " + std::to_string(n) + " input document(s), got " +
                     std::to_string(inputs.size()));
  }
}

const MatrixDocument& require_kind(const MatrixDocument& doc, DocKind kind, const char* cmd) {
  if (doc.kind != kind) {
    throw ParseError(std::string(cmd) + " expects a " + kind_name(kind) + " document, got " +
                     kind_name(doc.kind));
  }
  return doc;
}

BlochForm state_to_bloch(const MatrixDocument& doc, const char* cmd) {
  switch (doc.kind) {
    case DocKind::Bloch:
      return doc.bloch();
    case DocKind::Correlation: {
      BlochForm bf;
      bf.T = doc.real3();
      return bf;
    }
    case DocKind::Density:
      return to_bloch(doc.density());
    default:
      throw ParseError(std::string(cmd) + " expects a bloch, correlation, or density document, got " +
                       kind_name(doc.kind));
  }
}

// Re-wraps a transformed Bloch form in the same kind the caller supplied.
ordered_json state_from_bloch(const BlochForm& bf, DocKind kind) {
  MatrixDocument doc;
  doc.kind = kind;
  switch (kind) {
    case DocKind::Bloch:
      doc.data = bf;
      break;
    case DocKind::Correlation:
      doc.data = bf.T;
      break;
    default:
      doc.kind = DocKind::Density;
      doc.data = from_bloch(bf);
      break;
  }
  return document_to_json(doc);
}

ordered_json unitary_json(const SpecialUnitary2& U) {
  MatrixDocument doc;
  doc.kind = DocKind::Unitary;
  doc.data = U;
  return document_to_json(doc);
}

double max_below_diagonal(const Mat3& T) {
  return std::max({std::abs(T(1, 0)), std::abs(T(2, 0)), std::abs(T(2, 1))});
}

double max_off_diagonal(const Mat3& T) {
  return std::max({std::abs(T(0, 1)), std::abs(T(0, 2)), std::abs(T(1, 0)), std::abs(T(1, 2)),
                   std::abs(T(2, 0)), std::abs(T(2, 1))});
}

CommandOutcome run_lift(const std::vector<MatrixDocument>& inputs, const CommandOptions& opts) {
  require_inputs(inputs, 1, "lift");
  const Rotation3& O = require_kind(inputs[0], DocKind::Rotation, "lift").real3();
  const LiftResult res = lift(O, opts.tol);
  ordered_json j = unitary_json(res.representative);
  j["branch"] = res.branch == LiftBranch::Real ? "real" : "vector";
  j["residual"] = res.residual;
  j["quaternion"] = ordered_json::array(
      {res.quaternion.a1, res.quaternion.a2, res.quaternion.b1, res.quaternion.b2});
  j["pair_note"] = kPairNote;
  return {dump_stable(j), 0};
}

CommandOutcome run_adjoint(const std::vector<MatrixDocument>& inputs) {
  require_inputs(inputs, 1, "adjoint");
  const SpecialUnitary2& U = require_kind(inputs[0], DocKind::Unitary, "adjoint").unitary();
  MatrixDocument doc;
  doc.kind = DocKind::Rotation;
  doc.data = adjoint_so3(U);
  return {dump_stable(document_to_json(doc)), 0};
}

CommandOutcome run_diagonalize(const std::vector<MatrixDocument>& inputs,
                               const CommandOptions& opts) {
  require_inputs(inputs, 1, "diagonalize");
  const BlochForm bf = state_to_bloch(inputs[0], "diagonalize");
  const DiagonalizeResult res = diagonalize(bf, opts.tol);

  ordered_json left = unitary_json(res.UL);
  left["role"] = "left";
  left["pair_note"] = kPairNote;
  ordered_json right = unitary_json(res.UR);
  right["role"] = "right";
  right["pair_note"] = kPairNote;
  ordered_json state = state_from_bloch(res.out, inputs[0].kind);
  state["residual"] = max_off_diagonal(res.out.T);

  return {dump_stable(ordered_json::array({left, right, state})), 0};
}

CommandOutcome run_one_sided(Command command, const std::vector<MatrixDocument>& inputs,
                             const CommandOptions& opts) {
  const char* name = command == Command::Triangularize ? "triangularize" : "symmetrize";
  require_inputs(inputs, 1, name);
  const BlochForm bf = state_to_bloch(inputs[0], name);

  OneSidedResult res;
  double residual = 0;
  if (command == Command::Triangularize) {
    res = triangularize(bf, opts.side, opts.tol);
    residual = opts.side == Side::Left ? max_below_diagonal(res.out.T)
                                       : max_below_diagonal(res.out.T.transpose());
  } else {
    res = symmetrize_one_sided(bf, opts.side, opts.tol);
    residual = (res.out.T - res.out.T.transpose()).norm();
  }

  ordered_json u = unitary_json(res.U);
  u["side"] = opts.side == Side::Left ? "left" : "right";
  u["pair_note"] = kPairNote;
  ordered_json state = state_from_bloch(res.out, inputs[0].kind);
  state["residual"] = residual;
  return {dump_stable(ordered_json::array({u, state})), 0};
}

CommandOutcome run_ortho(const std::vector<MatrixDocument>& inputs, const CommandOptions& opts) {
  require_inputs(inputs, 2, "ortho");
  const SpecialUnitary2& U1 = require_kind(inputs[0], DocKind::Unitary, "ortho").unitary();
  const SpecialUnitary2& U2 = require_kind(inputs[1], DocKind::Unitary, "ortho").unitary();
  const OrthogonalityCheck check = check_orthogonality(U1, U2, opts.tol);
  ordered_json j;
  j["su2_trace"] = ordered_json::array({check.su2_trace.real(), check.su2_trace.imag()});
  j["so3_trace"] = check.so3_trace;
  j["orthogonal"] = check.orthogonal;
  return {dump_stable(j), 0};
}

CommandOutcome run_transform(const std::vector<MatrixDocument>& inputs) {
  require_inputs(inputs, 3, "transform");
  const BlochForm bf = state_to_bloch(inputs[0], "transform");
  const Rotation3& L = require_kind(inputs[1], DocKind::Rotation, "transform").real3();
  const Rotation3& R = require_kind(inputs[2], DocKind::Rotation, "transform").real3();
  const BlochForm out = transform_bloch(bf, L, R);
  return {dump_stable(state_from_bloch(out, inputs[0].kind)), 0};
}

CommandOutcome run_verify(const std::vector<MatrixDocument>& inputs, const CommandOptions& opts) {
  require_inputs(inputs, 0, "verify");
  const OracleReport report = run_verification(opts.seeds, opts.brute);
  const bool pass = report.residual_closed_form < 1e-9 &&
                    (report.brute_samples == 0 || report.quaternion_distance < 1e-4);
  ordered_json j;
  j["samples"] = report.samples;
  j["max_roundtrip_residual"] = report.residual_closed_form;
  j["real_branch"] = report.real_branch;
  j["vector_branch"] = report.vector_branch;
  j["brute_samples"] = report.brute_samples;
  if (report.brute_samples > 0) {
    j["max_brute_residual"] = report.residual_brute;
    j["max_quaternion_distance"] = report.quaternion_distance;
  }
  j["pass"] = pass;
  return {dump_stable(j), pass ? 0 : 4};
}

}  // namespace

std::optional<Command> command_from_name(const std::string& name) {
  if (name == "lift") return Command::Lift;
  if (name == "adjoint") return Command::Adjoint;
  if (name == "diagonalize") return Command::Diagonalize;
  if (name == "triangularize") return Command::Triangularize;
  if (name == "symmetrize") return Command::Symmetrize;
  if (name == "ortho") return Command::Ortho;
  if (name == "transform") return Command::Transform;
  if (name == "verify") return Command::Verify;
  return std::nullopt;
}

CommandOutcome run_command(Command command, const std::vector<MatrixDocument>& inputs,
                           const CommandOptions& options) {
  switch (command) {
    case Command::Lift: return run_lift(inputs, options);
    case Command::Adjoint: return run_adjoint(inputs);
    case Command::Diagonalize: return run_diagonalize(inputs, options);
    case Command::Triangularize:
    case Command::Symmetrize: return run_one_sided(command, inputs, options);
    case Command::Ortho: return run_ortho(inputs, options);
    case Command::Transform: return run_transform(inputs);
    case Command::Verify: return run_verify(inputs, options);
  }
  throw std::logic_error("unhandled command");
}

}  // namespace su2lift
