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

#pragma once

#include "su2lift/types.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace su2lift {

// Malformed document text: bad JSON, unknown kind, wrong shape. Distinct from
// InvalidInputError, which flags numerically invalid but well-formed input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class DocKind { Rotation, Unitary, Density, Correlation, Bloch };

std::string kind_name(DocKind kind);

// One matrix payload with its kind tag. Complex entries travel as [re, im]
// pairs in JSON.
struct MatrixDocument {
  DocKind kind;
  std::variant<Mat3, Eigen::Matrix2cd, Eigen::Matrix4cd, BlochForm> data;
  std::map<std::string, std::string> meta;

  const Mat3& real3() const { return std::get<Mat3>(data); }
  const Eigen::Matrix2cd& unitary() const { return std::get<Eigen::Matrix2cd>(data); }
  const Eigen::Matrix4cd& density() const { return std::get<Eigen::Matrix4cd>(data); }
  const BlochForm& bloch() const { return std::get<BlochForm>(data); }
};

// Parses and validates one document. Shape problems throw ParseError;
// kind-invariant violations (non-orthogonal rotation, non-PSD density, ...)
// throw InvalidInputError naming the invariant. Unknown extra fields are
// ignored.
MatrixDocument parse_document(const std::string& text);

// Accepts either a single document or a JSON array of documents.
std::vector<MatrixDocument> parse_documents(const std::string& text);

MatrixDocument document_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json document_to_json(const MatrixDocument& doc);

nlohmann::ordered_json json_real_matrix(const Mat3& M);
nlohmann::ordered_json json_complex_matrix(const Eigen::MatrixXcd& M);

// Byte-stable serialization: insertion field order, floats at 17 significant
// digits, no whitespace.
std::string dump_stable(const nlohmann::ordered_json& j);

}  // namespace su2lift
