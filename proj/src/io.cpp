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

#include "su2lift/io.hpp"

#include "su2lift/group_kernel.hpp"
#include "su2lift/two_qubit.hpp"

#include <cstdio>

namespace su2lift {

namespace {

using nlohmann::ordered_json;

double number_at(const ordered_json& j, const char* where) {
  if (!j.is_number()) throw ParseError(std::string("expected a number in ") + where);
  return j.get<double>();
}

Complex complex_at(const ordered_json& j, const char* where) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError(std::string("expected a [re, im] pair in ") + where);
  }
  return {number_at(j[0], where), number_at(j[1], where)};
}

template <typename Matrix>
Matrix parse_real_matrix(const ordered_json& j, int rows, int cols, const char* where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    throw ParseError(std::string(where) + ": expected " + std::to_string(rows) + " rows");
  }
  Matrix M;
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) {
      throw ParseError(std::string(where) + ": expected " + std::to_string(cols) + " columns");
    }
    for (int c = 0; c < cols; ++c) M(r, c) = number_at(j[r][c], where);
  }
  return M;
}

template <typename Matrix>
Matrix parse_complex_matrix(const ordered_json& j, int n, const char* where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw ParseError(std::string(where) + ": expected " + std::to_string(n) + " rows");
  }
  Matrix M;
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != n) {
      throw ParseError(std::string(where) + ": expected " + std::to_string(n) + " columns");
    }
    for (int c = 0; c < n; ++c) M(r, c) = complex_at(j[r][c], where);
  }
  return M;
}

Vec3 parse_vec3(const ordered_json& j, const char* where) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError(std::string(where) + ": expected 3 entries");
  }
  return {number_at(j[0], where), number_at(j[1], where), number_at(j[2], where)};
}

void append_double(std::string& out, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void dump_stable_impl(const ordered_json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::detail::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(key).dump();
        out += ':';
        dump_stable_impl(value, out);
      }
      out += '}';
      break;
    }
    case nlohmann::detail::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ',';
        dump_stable_impl(j[i], out);
      }
      out += ']';
      break;
    }
    case nlohmann::detail::value_t::string:
      out += nlohmann::json(j.get<std::string>()).dump();
      break;
    case nlohmann::detail::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case nlohmann::detail::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      break;
    case nlohmann::detail::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      break;
    case nlohmann::detail::value_t::number_float:
      append_double(out, j.get<double>());
      break;
    default:
      out += "null";
      break;
  }
}

}  // namespace

std::string kind_name(DocKind kind) {
  switch (kind) {
    case DocKind::Rotation: return "rotation";
    case DocKind::Unitary: return "unitary";
    case DocKind::Density: return "density";
    case DocKind::Correlation: return "correlation";
    case DocKind::Bloch: return "bloch";
  }
  return "unknown";
}

MatrixDocument document_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("document missing string field \"kind\"");
  }
  if (!j.contains("data")) throw ParseError("document missing field \"data\"");
  const std::string kind = j["kind"].get<std::string>();
  const ordered_json& data = j["data"];

  MatrixDocument doc;
  if (kind == "rotation") {
    doc.kind = DocKind::Rotation;
    const Mat3 M = parse_real_matrix<Mat3>(data, 3, 3, "rotation data");
    validate_rotation(M);
    doc.data = M;
  } else if (kind == "correlation") {
    doc.kind = DocKind::Correlation;
    doc.data = parse_real_matrix<Mat3>(data, 3, 3, "correlation data");
  } else if (kind == "unitary") {
    doc.kind = DocKind::Unitary;
    const Eigen::Matrix2cd U = parse_complex_matrix<Eigen::Matrix2cd>(data, 2, "unitary data");
    validate_special_unitary(U);
    doc.data = U;
  } else if (kind == "density") {
    doc.kind = DocKind::Density;
    const Eigen::Matrix4cd rho = parse_complex_matrix<Eigen::Matrix4cd>(data, 4, "density data");
    validate_density(rho);
    doc.data = rho;
  } else if (kind == "bloch") {
    doc.kind = DocKind::Bloch;
    if (!data.is_object() || !data.contains("a") || !data.contains("b") || !data.contains("T")) {
      throw ParseError("bloch data must be an object with fields a, b, T");
    }
    BlochForm bf;
    bf.a = parse_vec3(data["a"], "bloch a");
    bf.b = parse_vec3(data["b"], "bloch b");
    bf.T = parse_real_matrix<Mat3>(data["T"], 3, 3, "bloch T");
    doc.data = bf;
  } else {
    throw ParseError("unknown document kind \"" + kind + "\"");
  }

  if (j.contains("meta")) {
    if (!j["meta"].is_object()) throw ParseError("meta must be an object of strings");
    for (const auto& [key, value] : j["meta"].items()) {
      if (!value.is_string()) throw ParseError("meta values must be strings");
      doc.meta[key] = value.get<std::string>();
    }
  }
  return doc;
}

MatrixDocument parse_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

std::vector<MatrixDocument> parse_documents(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  std::vector<MatrixDocument> docs;
  if (j.is_array()) {
    for (const auto& elem : j) docs.push_back(document_from_json(elem));
  } else {
    docs.push_back(document_from_json(j));
  }
  return docs;
}

nlohmann::ordered_json json_real_matrix(const Mat3& M) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < 3; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < 3; ++c) row.push_back(M(r, c));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::ordered_json json_complex_matrix(const Eigen::MatrixXcd& M) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
      row.push_back(ordered_json::array({M(r, c).real(), M(r, c).imag()}));
    }
    rows.push_back(row);
  }
  return rows;
}

nlohmann::ordered_json document_to_json(const MatrixDocument& doc) {
  ordered_json j;
  j["kind"] = kind_name(doc.kind);
  switch (doc.kind) {
    case DocKind::Rotation:
    case DocKind::Correlation:
      j["data"] = json_real_matrix(doc.real3());
      break;
    case DocKind::Unitary:
      j["data"] = json_complex_matrix(doc.unitary());
      break;
    case DocKind::Density:
      j["data"] = json_complex_matrix(doc.density());
      break;
    case DocKind::Bloch: {
      const BlochForm& bf = doc.bloch();
      ordered_json data;
      data["a"] = ordered_json::array({bf.a(0), bf.a(1), bf.a(2)});
      data["b"] = ordered_json::array({bf.b(0), bf.b(1), bf.b(2)});
      data["T"] = json_real_matrix(bf.T);
      j["data"] = data;
      break;
    }
  }
  if (!doc.meta.empty()) {
    ordered_json meta;
    for (const auto& [key, value] : doc.meta) meta[key] = value;
    j["meta"] = meta;
  }
  return j;
}

std::string dump_stable(const nlohmann::ordered_json& j) {
  std::string out;
  dump_stable_impl(j, out);
  return out;
}

}  // namespace su2lift
