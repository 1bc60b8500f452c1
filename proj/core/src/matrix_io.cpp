// Copyright 2026 the umetrics developers
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

#include "umetrics/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "umetrics/errors.hpp"

namespace umetrics::io {
namespace {

std::vector<int> indices_from_json(const nlohmann::json& j, const char* name) {
  if (!j.is_array()) {
    throw ParseError(std::string("index field '") + name + "' must be an array");
  }
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) {
      throw ParseError(std::string("index field '") + name +
                       "' must contain integers");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      data.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data")) {
    throw ParseError("matrix JSON must be an object with rows, cols, data");
  }
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
    throw ParseError("matrix JSON: rows and cols must be integers");
  }
  const long rows = j["rows"].get<long>();
  const long cols = j["cols"].get<long>();
  if (rows < 1 || cols < 1) {
    throw ParseError("matrix JSON: rows and cols must be positive");
  }
  const auto& data = j["data"];
  if (!data.is_array() || static_cast<long>(data.size()) != rows * cols) {
    std::ostringstream os;
    os << "matrix JSON: data length " << (data.is_array() ? data.size() : 0)
       << " != rows*cols = " << rows * cols;
    throw ParseError(os.str());
  }

  ComplexMatrix m(rows, cols);
  long idx = 0;
  for (long i = 0; i < rows; ++i) {
    for (long c = 0; c < cols; ++c, ++idx) {
      const auto& entry = data[static_cast<size_t>(idx)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        std::ostringstream os;
        os << "matrix JSON: data[" << idx << "] must be [re, im]";
        throw ParseError(os.str());
      }
      const double re = entry[0].get<double>();
      const double im = entry[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        std::ostringstream os;
        os << "matrix JSON: data[" << idx << "] is not finite";
        throw ParseError(os.str());
      }
      m(i, c) = std::complex<double>(re, im);
    }
  }
  return m;
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open matrix file '" + path.string() + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path.string() + "': " + e.what());
  }
  return matrix_from_json(j);
}

void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write matrix file '" + path.string() + "'");
  }
  out << matrix_to_json(m) << "\n";
}

nlohmann::json triple_to_json(const majorization::IndexTriple& t) {
  return {{"j", t.j_seq}, {"k", t.k_seq}};
}

majorization::IndexTriple triple_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("j") || !j.contains("k")) {
    throw ParseError("index triple JSON must be an object with fields j, k");
  }
  majorization::IndexTriple t;
  t.j_seq = indices_from_json(j["j"], "j");
  t.k_seq = indices_from_json(j["k"], "k");
  return t;
}

nlohmann::json sets_to_json(const majorization::GeneralIndexSets& s) {
  return {{"I", s.I}, {"J", s.J}, {"K", s.K}};
}

majorization::GeneralIndexSets sets_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("I") || !j.contains("J") ||
      !j.contains("K")) {
    throw ParseError("index sets JSON must be an object with fields I, J, K");
  }
  majorization::GeneralIndexSets s;
  s.I = indices_from_json(j["I"], "I");
  s.J = indices_from_json(j["J"], "J");
  s.K = indices_from_json(j["K"], "K");
  return s;
}

}  // namespace umetrics::io
