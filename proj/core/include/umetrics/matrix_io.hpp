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

#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>

#include "umetrics/linalg.hpp"
#include "umetrics/majorization.hpp"

namespace umetrics::io {

/// Matrix wire format:
///   { "rows": r, "cols": c, "data": [[re, im], ...] }
/// with data row-major of length rows*cols. Parsing rejects wrong-length
/// or non-finite data with ParseError.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m);

/// Index triple wire format, 1-based: { "j": [1, 3], "k": [2, 4] }.
nlohmann::json triple_to_json(const majorization::IndexTriple& t);
majorization::IndexTriple triple_from_json(const nlohmann::json& j);

/// Index set family wire format, 1-based:
/// { "I": [...], "J": [...], "K": [...] }.
nlohmann::json sets_to_json(const majorization::GeneralIndexSets& s);
majorization::GeneralIndexSets sets_from_json(const nlohmann::json& j);

}  // namespace umetrics::io
