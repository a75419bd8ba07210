/*
 * Copyright 2026 The LiCi-2 Lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <json.hpp>

#include "lici2/analysis/avalanche.hpp"
#include "lici2/analysis/complexity.hpp"
#include "lici2/analysis/tables.hpp"
#include "lici2/analysis/trails.hpp"
#include "lici2/cipher.hpp"

namespace lici2::analysis {

// JSON forms of the analysis reports. Shapes are pinned by the schemas in
// schemas/*.schema.json.

nlohmann::json to_json(const DDT& ddt);
nlohmann::json to_json(const LAT& lat);
nlohmann::json to_json(const TrailResult& r);
nlohmann::json to_json(const AvalancheReport& r);
nlohmann::json to_json(const LinearEstimate& e);
nlohmann::json to_json(const DifferentialEstimate& e);
nlohmann::json to_json(const KatSearchResult& r);

}  // namespace lici2::analysis
