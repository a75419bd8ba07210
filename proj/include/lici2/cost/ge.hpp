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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace lici2::cost {

/// Exact decimal area in hundredths of a gate equivalent. Weights such as
/// 4.25 and 2.25 are not representable in binary floating point sums
/// without rounding risk; cents are.
class GeAmount {
public:
    constexpr GeAmount() = default;
    static constexpr GeAmount from_centi(std::int64_t c) noexcept { return GeAmount(c); }
    /// Parses "4.25", "24", "0.75". At most two fractional digits.
    /// Throws std::invalid_argument otherwise.
    static GeAmount parse(std::string_view text);

    constexpr std::int64_t centi() const noexcept { return centi_; }
    /// "272", "2.25", "0.75".
    std::string to_string() const;

    constexpr GeAmount operator+(GeAmount o) const noexcept { return GeAmount(centi_ + o.centi_); }
    constexpr GeAmount operator*(std::int64_t k) const noexcept { return GeAmount(centi_ * k); }
    GeAmount& operator+=(GeAmount o) noexcept {
        centi_ += o.centi_;
        return *this;
    }
    friend constexpr auto operator<=>(const GeAmount&, const GeAmount&) = default;

private:
    constexpr explicit GeAmount(std::int64_t c) : centi_(c) {}
    std::int64_t centi_ = 0;
};

/// Per-instance area weight by component name.
struct GateWeightTable {
    std::map<std::string, GeAmount> weights;

    /// AND 1.25, OR 1.25, XOR 2, NOT 0.75, MUX2 2.25, DFF 4.25.
    static GateWeightTable canonical();
};

struct BillRow {
    std::string label;      // e.g. "64-Bit Register"
    std::string component;  // key into the weight table
    int multiplicity = 1;
    int width = 1;
    std::optional<GeAmount> fixed_ge;  // per-instance aggregate, replaces the table weight
};

struct BillOfComponents {
    std::string name;
    std::vector<BillRow> rows;
};

/// multiplicity * width * (fixed_ge or table weight).
/// Throws std::invalid_argument for an unknown component without fixed_ge
/// or non-positive multiplicity / width.
GeAmount row_total(const BillRow& row, const GateWeightTable& weights);
GeAmount ge_total(const BillOfComponents& bill, const GateWeightTable& weights);

/// Datapath: 64-bit register, 2 XOR (x4), 5 MUX (x4), 1 S-box (24), 1 shift (0).
BillOfComponents canonical_data_path();
/// Key path: 128-bit register, one 5-bit XOR, 2 MUX (x4), FSM (122).
BillOfComponents canonical_key_path();

struct ReportRow {
    std::string label;
    std::string formula;  // "64 * 4.25", or the fixed figure
    GeAmount total;
};

struct GeReport {
    std::vector<ReportRow> data_rows;
    std::vector<ReportRow> key_rows;
    GeAmount data_total;
    GeAmount key_total;
    GeAmount grand_total;
};

GeReport ge_report(const BillOfComponents& data = canonical_data_path(),
                   const BillOfComponents& key = canonical_key_path(),
                   const GateWeightTable& weights = GateWeightTable::canonical());

std::string render(const GeReport& r);
nlohmann::json to_json(const GeReport& r);

/// Bill file format:
///   {"name": "...", "rows": [{"label": "...", "component": "DFF",
///     "multiplicity": 64, "width": 1, "fixed_ge": "24"}]}
/// fixed_ge is optional and may be a string or number.
BillOfComponents bill_from_json(const nlohmann::json& j);
nlohmann::json bill_to_json(const BillOfComponents& bill);
/// Weight file format: {"AND": "1.25", "DFF": 4.25, ...}
GateWeightTable weights_from_json(const nlohmann::json& j);

}  // namespace lici2::cost
