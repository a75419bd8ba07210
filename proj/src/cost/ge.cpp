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

#include "lici2/cost/ge.hpp"

#include <cstdio>
#include <stdexcept>

namespace lici2::cost {

GeAmount GeAmount::parse(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty GE amount");
    bool neg = false;
    if (text.front() == '-') {
        neg = true;
        text.remove_prefix(1);
    }
    std::int64_t whole = 0, frac = 0;
    int frac_digits = -1;
    for (char c : text) {
        if (c == '.') {
            if (frac_digits >= 0)
                throw std::invalid_argument("malformed GE amount");
            frac_digits = 0;
            continue;
        }
        if (c < '0' || c > '9')
            throw std::invalid_argument("malformed GE amount '" + std::string(text) + "'");
        if (frac_digits < 0) {
            whole = whole * 10 + (c - '0');
        } else {
            // Trailing zeros beyond two places are harmless ("4.250").
            if (++frac_digits > 2) {
                if (c != '0')
                    throw std::invalid_argument("GE amounts carry at most two decimals");
                continue;
            }
            frac = frac * 10 + (c - '0');
        }
    }
    if (frac_digits == 1)
        frac *= 10;
    const std::int64_t c = whole * 100 + frac;
    return GeAmount(neg ? -c : c);
}

std::string GeAmount::to_string() const {
    const std::int64_t a = centi_ < 0 ? -centi_ : centi_;
    std::string s = (centi_ < 0 ? "-" : "") + std::to_string(a / 100);
    const std::int64_t f = a % 100;
    if (f != 0) {
        s += '.';
        s += static_cast<char>('0' + f / 10);
        if (f % 10 != 0)
            s += static_cast<char>('0' + f % 10);
    }
    return s;
}

GateWeightTable GateWeightTable::canonical() {
    return GateWeightTable{{{"AND", GeAmount::parse("1.25")},
                            {"OR", GeAmount::parse("1.25")},
                            {"XOR", GeAmount::parse("2")},
                            {"NOT", GeAmount::parse("0.75")},
                            {"MUX2", GeAmount::parse("2.25")},
                            {"DFF", GeAmount::parse("4.25")}}};
}

namespace {

GeAmount unit_weight(const BillRow& row, const GateWeightTable& weights) {
    if (row.fixed_ge)
        return *row.fixed_ge;
    const auto it = weights.weights.find(row.component);
    if (it == weights.weights.end())
        throw std::invalid_argument("unknown component '" + row.component + "' in row '" +
                                    row.label + "' and no fixed_ge given");
    return it->second;
}

std::string formula(const BillRow& row, const GateWeightTable& weights) {
    if (row.fixed_ge && row.multiplicity == 1 && row.width == 1)
        return row.fixed_ge->to_string();
    std::string f = std::to_string(row.multiplicity);
    if (row.width != 1)
        f += " * " + std::to_string(row.width);
    return f + " * " + unit_weight(row, weights).to_string();
}

}  // namespace

GeAmount row_total(const BillRow& row, const GateWeightTable& weights) {
    if (row.multiplicity < 1 || row.width < 1)
        throw std::invalid_argument("row '" + row.label + "' needs positive multiplicity and width");
    return unit_weight(row, weights) * (static_cast<std::int64_t>(row.multiplicity) * row.width);
}

GeAmount ge_total(const BillOfComponents& bill, const GateWeightTable& weights) {
    GeAmount sum;
    for (const BillRow& row : bill.rows)
        sum += row_total(row, weights);
    return sum;
}

BillOfComponents canonical_data_path() {
    return {"data path",
            {
                {"64-Bit Register", "DFF", 64, 1, std::nullopt},
                {"2 XOR", "XOR", 2, 4, std::nullopt},
                {"5 MUX", "MUX2", 5, 4, std::nullopt},
                {"1 SBOX", "SBOX", 1, 1, GeAmount::parse("24")},
                {"1 Shift", "SHIFT", 1, 1, GeAmount::parse("0")},
            }};
}

BillOfComponents canonical_key_path() {
    return {"key path",
            {
                {"128-Bit Register", "DFF", 128, 1, std::nullopt},
                {"1- 5 Bit XOR", "XOR", 1, 5, std::nullopt},
                {"2 MUX", "MUX2", 2, 4, std::nullopt},
                {"FSM", "FSM", 1, 1, GeAmount::parse("122")},
            }};
}

GeReport ge_report(const BillOfComponents& data, const BillOfComponents& key,
                   const GateWeightTable& weights) {
    GeReport r;
    for (const BillRow& row : data.rows)
        r.data_rows.push_back({row.label, formula(row, weights), row_total(row, weights)});
    for (const BillRow& row : key.rows)
        r.key_rows.push_back({row.label, formula(row, weights), row_total(row, weights)});
    r.data_total = ge_total(data, weights);
    r.key_total = ge_total(key, weights);
    r.grand_total = r.data_total + r.key_total;
    return r;
}

std::string render(const GeReport& r) {
    std::string out;
    auto table = [&out](const char* title, const std::vector<ReportRow>& rows, GeAmount total) {
        char line[128];
        std::snprintf(line, sizeof line, "%-20s %-16s %10s\n", title, "formula", "GE");
        out += line;
        for (const ReportRow& row : rows) {
            std::snprintf(line, sizeof line, "%-20s %-16s %10s\n", row.label.c_str(),
                          row.formula.c_str(), row.total.to_string().c_str());
            out += line;
        }
        std::snprintf(line, sizeof line, "%-20s %-16s %10s\n\n", "TOTAL", "",
                      total.to_string().c_str());
        out += line;
    };
    table("DATA LAYER", r.data_rows, r.data_total);
    table("KEY LAYER", r.key_rows, r.key_total);
    out += "data path " + r.data_total.to_string() + " + key path " + r.key_total.to_string() +
           " = " + r.grand_total.to_string() + " GE\n";
    return out;
}

nlohmann::json to_json(const GeReport& r) {
    auto rows = [](const std::vector<ReportRow>& rs) {
        nlohmann::json a = nlohmann::json::array();
        for (const ReportRow& row : rs)
            a.push_back({{"label", row.label}, {"formula", row.formula}, {"ge", row.total.to_string()}});
        return a;
    };
    return {{"kind", "ge"},
            {"data_path", {{"rows", rows(r.data_rows)}, {"total", r.data_total.to_string()}}},
            {"key_path", {{"rows", rows(r.key_rows)}, {"total", r.key_total.to_string()}}},
            {"grand_total", r.grand_total.to_string()}};
}

namespace {

GeAmount amount_from_json(const nlohmann::json& v) {
    if (v.is_string())
        return GeAmount::parse(v.get<std::string>());
    if (v.is_number())
        return GeAmount::parse(v.dump());
    throw std::invalid_argument("GE amount must be a string or number");
}

}  // namespace

BillOfComponents bill_from_json(const nlohmann::json& j) {
    BillOfComponents bill;
    bill.name = j.value("name", "");
    for (const auto& r : j.at("rows")) {
        BillRow row;
        row.label = r.value("label", r.at("component").get<std::string>());
        row.component = r.at("component").get<std::string>();
        row.multiplicity = r.value("multiplicity", 1);
        row.width = r.value("width", 1);
        if (r.contains("fixed_ge"))
            row.fixed_ge = amount_from_json(r.at("fixed_ge"));
        if (row.multiplicity < 1 || row.width < 1)
            throw std::invalid_argument("row '" + row.label + "' needs positive multiplicity and width");
        bill.rows.push_back(std::move(row));
    }
    return bill;
}

nlohmann::json bill_to_json(const BillOfComponents& bill) {
    nlohmann::json rows = nlohmann::json::array();
    for (const BillRow& row : bill.rows) {
        nlohmann::json r{{"label", row.label},
                         {"component", row.component},
                         {"multiplicity", row.multiplicity},
                         {"width", row.width}};
        if (row.fixed_ge)
            r["fixed_ge"] = row.fixed_ge->to_string();
        rows.push_back(std::move(r));
    }
    return {{"name", bill.name}, {"rows", rows}};
}

GateWeightTable weights_from_json(const nlohmann::json& j) {
    GateWeightTable t;
    for (const auto& [name, v] : j.items())
        t.weights[name] = amount_from_json(v);
    return t;
}

}  // namespace lici2::cost
