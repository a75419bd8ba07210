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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lici2/cost/ge.hpp"

using namespace lici2::cost;

namespace {

GeAmount ge(const char* s) { return GeAmount::parse(s); }

}  // namespace

TEST_CASE("decimal amounts") {
    CHECK(ge("4.25").centi() == 425);
    CHECK(ge("2").centi() == 200);
    CHECK(ge("0.5").centi() == 50);
    CHECK(ge("4.250").centi() == 425);
    CHECK(ge("272").to_string() == "272");
    CHECK(ge("2.25").to_string() == "2.25");
    CHECK(ge("0.5").to_string() == "0.5");
    CHECK((ge("4.25") * 64).to_string() == "272");
    CHECK_THROWS_AS(ge("4.251"), std::invalid_argument);
    CHECK_THROWS_AS(ge("x"), std::invalid_argument);
    CHECK_THROWS_AS(ge(""), std::invalid_argument);
    CHECK_THROWS_AS(ge("1.2.3"), std::invalid_argument);
}

TEST_CASE("canonical data path rows") {
    const GeReport r = ge_report();
    REQUIRE(r.data_rows.size() == 5);
    const char* expect[] = {"272", "16", "45", "24", "0"};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(r.data_rows[i].total.to_string() == expect[i]);
    CHECK(r.data_rows[0].formula == "64 * 4.25");
    CHECK(r.data_total.to_string() == "357");
}

TEST_CASE("canonical key path rows") {
    const GeReport r = ge_report();
    REQUIRE(r.key_rows.size() == 4);
    const char* expect[] = {"544", "10", "18", "122"};
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(r.key_rows[i].total.to_string() == expect[i]);
    CHECK(r.key_rows[0].formula == "128 * 4.25");
    CHECK(r.key_total.to_string() == "694");
    CHECK(r.grand_total.to_string() == "1051");
    CHECK(r.grand_total == r.data_total + r.key_total);
}

TEST_CASE("totals") {
    const auto w = GateWeightTable::canonical();
    CHECK(ge_total(BillOfComponents{}, w) == GeAmount{});
    CHECK(ge_total(canonical_data_path(), w) == ge("357"));
    CHECK(ge_total(canonical_key_path(), w) == ge("694"));

    BillOfComponents bad{"bad", {{"mystery", "FLUX_CAPACITOR", 1, 1, std::nullopt}}};
    CHECK_THROWS_AS(ge_total(bad, w), std::invalid_argument);
    BillOfComponents zero{"zero", {{"none", "XOR", 0, 1, std::nullopt}}};
    CHECK_THROWS_AS(ge_total(zero, w), std::invalid_argument);
}

TEST_CASE("reordering rows keeps the total") {
    const auto w = GateWeightTable::canonical();
    BillOfComponents all = canonical_data_path();
    for (const auto& row : canonical_key_path().rows)
        all.rows.push_back(row);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; ++i) {
        std::shuffle(all.rows.begin(), all.rows.end(), rng);
        CHECK(ge_total(all, w).to_string() == "1051");
    }
}

TEST_CASE("json round trip") {
    const BillOfComponents b = canonical_key_path();
    const BillOfComponents back = bill_from_json(bill_to_json(b));
    CHECK(ge_total(back, GateWeightTable::canonical()) == ge("694"));
    CHECK(back.rows.size() == b.rows.size());

    const auto w = weights_from_json(nlohmann::json{{"DFF", "5"}, {"XOR", 2}, {"MUX2", 2.25}});
    CHECK(row_total(b.rows[0], w) == ge("640"));
    CHECK(row_total(b.rows[2], w) == ge("18"));

    const auto j = to_json(ge_report());
    CHECK(j["grand_total"] == "1051");
    CHECK(j["data_path"]["total"] == "357");
    CHECK_THROWS(bill_from_json(nlohmann::json{{"rows", {{{"label", "x"}}}}}));
}
