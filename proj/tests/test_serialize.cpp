/*
   Copyright 2026 The ntag Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "ntag/serialize.hpp"

using namespace ntag;

TEST_CASE("field and curve records") {
    const auto f = Field::build(2, 3);
    const Json j = to_json(*f);
    CHECK(j["p"] == 2);
    CHECK(j["k"] == 3);
    CHECK(j["modulus"] == Json::array({1, 1, 0, 1}));
    CHECK(j["generator_index"] == f->generator());
    const NormTraceCurve curve(2, 3);
    CHECK(to_json(curve)["field"] == j);
}

TEST_CASE("places and divisors round-trip") {
    const NormTraceCurve curve(2, 3);
    const auto& places = curve.rational_places();
    CHECK(places_from_json(to_json(places)) == places);
    CHECK(to_json(Place::infinity()) == Json{{"kind", "infinity"}});
    CHECK(divisor_from_json(to_json(curve.principal_divisor_y())) == curve.principal_divisor_y());
    CHECK_THROWS(place_from_json(Json{{"kind", "elsewhere"}}));
}

TEST_CASE("code report") {
    const NormTraceCurve curve(2, 3);
    const AGCode code = build_code(curve, 2);
    const Json r = code_report(code);
    CHECK(r["n"] == 29);
    CHECK(r["k"] == 4);
    CHECK(r["d_star"] == 21);
    CHECK(!r.contains("d_exact"));
    CHECK(r["matrix"].size() == code.generator.rows());
    CHECK(r["basis"].size() == code.basis.size());
    const std::string csv = matrix_csv(code.generator);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(code.generator.rows()));
    CHECK(std::count(csv.begin(), csv.end(), ',') == static_cast<long>(code.generator.rows() * 28));
}

TEST_CASE("automorphism records") {
    const CodeAut g{{3, 5}, 2, 6};
    const Json j = to_json(g);
    CHECK(j == Json{{"a_index", 3}, {"b_index", 5}, {"frob", 2}, {"scalar_index", 6}});
    const CodeAut back = code_aut_from_json(j);
    CHECK(back.aut == g.aut);
    CHECK(back.frob == 2);
    CHECK(back.scalar == 6);
}

TEST_CASE("spec files") {
    const Json j = Json::parse(R"({"p": 2, "field": {"order": 4}, "A": [{"j": 0, "a": 1}, {"j": 2, "a": 1}], "B": [0, 0, 0, 1]})");
    const auto s = spec_from_json(j);
    CHECK(s.field->order() == 4);
    CHECK(s.n() == 2);
    CHECK(s.m() == 3);
    const auto again = spec_from_json(to_json(s));
    CHECK(again.a == s.a);
    CHECK(again.b == s.b);

    const auto dense = spec_from_json(Json::parse(R"({"p": 2, "A_poly": [0, 1, 1, 0, 1], "B": [0, 0, 0, 1]})"));
    CHECK(dense.a.size() == 3);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"p": 2, "A_poly": [0, 1, 0, 1], "B": [1]})")), SpecError);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"p": 2, "A": [{"j": 0, "a": 7}], "B": [1]})")),
                    std::invalid_argument);

    const std::string path = "ntag_spec_roundtrip.json";
    {
        std::ofstream out(path);
        out << j.dump();
    }
    CHECK(load_spec_file(path).b == s.b);
    std::remove(path.c_str());
    try {
        load_spec_file("no/such/spec.json");
        FAIL("missing file accepted");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("no/such/spec.json") != std::string::npos);
    }
}
