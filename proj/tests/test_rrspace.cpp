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

#include "doctest.h"
#include "ntag/rrspace.hpp"
#include "oracles.hpp"

using namespace ntag;

TEST_CASE("gap count equals genus") {
    for (auto [q, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 3}, {2, 4}, {4, 2}}) {
        const NormTraceCurve curve(q, r);
        const auto gaps = semigroup_gaps(curve);
        CHECK(gaps.size() == curve.genus());
        CHECK(gaps.size() == oracle::gap_count(curve.h(), curve.c()));
        for (long long g : gaps) CHECK(g < static_cast<long long>(2 * curve.genus()));
    }
    const NormTraceCurve curve(2, 3);
    CHECK(semigroup_nongaps(curve, 12) == std::vector<long long>{0, 4, 7, 8, 11, 12});
}

TEST_CASE("multipoint basis size matches the lattice count") {
    for (auto [q, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 3}, {2, 4}}) {
        const NormTraceCurve curve(q, r);
        for (long long l = 1; l < static_cast<long long>(curve.field_order()); ++l) {
            const auto basis = basis_multipoint(curve, l);
            CHECK(basis.size() == oracle::lattice_count(curve.h(), curve.c(), l));
            for (const auto& t : basis) CHECK(t.valuation_at_infinity(curve) >= -l * static_cast<long long>(curve.h()));
        }
    }
}

TEST_CASE("local parameter at infinity") {
    const NormTraceCurve c23(2, 3);
    const MonomialTerm t = local_parameter_at_infinity(c23);
    CHECK(t == MonomialTerm{-2, 1});
    CHECK(t.valuation_at_infinity(c23) == 1);
    const NormTraceCurve c33(3, 3);
    CHECK(local_parameter_at_infinity(c33) == MonomialTerm{-3, 2});
}

TEST_CASE("evaluation is multiplicative away from poles") {
    const NormTraceCurve curve(2, 3);
    const Field& f = curve.field();
    const std::vector<MonomialTerm> terms{{1, 0}, {0, 1}, {-1, 2}, {2, 3}, {-3, 1}};
    for (const auto& p : curve.rational_places()) {
        if (p.at_infinity || p.x == 0) continue;
        for (const auto& a : terms)
            for (const auto& b : terms)
                CHECK(evaluate(curve, a * b, p) == f.mul(evaluate(curve, a, p), evaluate(curve, b, p)));
    }
}

TEST_CASE("poles raise and zeros vanish") {
    const NormTraceCurve curve(2, 3);
    const Place omega = curve.omega().front();
    CHECK_THROWS_AS(evaluate(curve, MonomialTerm{-1, 0}, omega), PoleError);
    CHECK_THROWS_AS(evaluate(curve, MonomialTerm{1, 0}, Place::infinity()), PoleError);
    CHECK(evaluate(curve, MonomialTerm{-2, 1}, Place::infinity()) == 0);
    CHECK(evaluate(curve, MonomialTerm{0, 0}, Place::infinity()) == 1);
    CHECK(evaluate(curve, MonomialTerm{1, 0}, omega) == 0);
}

TEST_CASE("function arithmetic") {
    const NormTraceCurve curve(2, 3);
    const Field& f = curve.field();
    // (x + 1)(x + 1) = x^2 + 1 in characteristic 2
    const auto g = FunctionElem::make(curve, {{1, {1, 0}}, {1, {0, 0}}});
    const auto sq = multiply(curve, g, g);
    for (const auto& p : curve.theta()) {
        if (p.at_infinity) continue;
        const Index v = evaluate(curve, g, p);
        CHECK(evaluate(curve, sq, p) == f.mul(v, v));
    }
    CHECK(FunctionElem::make(curve, {{1, {1, 0}}, {1, {1, 0}}}).entries.empty());
}

TEST_CASE("one-point basis") {
    const NormTraceCurve curve(2, 3);
    const auto b = basis_one_point(curve, 12);
    CHECK(b.size() == 6);
    for (const auto& t : b) CHECK(-t.valuation_at_infinity(curve) <= 12);
}
