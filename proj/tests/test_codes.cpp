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

#include <random>

#include "doctest.h"
#include "ntag/codes.hpp"
#include "oracles.hpp"

using namespace ntag;

namespace {
std::vector<std::vector<Index>> rows_of(const Matrix& m) {
    std::vector<std::vector<Index>> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}
}  // namespace

TEST_CASE("dimension table for q = 2, r = 3") {
    const NormTraceCurve curve(2, 3);
    const std::vector<std::size_t> expected{2, 4, 6, 9, 12, 16, 20};
    for (long long l = 1; l <= 7; ++l) {
        const AGCode code = build_code(curve, l);
        CHECK(code.n == 29);
        CHECK(code.k == expected[l - 1]);
        CHECK(dimension_closed_form(2, 3, l) == static_cast<long long>(expected[l - 1]));
        CHECK(code.d_star == 29 - 4 * l);
        CHECK(designed_distance(curve, l) == 29 - 4 * l);
    }
}

TEST_CASE("rank, closed form and lattice count agree") {
    for (auto [q, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 4}, {3, 2}, {4, 2}}) {
        const NormTraceCurve curve(q, r);
        for (long long l = 1; l < static_cast<long long>(curve.field_order()); ++l) {
            CAPTURE(q);
            CAPTURE(r);
            CAPTURE(l);
            const AGCode code = build_code(curve, l);
            const auto lattice = oracle::lattice_count(curve.h(), curve.c(), l);
            CHECK(code.k == lattice);
            CHECK(dimension_closed_form(q, r, l) == static_cast<long long>(lattice));
        }
    }
    CHECK_THROWS_AS(dimension_closed_form(6, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(dimension_closed_form(2, 3, 0), std::invalid_argument);
}

TEST_CASE("delta branches") {
    CHECK(delta_branch(3, 3) == DeltaBranch::MultipleOfQ);
    CHECK(delta_branch(3, 2) == DeltaBranch::QMinusOne);
    CHECK(delta_branch(3, 5) == DeltaBranch::QMinusOne);
    CHECK(delta_branch(3, 4) == DeltaBranch::Other);
    CHECK(delta_branch(2, 4) == DeltaBranch::MultipleOfQ);
    CHECK(delta_branch(2, 3) == DeltaBranch::QMinusOne);
}

TEST_CASE("exhaustive minimum distance matches naive enumeration") {
    const NormTraceCurve curve(2, 3);
    const oracle::NaiveField o{2, 3, curve.field().modulus()};
    for (long long l = 1; l <= 2; ++l) {
        AGCode code = build_code(curve, l);
        const auto res = min_distance_exhaustive(code.generator, 1u << 20);
        CHECK(res.weight == oracle::min_weight(o, rows_of(code.generator)));
        CHECK(static_cast<long long>(res.weight) == code.d_star);
        CHECK(hamming_weight(combine_rows(code.generator, res.message)) == res.weight);
    }
}

TEST_CASE("odd characteristic search path") {
    const auto f = Field::build(3, 1);
    Matrix g(*f, 3, 6);
    const std::vector<std::vector<Index>> rows{{1, 0, 0, 1, 1, 2}, {0, 1, 0, 1, 2, 1}, {0, 0, 1, 2, 1, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 6; ++j) g.at(i, j) = rows[i][j];
    const oracle::NaiveField o{3, 1, f->modulus()};
    const auto res = min_distance_exhaustive(g, 1000);
    CHECK(res.weight == oracle::min_weight(o, rows));
    CHECK(res.examined == 13);

    const NormTraceCurve curve(3, 2);
    AGCode code = build_code(curve, 2);
    const oracle::NaiveField o9{3, 2, curve.field().modulus()};
    CHECK(min_distance_exhaustive(code.generator, 1u << 20).weight == oracle::min_weight(o9, rows_of(code.generator)));
}

TEST_CASE("budget and early stop") {
    const NormTraceCurve curve(2, 3);
    AGCode code = build_code(curve, 3);
    CHECK_THROWS_AS(min_distance_exhaustive(code.generator, 1000), BudgetExceeded);
    const auto res = min_distance_exhaustive(code, 1u << 20, true);
    CHECK(res.weight == 17);
    REQUIRE(code.d_exact);
    CHECK(*code.d_exact == 17);
}

TEST_CASE("witness codewords reach the designed distance") {
    const NormTraceCurve curve(2, 3);
    for (long long l = 1; l <= 5; ++l) {
        const AGCode code = build_code(curve, l);
        const Witness w = witness_codeword(code);
        CHECK(static_cast<long long>(hamming_weight(w.word)) == code.d_star);
        CHECK(echelon(code.generator).contains(w.word));
    }
    const AGCode code = build_code(curve, 2);
    CHECK_THROWS_AS(witness_codeword(code, std::vector<Index>{1, 1}), std::invalid_argument);
}

TEST_CASE("multipoint and extended one-point codes are monomially equivalent") {
    for (auto [q, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 2}}) {
        const NormTraceCurve curve(q, r);
        for (long long l = 1; l <= 5; ++l) {
            const AGCode a = build_code(curve, l);
            const AGCode b = extended_one_point_code(curve, l);
            CHECK(a.k == b.k);
            MonomialWitness proof;
            proof.diagonal = multipoint_to_extended_diagonal(curve, l);
            for (std::size_t i = 0; i < a.n; ++i) proof.permutation.push_back(i);
            CHECK(verify_monomial_witness(a.generator, b.generator, proof));
            const auto found = monomial_equivalence_check(a, b);
            REQUIRE(found);
            CHECK(verify_monomial_witness(a.generator, b.generator, *found));
        }
    }
}

TEST_CASE("inequivalent codes are rejected") {
    const NormTraceCurve curve(2, 3);
    const AGCode a = build_code(curve, 1);
    const AGCode b = build_code(curve, 2);
    CHECK(!monomial_equivalence_check(a.generator, b.generator));
    CHECK_THROWS_AS(build_code(curve, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_code(curve, 8), std::invalid_argument);
}

TEST_CASE("random generator matrices against the naive oracle") {
    std::mt19937 rng(7);
    for (auto [p, k, rows, cols] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t, std::size_t>>{
             {2, 2, 4, 9}, {2, 3, 3, 10}, {2, 1, 8, 20}, {3, 2, 3, 8}, {5, 1, 4, 9}, {2, 4, 3, 40}}) {
        const auto f = Field::build(p, k);
        const oracle::NaiveField o{p, k, f->modulus()};
        std::uniform_int_distribution<Index> pick(0, f->order() - 1);
        for (int trial = 0; trial < 5; ++trial) {
            Matrix g(*f, rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) g.at(i, j) = pick(rng);
            const auto res = min_distance_exhaustive(g, 1u << 24, std::nullopt, 3);
            CHECK(res.weight == oracle::min_weight(o, rows_of(g)));
        }
    }
}

TEST_CASE("exhaustive distance at l = 3 matches the oracle") {
    const NormTraceCurve curve(2, 3);
    const oracle::NaiveField o{2, 3, curve.field().modulus()};
    const AGCode code = build_code(curve, 3);
    CHECK(min_distance_exhaustive(code.generator, 1u << 20).weight == oracle::min_weight(o, rows_of(code.generator)));
}
