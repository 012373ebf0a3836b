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

#include <map>
#include <set>

#include "doctest.h"
#include "ntag/gf.hpp"
#include "oracles.hpp"

using namespace ntag;

namespace {
oracle::NaiveField naive(const Field& f) { return {f.p(), f.k(), f.modulus()}; }
}  // namespace

TEST_CASE("default modulus is the smallest irreducible") {
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> cases{{2, 2}, {2, 3}, {2, 4}, {2, 6},
                                                                     {3, 2}, {3, 3}, {5, 2}, {7, 2}};
    for (auto [p, k] : cases) {
        CAPTURE(p);
        CAPTURE(k);
        const auto f = Field::build(p, k);
        const auto irr = oracle::irreducibles(p, k);
        REQUIRE(!irr.empty());
        CHECK(f->modulus_encoding() == irr.front());
    }
    CHECK(Field::build(2, 3)->modulus_encoding() == 11);
}

TEST_CASE("explicit modulus accepted only when irreducible") {
    CHECK_NOTHROW(Field::build(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1}));
    CHECK_THROWS_AS(Field::build(2, 3, std::vector<std::uint32_t>{1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Field::build(2, 3, std::vector<std::uint32_t>{1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Field::build(6, 1), std::invalid_argument);
}

TEST_CASE("multiplication and addition agree with polynomial arithmetic") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
        const auto f = Field::build(p, k);
        const auto o = naive(*f);
        for (Index a = 0; a < f->order(); ++a)
            for (Index b = 0; b < f->order(); ++b) {
                REQUIRE(f->mul(a, b) == o.mul(a, b));
                REQUIRE(f->add(a, b) == o.add(a, b));
                REQUIRE(f->add(f->sub(a, b), b) == a);
            }
    }
}

TEST_CASE("exp and log are inverse bijections") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 6}, {3, 4}, {7, 2}, {2, 10}}) {
        const auto f = Field::build(p, k);
        std::set<std::uint32_t> logs;
        for (Index a = 1; a < f->order(); ++a) {
            REQUIRE(f->exp(f->log(a)) == a);
            logs.insert(f->log(a));
        }
        CHECK(logs.size() == f->order() - 1);
    }
}

TEST_CASE("generator is the smallest element of full order") {
    const auto f = Field::build(3, 3);
    const auto o = naive(*f);
    auto full_order = [&](Index g) {
        Index x = g;
        for (std::uint32_t t = 1; t < f->order() - 1; ++t, x = o.mul(x, g))
            if (x == 1) return false;
        return true;
    };
    Index smallest = 1;
    while (!full_order(smallest)) ++smallest;
    CHECK(f->generator() == smallest);
}

TEST_CASE("inverse, division and powers") {
    const auto f = Field::build(2, 4);
    CHECK_THROWS_AS(f->inv(0), std::domain_error);
    for (Index a = 1; a < f->order(); ++a) {
        CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->pow(a, -1) == f->inv(a));
        CHECK(f->pow(a, 15) == 1);
        CHECK(f->frobenius(a, 1) == f->mul(a, a));
        CHECK(f->frobenius(a, 4) == a);
    }
}

TEST_CASE("relative trace and norm") {
    for (auto [q, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 3}, {2, 4}, {4, 3}, {8, 2}}) {
        CAPTURE(q);
        CAPTURE(r);
        const auto pk = prime_power(q);
        const auto f = Field::build(pk->first, pk->second * r);
        const auto o = naive(*f);
        const std::uint64_t c = (f->order() - 1) / (q - 1);
        std::map<Index, std::size_t> tr_fiber, nm_fiber;
        for (Index a = 0; a < f->order(); ++a) {
            const Index t = f->trace_rel(a, q), n = f->norm_rel(a, q);
            REQUIRE(t == o.trace(a, q));
            REQUIRE(f->in_subfield(t, q));
            REQUIRE(f->in_subfield(n, q));
            ++tr_fiber[t];
            if (a) ++nm_fiber[n];
        }
        CHECK(tr_fiber.size() == q);
        for (auto [v, cnt] : tr_fiber) CHECK(cnt == f->order() / q);
        CHECK(nm_fiber.size() == q - 1);
        for (auto [v, cnt] : nm_fiber) CHECK(cnt == c);
        for (Index a = 0; a < f->order(); a += 3)
            for (Index b = 0; b < f->order(); b += 5) {
                REQUIRE(f->trace_rel(f->add(a, b), q) == f->add(f->trace_rel(a, q), f->trace_rel(b, q)));
                REQUIRE(f->norm_rel(f->mul(a, b), q) == f->mul(f->norm_rel(a, q), f->norm_rel(b, q)));
            }
    }
}

TEST_CASE("subfields and embeddings") {
    const auto f = Field::build(2, 6);
    CHECK(f->subfield_elements(2).size() == 4);
    CHECK(f->subfield_elements(3).size() == 8);
    CHECK(f->subfield_elements(6).size() == 64);

    const auto small = Field::build(2, 2);
    const auto map = small->embedding_into(*f);
    for (Index a = 0; a < 4; ++a)
        for (Index b = 0; b < 4; ++b) {
            CHECK(map[small->add(a, b)] == f->add(map[a], map[b]));
            CHECK(map[small->mul(a, b)] == f->mul(map[a], map[b]));
        }
    CHECK_THROWS(Field::build(2, 3)->embedding_into(*Field::build(2, 4)));
}

TEST_CASE("field elements refuse to mix fields") {
    const auto f = Field::build(2, 3);
    const auto g = Field::build(2, 3);
    const FieldElement a(*f, 3), b(*g, 3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK((a * a).index() == f->mul(3, 3));
    CHECK((a / a).index() == 1);
    CHECK(trace_rel(a, 2).index() == f->trace_rel(3, 2));
}

TEST_CASE("digits and integer helpers") {
    const auto f = Field::build(3, 3);
    for (Index a = 0; a < f->order(); ++a) CHECK(f->from_digits(f->digits(a)) == a);
    CHECK(f->from_int(-1) == f->neg(1));
    CHECK(integer_log(243, 3) == 5u);
    CHECK(!integer_log(244, 3));
    CHECK(prime_power(49) == std::pair<std::uint32_t, std::uint32_t>{7, 2});
    CHECK(!prime_power(12));
    CHECK(is_prime(97));
    CHECK(!is_prime(91));
}
