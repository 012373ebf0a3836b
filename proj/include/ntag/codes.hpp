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

#ifndef NTAG_CODES_HPP
#define NTAG_CODES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ntag/curve.hpp"
#include "ntag/errors.hpp"
#include "ntag/matrix.hpp"
#include "ntag/rrspace.hpp"

namespace ntag {

/**
 * Evaluation code over the places of Theta (P_inf first).
 *
 * The multipoint code uses L(l * Omega); the extended one-point code uses
 * L(l h P_inf) with P_inf evaluated through t^(l h), t the canonical local
 * parameter. The curve must outlive the code.
 */
struct AGCode {
    const NormTraceCurve* curve = nullptr;
    long long ell = 0;
    bool extended = false;
    std::vector<Place> places;
    std::vector<MonomialTerm> basis;
    Matrix generator;  // one row per basis element
    std::size_t n = 0;
    std::size_t k = 0;  // rank of generator
    long long d_star = 0;
    std::optional<long long> d_exact;
};

/// C_L(D, G) with G = l * Omega, D = sum of Theta; 1 <= l <= q^r - 1.
AGCode build_code(const NormTraceCurve& curve, long long l);
/// C_ext(D, l h P_inf) over the same places.
AGCode extended_one_point_code(const NormTraceCurve& curve, long long l);

/// n - deg G = q^(2r-1) + 1 - (l+1) q^(r-1).
long long designed_distance(const NormTraceCurve& curve, long long l);

enum class DeltaBranch { MultipleOfQ, QMinusOne, Other };
/// Branch of the low-range dimension formula taken for l.
DeltaBranch delta_branch(std::uint32_t q, long long l);

/**
 * Dimension from the closed forms: l h + 1 - g for c-2 <= l <= q^r-1 and the
 * floor-sum expansion with its three-way correction term for 1 <= l <= c-3.
 */
long long dimension_closed_form(std::uint32_t q, std::uint32_t r, long long l);

struct Witness {
    std::vector<Index> roots;  // c_1..c_l
    FunctionElem function;     // prod (x - c_i)/x
    std::vector<Index> word;
};
/// Codeword of prod (x - c_i)/x. Defaults to c_i = 1..l (index order).
Witness witness_codeword(const AGCode& code, std::optional<std::vector<Index>> roots = std::nullopt);

struct MinDistanceResult {
    std::size_t weight = 0;
    std::vector<Index> message;  // one message reaching weight
    std::uint64_t examined = 0;  // codewords visited (up to scalar multiples)
    bool stopped_early = false;
};

/**
 * Exhaustive minimum weight over all nonzero messages, one per projective
 * class. Throws BudgetExceeded when |F|^k > budget. With stop_at set, the
 * search halts once a word of that weight is seen.
 */
MinDistanceResult min_distance_exhaustive(const Matrix& generator, std::uint64_t budget,
                                          std::optional<std::size_t> stop_at = std::nullopt,
                                          unsigned threads = 0);
/// Code variant: stops at d* and records d_exact.
MinDistanceResult min_distance_exhaustive(AGCode& code, std::uint64_t budget, bool stop_at_designed = true,
                                          unsigned threads = 0);

struct MonomialWitness {
    std::vector<std::size_t> permutation;  // column j of a goes to permutation[j] of b
    std::vector<Index> diagonal;           // applied to a's columns before permuting
};

/// True when rowspace(a * diag, permuted) equals rowspace(b).
bool verify_monomial_witness(const Matrix& a, const Matrix& b, const MonomialWitness& w);

/**
 * Identity-permutation search for a diagonal taking rowspace(a) to
 * rowspace(b). The diagonal is read off the ratios of the two reduced
 * echelon forms; each connected block is normalised to 1 on its first column.
 */
std::optional<MonomialWitness> monomial_equivalence_check(const Matrix& a, const Matrix& b);
std::optional<MonomialWitness> monomial_equivalence_check(const AGCode& a, const AGCode& b);

/// x(P)^l on affine places and (t^(l h) x^l)(P_inf) at infinity.
std::vector<Index> multipoint_to_extended_diagonal(const NormTraceCurve& curve, long long l);

}  // namespace ntag

#endif
