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

#ifndef NTAG_RRSPACE_HPP
#define NTAG_RRSPACE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ntag/curve.hpp"

namespace ntag {

/// Evaluation hit a pole.
class PoleError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// x^i y^j. Exponents may be negative in formal products.
struct MonomialTerm {
    long long i = 0;
    long long j = 0;

    /// -(i h + j c): valuation at P_inf.
    long long valuation_at_infinity(const NormTraceCurve& curve) const {
        return -(i * static_cast<long long>(curve.h()) + j * static_cast<long long>(curve.c()));
    }
    MonomialTerm operator*(const MonomialTerm& o) const { return {i + o.i, j + o.j}; }
    MonomialTerm pow(long long n) const { return {i * n, j * n}; }
    bool operator==(const MonomialTerm&) const = default;
};

/// Linear combination of monomials. Use FunctionElem::make to get the
/// canonical form (nonzero coefficients, distinct terms, sorted by pole order).
struct FunctionElem {
    struct Entry {
        Index coeff;
        MonomialTerm term;
    };
    std::vector<Entry> entries;

    static FunctionElem make(const NormTraceCurve& curve, std::vector<Entry> raw);
    static FunctionElem monomial(MonomialTerm t, Index coeff = 1) { return {{{coeff, t}}}; }
    static FunctionElem constant(Index c) { return monomial({0, 0}, c); }
};

FunctionElem multiply(const NormTraceCurve& curve, const FunctionElem& a, const FunctionElem& b);

/// Non-gaps of the semigroup generated by h and c, up to bound, ascending.
std::vector<long long> semigroup_nongaps(const NormTraceCurve& curve, long long bound);
/// Gaps of the same semigroup (all lie below 2g).
std::vector<long long> semigroup_gaps(const NormTraceCurve& curve);

/// Basis of L(s P_inf): x^i y^j with i >= 0, 0 <= j < h, i h + j c <= s,
/// sorted by pole order.
std::vector<MonomialTerm> basis_one_point(const NormTraceCurve& curve, long long s);
/// Basis of L(l * Omega): the one-point basis for l h shifted by x^-l.
std::vector<MonomialTerm> basis_multipoint(const NormTraceCurve& curve, long long l);

/// Value of a single monomial at a place; throws PoleError on a pole.
Index evaluate(const NormTraceCurve& curve, const MonomialTerm& t, const Place& p);
Index evaluate(const NormTraceCurve& curve, const FunctionElem& f, const Place& p);

/// x^u y^v with valuation +1 at P_inf; minimal |u|+|v|, ties to smaller u.
MonomialTerm local_parameter_at_infinity(const NormTraceCurve& curve);

/// evaluate(t^n f, P) with the product formed exactly.
Index extended_evaluate(const NormTraceCurve& curve, const FunctionElem& f, const Place& p, long long n,
                        const MonomialTerm& t);

}  // namespace ntag

#endif
