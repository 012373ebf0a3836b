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

#ifndef NTAG_AUTGROUP_HPP
#define NTAG_AUTGROUP_HPP

#include <cstdint>
#include <vector>

#include "ntag/codes.hpp"
#include "ntag/curve.hpp"

namespace ntag {

/**
 * Automorphism (x, y) -> (b x, b^c y + a) of the norm-trace curve.
 *
 * a is the translation part (trace zero), b the scaling part (nonzero).
 * Every element of the group factors uniquely this way.
 */
struct CurveAut {
    Index a = 0;
    Index b = 1;

    static CurveAut identity() { return {0, 1}; }
    static CurveAut translation(Index a) { return {a, 1}; }
    static CurveAut scaling(Index b) { return {0, b}; }
    bool is_identity() const noexcept { return a == 0 && b == 1; }
    auto operator<=>(const CurveAut&) const = default;
};

/// Code automorphism: place permutation from aut and Frobenius x -> x^(p^frob),
/// entrywise Frobenius, then multiplication by scalar.
struct CodeAut {
    CurveAut aut;
    std::uint32_t frob = 0;
    Index scalar = 1;
};

bool is_valid(const NormTraceCurve& curve, const CurveAut& s);
/// Throws std::invalid_argument unless is_valid.
void validate(const NormTraceCurve& curve, const CurveAut& s);

/// All q^(r-1)(q^r-1) elements, translation part varying fastest.
std::vector<CurveAut> enumerate_group(const NormTraceCurve& curve);

/// s1 after s2.
CurveAut compose(const NormTraceCurve& curve, const CurveAut& s1, const CurveAut& s2);
CurveAut inverse(const NormTraceCurve& curve, const CurveAut& s);
/// s^e for e >= 0.
CurveAut power(const NormTraceCurve& curve, const CurveAut& s, std::uint64_t e);
std::uint64_t element_order(const NormTraceCurve& curve, const CurveAut& s);

Place apply_place(const NormTraceCurve& curve, const CurveAut& s, const Place& p);
/// (x, y) -> (x^(p^e), y^(p^e)); P_inf fixed.
Place frobenius_place(const NormTraceCurve& curve, const Place& p, std::uint32_t e);

Divisor apply_divisor(const NormTraceCurve& curve, const CurveAut& s, const Divisor& d);
std::size_t fixed_place_count(const NormTraceCurve& curve, const CurveAut& s);

/// Orbits of the full group on the rational places, each sorted; orbits
/// ordered by their smallest place.
std::vector<std::vector<Place>> place_orbits(const NormTraceCurve& curve);
/// Orbits strictly smaller than the group.
std::vector<std::vector<Place>> short_orbits(const NormTraceCurve& curve);

/// perm[i] = index in code.places of frob^(-e)(aut(places[i])).
std::vector<std::size_t> place_permutation(const AGCode& code, const CodeAut& g);
/// w'[i] = scalar * w[perm[i]]^(p^e); maps the word of f to that of f^(p^e) o aut.
std::vector<Index> code_action(const AGCode& code, const CodeAut& g, std::span<const Index> word);
/// Every transformed generator row lies in the row space of the code.
bool is_code_automorphism(const AGCode& code, const CodeAut& g);
bool is_code_automorphism(const AGCode& code, const Echelon& rows, const CodeAut& g);

}  // namespace ntag

#endif
