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

#include "ntag/autgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace ntag {

namespace {
Index scale_y(const NormTraceCurve& curve, Index b) {
    return curve.field().pow(b, static_cast<long long>(curve.c()));
}
}  // namespace

bool is_valid(const NormTraceCurve& curve, const CurveAut& s) {
    const Field& f = curve.field();
    if (!f.contains(s.a) || !f.contains(s.b) || s.b == 0) return false;
    return curve.trace(s.a) == 0 && f.in_subfield(scale_y(curve, s.b), curve.q());
}

void validate(const NormTraceCurve& curve, const CurveAut& s) {
    if (!is_valid(curve, s))
        throw std::invalid_argument("(a=" + std::to_string(s.a) + ", b=" + std::to_string(s.b) +
                                    ") is not an automorphism of the curve");
}

std::vector<CurveAut> enumerate_group(const NormTraceCurve& curve) {
    const auto kernel = curve.fiber(0);  // trace-zero elements
    std::vector<CurveAut> out;
    out.reserve(kernel.size() * (curve.field_order() - 1));
    for (Index b = 1; b < curve.field_order(); ++b)
        for (Index a : kernel) out.push_back({a, b});
    return out;
}

CurveAut compose(const NormTraceCurve& curve, const CurveAut& s1, const CurveAut& s2) {
    // s1(s2(x, y)) = (b1 b2 x, (b1 b2)^c y + b1^c a2 + a1)
    const Field& f = curve.field();
    return {f.add(f.mul(scale_y(curve, s1.b), s2.a), s1.a), f.mul(s1.b, s2.b)};
}

CurveAut inverse(const NormTraceCurve& curve, const CurveAut& s) {
    const Field& f = curve.field();
    const Index binv = f.inv(s.b);
    return {f.neg(f.mul(scale_y(curve, binv), s.a)), binv};
}

CurveAut power(const NormTraceCurve& curve, const CurveAut& s, std::uint64_t e) {
    CurveAut result = CurveAut::identity();
    CurveAut base = s;
    while (e > 0) {
        if (e & 1) result = compose(curve, result, base);
        base = compose(curve, base, base);
        e >>= 1;
    }
    return result;
}

std::uint64_t element_order(const NormTraceCurve& curve, const CurveAut& s) {
    CurveAut cur = s;
    std::uint64_t n = 1;
    while (!cur.is_identity()) {
        cur = compose(curve, s, cur);
        ++n;
    }
    return n;
}

Place apply_place(const NormTraceCurve& curve, const CurveAut& s, const Place& p) {
    if (p.at_infinity) return p;
    const Field& f = curve.field();
    return Place::affine(f.mul(s.b, p.x), f.add(f.mul(scale_y(curve, s.b), p.y), s.a));
}

Place frobenius_place(const NormTraceCurve& curve, const Place& p, std::uint32_t e) {
    if (p.at_infinity) return p;
    const Field& f = curve.field();
    return Place::affine(f.frobenius(p.x, e), f.frobenius(p.y, e));
}

Divisor apply_divisor(const NormTraceCurve& curve, const CurveAut& s, const Divisor& d) {
    Divisor out;
    for (const auto& [p, c] : d.entries()) out.add(apply_place(curve, s, p), c);
    return out;
}

std::size_t fixed_place_count(const NormTraceCurve& curve, const CurveAut& s) {
    std::size_t n = 0;
    for (const auto& p : curve.rational_places())
        if (apply_place(curve, s, p) == p) ++n;
    return n;
}

std::vector<std::vector<Place>> place_orbits(const NormTraceCurve& curve) {
    const auto group = enumerate_group(curve);
    std::set<Place> seen;
    std::vector<std::vector<Place>> out;
    for (const auto& p : curve.rational_places()) {
        if (seen.count(p)) continue;
        std::set<Place> orbit;
        for (const auto& s : group) orbit.insert(apply_place(curve, s, p));
        seen.insert(orbit.begin(), orbit.end());
        out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

std::vector<std::vector<Place>> short_orbits(const NormTraceCurve& curve) {
    const std::size_t order = static_cast<std::size_t>(curve.h()) * (curve.field_order() - 1);
    std::vector<std::vector<Place>> out;
    for (auto& o : place_orbits(curve))
        if (o.size() < order) out.push_back(std::move(o));
    return out;
}

std::vector<std::size_t> place_permutation(const AGCode& code, const CodeAut& g) {
    const NormTraceCurve& curve = *code.curve;
    validate(curve, g.aut);
    if (g.frob >= curve.field().k()) throw std::invalid_argument("Frobenius exponent must be below the field degree");
    std::map<Place, std::size_t> where;
    for (std::size_t i = 0; i < code.places.size(); ++i) where[code.places[i]] = i;
    std::vector<std::size_t> perm(code.places.size());
    for (std::size_t i = 0; i < code.places.size(); ++i) {
        const Place img = frobenius_place(curve, apply_place(curve, g.aut, code.places[i]), curve.field().k() - g.frob);
        auto it = where.find(img);
        if (it == where.end()) throw std::logic_error("automorphism moved a place outside the code support");
        perm[i] = it->second;
    }
    return perm;
}

std::vector<Index> code_action(const AGCode& code, const CodeAut& g, std::span<const Index> word) {
    const Field& f = code.curve->field();
    if (word.size() != code.n) throw std::invalid_argument("word length differs from code length");
    if (g.scalar == 0 || !f.contains(g.scalar)) throw std::invalid_argument("code automorphism scalar must be nonzero");
    const auto perm = place_permutation(code, g);
    std::vector<Index> out(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) out[i] = f.mul(g.scalar, f.frobenius(word[perm[i]], g.frob));
    return out;
}

bool is_code_automorphism(const AGCode& code, const Echelon& rows, const CodeAut& g) {
    for (std::size_t i = 0; i < code.generator.rows(); ++i)
        if (!rows.contains(code_action(code, g, code.generator.row(i)))) return false;
    return true;
}

bool is_code_automorphism(const AGCode& code, const CodeAut& g) {
    return is_code_automorphism(code, echelon(code.generator), g);
}

}  // namespace ntag
