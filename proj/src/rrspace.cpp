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

#include "ntag/rrspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

namespace ntag {

FunctionElem FunctionElem::make(const NormTraceCurve& curve, std::vector<Entry> raw) {
    const Field& f = curve.field();
    std::map<std::pair<long long, long long>, Index> acc;
    for (const auto& e : raw) {
        auto& slot = acc[{e.term.i, e.term.j}];
        slot = f.add(slot, e.coeff);
    }
    FunctionElem out;
    for (const auto& [ij, c] : acc)
        if (c != 0) out.entries.push_back({c, {ij.first, ij.second}});
    std::stable_sort(out.entries.begin(), out.entries.end(), [&](const Entry& a, const Entry& b) {
        return a.term.valuation_at_infinity(curve) > b.term.valuation_at_infinity(curve);
    });
    return out;
}

FunctionElem multiply(const NormTraceCurve& curve, const FunctionElem& a, const FunctionElem& b) {
    const Field& f = curve.field();
    std::vector<FunctionElem::Entry> raw;
    for (const auto& x : a.entries)
        for (const auto& y : b.entries) raw.push_back({f.mul(x.coeff, y.coeff), x.term * y.term});
    return FunctionElem::make(curve, std::move(raw));
}

std::vector<long long> semigroup_nongaps(const NormTraceCurve& curve, long long bound) {
    const long long h = static_cast<long long>(curve.h());
    const long long c = static_cast<long long>(curve.c());
    std::vector<long long> out;
    for (long long s = 0; s <= bound; ++s) {
        // s = a h + b c with a, b >= 0; b < h suffices since gcd(h, c) = 1.
        for (long long b = 0; b * c <= s; ++b) {
            if ((s - b * c) % h == 0) {
                out.push_back(s);
                break;
            }
        }
    }
    return out;
}

std::vector<long long> semigroup_gaps(const NormTraceCurve& curve) {
    const long long top = 2 * static_cast<long long>(curve.genus());
    auto ng = semigroup_nongaps(curve, top);
    std::vector<long long> gaps;
    std::size_t k = 0;
    for (long long s = 0; s < top; ++s) {
        if (k < ng.size() && ng[k] == s)
            ++k;
        else
            gaps.push_back(s);
    }
    return gaps;
}

std::vector<MonomialTerm> basis_one_point(const NormTraceCurve& curve, long long s) {
    if (s < 0) throw std::invalid_argument("pole bound must be nonnegative");
    const long long h = static_cast<long long>(curve.h());
    const long long c = static_cast<long long>(curve.c());
    std::vector<MonomialTerm> out;
    for (long long j = 0; j < h && j * c <= s; ++j)
        for (long long i = 0; i * h + j * c <= s; ++i) out.push_back({i, j});
    std::sort(out.begin(), out.end(), [&](const MonomialTerm& a, const MonomialTerm& b) {
        return a.i * h + a.j * c < b.i * h + b.j * c;
    });
    return out;
}

std::vector<MonomialTerm> basis_multipoint(const NormTraceCurve& curve, long long l) {
    if (l < 1) throw std::invalid_argument("multipoint basis needs l >= 1");
    auto one = basis_one_point(curve, l * static_cast<long long>(curve.h()));
    for (auto& t : one) t.i -= l;
    return one;
}

Index evaluate(const NormTraceCurve& curve, const MonomialTerm& t, const Place& p) {
    const Field& f = curve.field();
    if (p.at_infinity) {
        // Valuation-0 monomials are powers of x^c y^-h, which is 1 at P_inf.
        const long long v = t.valuation_at_infinity(curve);
        if (v < 0) throw PoleError("monomial has a pole at P_inf");
        return v == 0 ? 1 : 0;
    }
    if ((t.i < 0 && p.x == 0) || (t.j < 0 && p.y == 0))
        throw PoleError("monomial has a pole at (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
    return f.mul(f.pow(p.x, t.i), f.pow(p.y, t.j));
}

Index evaluate(const NormTraceCurve& curve, const FunctionElem& fn, const Place& p) {
    const Field& f = curve.field();
    Index acc = 0;
    for (const auto& e : fn.entries) acc = f.add(acc, f.mul(e.coeff, evaluate(curve, e.term, p)));
    return acc;
}

MonomialTerm local_parameter_at_infinity(const NormTraceCurve& curve) {
    // Solve u h + v c = -1 and pick the canonical representative.
    const long long h = static_cast<long long>(curve.h());
    const long long c = static_cast<long long>(curve.c());
    long long old_r = h, r = c, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const long long qt = old_r / r;
        old_r -= qt * r;
        std::swap(old_r, r);
        old_s -= qt * s;
        std::swap(old_s, s);
        old_t -= qt * t;
        std::swap(old_t, t);
    }
    // old_s h + old_t c = 1
    const long long u0 = -old_s, v0 = -old_t;
    MonomialTerm best{u0, v0};
    auto cost = [](const MonomialTerm& m) { return std::llabs(m.i) + std::llabs(m.j); };
    const long long span = std::llabs(u0) / c + std::llabs(v0) / h + 2;
    for (long long k = -span; k <= span; ++k) {
        MonomialTerm cand{u0 + k * c, v0 - k * h};
        if (cost(cand) < cost(best) || (cost(cand) == cost(best) && cand.i < best.i)) best = cand;
    }
    return best;
}

Index extended_evaluate(const NormTraceCurve& curve, const FunctionElem& f, const Place& p, long long n,
                        const MonomialTerm& t) {
    if (n == 0) return evaluate(curve, f, p);
    return evaluate(curve, multiply(curve, FunctionElem::monomial(t.pow(n)), f), p);
}

}  // namespace ntag
