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

// Slow, independent reference implementations used as test oracles. They
// share nothing with the library beyond the index encoding of elements.

#ifndef NTAG_TESTS_ORACLES_HPP
#define NTAG_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Digits = std::vector<std::uint32_t>;

inline std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Monic polynomials over GF(p) of degree k, by encoding (leading term included).
inline std::uint64_t encode(const Digits& c, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

inline Digits decode(std::uint64_t v, std::uint32_t p, std::size_t len) {
    Digits d(len, 0);
    for (std::size_t i = 0; i < len; ++i, v /= p) d[i] = static_cast<std::uint32_t>(v % p);
    return d;
}

inline Digits poly_mul_p(const Digits& a, const Digits& b, std::uint32_t p) {
    Digits r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

/// Encodings of all monic irreducibles of degree k, by sieving out every
/// product of two monic polynomials of positive degree.
inline std::vector<std::uint64_t> irreducibles(std::uint32_t p, std::uint32_t k) {
    std::set<std::uint64_t> reducible;
    for (std::uint32_t d1 = 1; d1 <= k / 2; ++d1) {
        const std::uint32_t d2 = k - d1;
        for (std::uint64_t t1 = 0; t1 < ipow(p, d1); ++t1)
            for (std::uint64_t t2 = 0; t2 < ipow(p, d2); ++t2) {
                Digits a = decode(t1, p, d1), b = decode(t2, p, d2);
                a.push_back(1);
                b.push_back(1);
                reducible.insert(encode(poly_mul_p(a, b, p), p));
            }
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 0; t < ipow(p, k); ++t) {
        Digits m = decode(t, p, k);
        m.push_back(1);
        if (!reducible.count(encode(m, p))) out.push_back(encode(m, p));
    }
    return out;
}

/// GF(p^k) by schoolbook polynomial arithmetic modulo a given modulus.
struct NaiveField {
    std::uint32_t p, k;
    Digits modulus;  // c_0..c_k, monic

    std::uint32_t order() const { return static_cast<std::uint32_t>(ipow(p, k)); }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        Digits x = decode(a, p, k), y = decode(b, p, k);
        for (std::uint32_t i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
        return static_cast<std::uint32_t>(encode(x, p));
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        Digits r = poly_mul_p(decode(a, p, k), decode(b, p, k), p);
        for (std::size_t i = r.size(); i-- > k;) {
            const std::uint32_t t = r[i];
            if (!t) continue;
            for (std::uint32_t j = 0; j <= k; ++j) r[i - k + j] = (r[i - k + j] + (p - t) * modulus[j]) % p;
        }
        r.resize(k);
        return static_cast<std::uint32_t>(encode(r, p));
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }
    /// a + a^q + ... + a^(q^(r-1)) for order() = q^r.
    std::uint32_t trace(std::uint32_t a, std::uint32_t q) const {
        std::uint32_t acc = 0, cur = a;
        for (std::uint64_t s = q; s <= order(); s *= q) {
            acc = add(acc, cur);
            cur = pow(cur, q);
        }
        return acc;
    }
};

/// Affine points (x, y) with x^c = y^(q^(r-1)) + ... + y.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> curve_points(const NaiveField& f, std::uint32_t q) {
    std::uint32_t r = 0;
    for (std::uint64_t s = 1; s < f.order(); s *= q) ++r;
    const std::uint64_t c = (f.order() - 1) / (q - 1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t x = 0; x < f.order(); ++x)
        for (std::uint32_t y = 0; y < f.order(); ++y)
            if (f.pow(x, c) == f.trace(y, q)) out.emplace_back(x, y);
    return out;
}

/// Integers in [0, 2g) not of the form a h + b c, counted directly.
inline std::uint64_t gap_count(std::uint64_t h, std::uint64_t c) {
    const std::uint64_t bound = h * c;
    std::vector<bool> hit(bound + 1, false);
    for (std::uint64_t a = 0; a * h <= bound; ++a)
        for (std::uint64_t b = 0; a * h + b * c <= bound; ++b) hit[a * h + b * c] = true;
    return static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), false));
}

/// #{(i, j) : i >= 0, 0 <= j < h, i h + j c <= l h}.
inline std::uint64_t lattice_count(std::uint64_t h, std::uint64_t c, std::uint64_t l) {
    std::uint64_t n = 0;
    for (std::uint64_t j = 0; j < h && j * c <= l * h; ++j) n += (l * h - j * c) / h + 1;
    return n;
}

/// Minimum nonzero weight over every message (no projective shortcut).
template <class F>
std::size_t min_weight(const F& f, const std::vector<std::vector<std::uint32_t>>& g) {
    const std::size_t k = g.size(), n = g.front().size();
    const std::uint64_t total = ipow(f.order(), static_cast<std::uint32_t>(k));
    std::size_t best = n + 1;
    for (std::uint64_t t = 1; t < total; ++t) {
        const Digits msg = decode(t, f.order(), k);
        std::vector<std::uint32_t> w(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            if (msg[i])
                for (std::size_t j = 0; j < n; ++j) w[j] = f.add(w[j], f.mul(msg[i], g[i][j]));
        const auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](auto v) { return v != 0; }));
        if (wt) best = std::min(best, wt);
    }
    return best;
}

}  // namespace oracle

#endif
