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

#ifndef NTAG_CURVE_HPP
#define NTAG_CURVE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "ntag/gf.hpp"

namespace ntag {

/// Rational place of a norm-trace curve: the place at infinity or an affine
/// point. Ordering puts infinity first, then (x, y) by index.
struct Place {
    bool at_infinity = false;
    Index x = 0;
    Index y = 0;

    static Place infinity() { return {true, 0, 0}; }
    static Place affine(Index x, Index y) { return {false, x, y}; }

    auto operator<=>(const Place& o) const {
        if (at_infinity != o.at_infinity) return at_infinity ? std::strong_ordering::less : std::strong_ordering::greater;
        if (auto c = x <=> o.x; c != 0) return c;
        return y <=> o.y;
    }
    bool operator==(const Place&) const = default;
};

/// Finite formal sum of places; zero coefficients are never stored.
class Divisor {
   public:
    void add(const Place& p, long long coeff);
    long long coefficient(const Place& p) const;
    long long degree() const;
    std::vector<Place> support() const;
    const std::map<Place, long long>& entries() const noexcept { return entries_; }
    bool operator==(const Divisor&) const = default;

   private:
    std::map<Place, long long> entries_;
};

/**
 * Norm-trace curve x^c = y^(q^(r-1)) + ... + y over GF(q^r), with
 * c = (q^r-1)/(q-1) and h = q^(r-1).
 */
class NormTraceCurve {
   public:
    /// Requires q a prime power, r >= 2, q^r <= 2^20.
    NormTraceCurve(std::uint32_t q, std::uint32_t r);

    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t r() const noexcept { return r_; }
    /// q^r
    std::uint32_t field_order() const noexcept { return field_->order(); }
    std::uint64_t c() const noexcept { return c_; }
    std::uint64_t h() const noexcept { return h_; }
    std::uint64_t genus() const noexcept { return (h_ - 1) * (c_ - 1) / 2; }

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }

    /// Right-hand side y^(q^(r-1)) + ... + y.
    Index trace(Index y) const { return trace_[y]; }
    Index norm(Index x) const { return field_->pow(x, static_cast<long long>(c_)); }

    bool on_curve(Index x, Index y) const;
    /// Validated affine place; throws when (x, y) is not on the curve.
    Place place(Index x, Index y) const;

    /// P_inf followed by the affine places in (x, y) index order.
    const std::vector<Place>& rational_places() const noexcept { return places_; }
    /// Zeros of x: affine places with x = 0.
    std::vector<Place> omega() const;
    /// All rational places outside omega, P_inf first.
    std::vector<Place> theta() const;
    /// Affine y-coordinates above x0, ascending.
    std::vector<Index> fiber(Index x0) const;

    Divisor principal_divisor_x() const;
    Divisor principal_divisor_y() const;
    /// l * (sum of omega); l >= 1.
    Divisor divisor_G(long long l) const;
    /// Sum of theta.
    Divisor divisor_D() const;

   private:
    std::uint32_t q_;
    std::uint32_t r_;
    std::uint64_t c_;
    std::uint64_t h_;
    FieldPtr field_;
    std::vector<Index> trace_;
    std::vector<std::vector<Index>> by_trace_;
    std::vector<Place> places_;
};

}  // namespace ntag

#endif
