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

#include "ntag/curve.hpp"

#include <stdexcept>
#include <string>

namespace ntag {

void Divisor::add(const Place& p, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = entries_.emplace(p, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) entries_.erase(it);
    }
}

long long Divisor::coefficient(const Place& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

long long Divisor::degree() const {
    long long d = 0;
    for (const auto& [p, c] : entries_) d += c;
    return d;
}

std::vector<Place> Divisor::support() const {
    std::vector<Place> out;
    out.reserve(entries_.size());
    for (const auto& [p, c] : entries_) out.push_back(p);
    return out;
}

NormTraceCurve::NormTraceCurve(std::uint32_t q, std::uint32_t r) : q_(q), r_(r) {
    auto pp = prime_power(q);
    if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    if (r < 2) throw std::invalid_argument("norm-trace curves need r >= 2, got r = " + std::to_string(r));
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        order *= q;
        if (order > max_field_order)
            throw std::invalid_argument("q^r exceeds the supported field order " + std::to_string(max_field_order));
    }
    field_ = Field::build(pp->first, pp->second * r);
    h_ = order / q;
    c_ = (order - 1) / (q - 1);

    const Field& f = *field_;
    trace_.resize(f.order());
    by_trace_.resize(f.order());
    for (Index y = 0; y < f.order(); ++y) {
        trace_[y] = f.trace_rel(y, q);
        by_trace_[trace_[y]].push_back(y);
    }

    places_.reserve(static_cast<std::size_t>(order * h_ + 1));
    places_.push_back(Place::infinity());
    for (Index x = 0; x < f.order(); ++x)
        for (Index y : by_trace_[norm(x)]) places_.push_back(Place::affine(x, y));
}

bool NormTraceCurve::on_curve(Index x, Index y) const {
    if (!field_->contains(x) || !field_->contains(y)) return false;
    return norm(x) == trace_[y];
}

Place NormTraceCurve::place(Index x, Index y) const {
    if (!on_curve(x, y))
        throw std::invalid_argument("(" + std::to_string(x) + ", " + std::to_string(y) + ") is not on the curve");
    return Place::affine(x, y);
}

std::vector<Index> NormTraceCurve::fiber(Index x0) const { return by_trace_.at(norm(x0)); }

std::vector<Place> NormTraceCurve::omega() const {
    std::vector<Place> out;
    for (Index y : by_trace_[0]) out.push_back(Place::affine(0, y));
    return out;
}

std::vector<Place> NormTraceCurve::theta() const {
    std::vector<Place> out;
    out.reserve(places_.size() - h_);
    for (const auto& p : places_)
        if (p.at_infinity || p.x != 0) out.push_back(p);
    return out;
}

Divisor NormTraceCurve::principal_divisor_x() const {
    Divisor d;
    for (const auto& p : omega()) d.add(p, 1);
    d.add(Place::infinity(), -static_cast<long long>(h_));
    return d;
}

Divisor NormTraceCurve::principal_divisor_y() const {
    Divisor d;
    d.add(Place::affine(0, 0), static_cast<long long>(c_));
    d.add(Place::infinity(), -static_cast<long long>(c_));
    return d;
}

Divisor NormTraceCurve::divisor_G(long long l) const {
    if (l < 1) throw std::invalid_argument("G needs l >= 1");
    Divisor d;
    for (const auto& p : omega()) d.add(p, l);
    return d;
}

Divisor NormTraceCurve::divisor_D() const {
    Divisor d;
    for (const auto& p : theta()) d.add(p, 1);
    return d;
}

}  // namespace ntag
