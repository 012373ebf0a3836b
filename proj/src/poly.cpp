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

#include "ntag/poly.hpp"

#include <stdexcept>

namespace ntag {

Poly::Poly(const Field& f, std::vector<Index> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Field& f, Index coeff, std::size_t deg) {
    std::vector<Index> c(deg + 1, 0);
    c[deg] = coeff;
    return Poly(f, std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Index> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(*f_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Index> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_->sub(coeff(i), o.coeff(i));
    return Poly(*f_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(*f_);
    std::vector<Index> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = f_->add(c[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Poly(*f_, std::move(c));
}

Poly Poly::scaled(Index s) const {
    std::vector<Index> c(c_);
    for (auto& x : c) x = f_->mul(x, s);
    return Poly(*f_, std::move(c));
}

Poly Poly::pow(std::uint64_t e) const {
    Poly r(*f_, {1});
    Poly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc(*f_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(*f_, {c_[i]});
    return acc;
}

Index Poly::eval(Index x) const {
    Index acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

BiPoly BiPoly::from_x(const Poly& p) {
    BiPoly b(p.field());
    if (!p.is_zero()) b.rows_.push_back(p);
    return b;
}

BiPoly BiPoly::from_y(const Poly& p) {
    BiPoly b(p.field());
    for (Index c : p.coeffs()) b.rows_.push_back(Poly(p.field(), {c}));
    b.trim();
    return b;
}

Poly BiPoly::y_coeff(std::size_t j) const { return j < rows_.size() ? rows_[j] : Poly(*f_); }

void BiPoly::trim() {
    while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r(*f_);
    const std::size_t n = std::max(rows_.size(), o.rows_.size());
    for (std::size_t j = 0; j < n; ++j) r.rows_.push_back(y_coeff(j) + o.y_coeff(j));
    r.trim();
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r(*f_);
    const std::size_t n = std::max(rows_.size(), o.rows_.size());
    for (std::size_t j = 0; j < n; ++j) r.rows_.push_back(y_coeff(j) - o.y_coeff(j));
    r.trim();
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r(*f_);
    if (is_zero() || o.is_zero()) return r;
    r.rows_.assign(rows_.size() + o.rows_.size() - 1, Poly(*f_));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < o.rows_.size(); ++j) r.rows_[i + j] = r.rows_[i + j] + rows_[i] * o.rows_[j];
    r.trim();
    return r;
}

BiPoly BiPoly::scaled(Index s) const {
    BiPoly r(*f_);
    for (const auto& p : rows_) r.rows_.push_back(p.scaled(s));
    r.trim();
    return r;
}

BiPoly BiPoly::pow(std::uint64_t e) const {
    BiPoly r = from_x(Poly(*f_, {1}));
    BiPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

BiPoly substitute(const Poly& outer, const BiPoly& inner) {
    const Field& f = outer.field();
    BiPoly acc(f);
    for (std::size_t i = outer.coeffs().size(); i-- > 0;)
        acc = acc * inner + BiPoly::from_x(Poly(f, {outer.coeffs()[i]}));
    return acc;
}

std::vector<Root> roots_in_field(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has every element as a root");
    const Field& f = p.field();
    std::vector<Root> out;
    for (Index x = 0; x < f.order(); ++x) {
        if (p.eval(x) != 0) continue;
        // divide out (X - x) repeatedly by synthetic division
        Poly cur = p;
        std::size_t mult = 0;
        for (;;) {
            if (cur.eval(x) != 0) break;
            ++mult;
            std::vector<Index> qc(static_cast<std::size_t>(cur.degree()), 0);
            Index carry = 0;
            for (std::size_t i = cur.coeffs().size(); i-- > 1;) {
                carry = f.add(f.mul(carry, x), cur.coeffs()[i]);
                qc[i - 1] = carry;
            }
            cur = Poly(f, std::move(qc));
            if (cur.is_zero()) break;
        }
        out.push_back({x, mult});
    }
    return out;
}

}  // namespace ntag
