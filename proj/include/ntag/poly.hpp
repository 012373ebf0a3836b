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

#ifndef NTAG_POLY_HPP
#define NTAG_POLY_HPP

#include <vector>

#include "ntag/gf.hpp"

namespace ntag {

/// Dense univariate polynomial, lowest degree first, never with trailing zeros.
class Poly {
   public:
    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<Index> coeffs);
    static Poly monomial(const Field& f, Index coeff, std::size_t deg);

    const Field& field() const { return *f_; }
    const std::vector<Index>& coeffs() const noexcept { return c_; }
    /// -1 for the zero polynomial.
    long long degree() const noexcept { return static_cast<long long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Index coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Index lead() const noexcept { return c_.empty() ? 0 : c_.back(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Index s) const;
    Poly pow(std::uint64_t e) const;
    /// this(inner(X))
    Poly compose(const Poly& inner) const;
    Index eval(Index x) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

   private:
    void trim();
    const Field* f_;
    std::vector<Index> c_;
};

/// Polynomial in X and Y stored as coefficients (polynomials in X) of Y^j.
class BiPoly {
   public:
    explicit BiPoly(const Field& f) : f_(&f) {}
    static BiPoly from_x(const Poly& p);
    static BiPoly from_y(const Poly& p);

    const Field& field() const { return *f_; }
    const std::vector<Poly>& by_y() const noexcept { return rows_; }
    Poly y_coeff(std::size_t j) const;
    bool is_zero() const noexcept { return rows_.empty(); }

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly scaled(Index s) const;
    BiPoly pow(std::uint64_t e) const;
    bool operator==(const BiPoly& o) const { return rows_ == o.rows_; }

   private:
    void trim();
    const Field* f_;
    std::vector<Poly> rows_;
};

/// Sum of coeffs[i] * inner^i.
BiPoly substitute(const Poly& outer, const BiPoly& inner);

/// Roots with multiplicities found by enumerating the field.
struct Root {
    Index value;
    std::size_t multiplicity;
};
std::vector<Root> roots_in_field(const Poly& p);

}  // namespace ntag

#endif
