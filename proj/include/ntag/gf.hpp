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

#ifndef NTAG_GF_HPP
#define NTAG_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ntag {

/// Integer encoding of a field element: residue polynomial coefficients read
/// base-p, little-endian. Zero is 0, one is 1.
using Index = std::uint32_t;

/// Largest supported field order.
inline constexpr std::uint64_t max_field_order = 1u << 20;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * GF(p^k) with a fixed modulus and precomputed exp/log tables.
 *
 * Immutable after construction. Arithmetic is on raw indices; the checked
 * value type is FieldElement below. Subfields are not separate objects: the
 * subfield of order q is the set {a : a^q = a} inside this field.
 */
class Field {
   public:
    /// Canonical construction. With no modulus the smallest-encoding monic
    /// irreducible polynomial of degree k is used.
    static FieldPtr build(std::uint32_t p, std::uint32_t k,
                          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t order() const noexcept { return order_; }
    /// Coefficients c_0..c_k of the modulus, c_k = 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    /// Sum of c_i p^i over the modulus coefficients, leading term included.
    std::uint64_t modulus_encoding() const noexcept;
    Index generator() const noexcept { return exp_[1]; }

    Index zero() const noexcept { return 0; }
    Index one() const noexcept { return 1; }
    /// Image of the integer n in the prime field.
    Index from_int(long long n) const noexcept;

    bool contains(Index a) const noexcept { return a < order_; }

    Index add(Index a, Index b) const noexcept;
    Index sub(Index a, Index b) const noexcept;
    Index neg(Index a) const noexcept;
    Index mul(Index a, Index b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= order_ - 1) s -= order_ - 1;
        return exp_[s];
    }
    Index div(Index a, Index b) const;
    Index inv(Index a) const;
    /// Negative exponents allowed for nonzero a; 0^0 = 1.
    Index pow(Index a, long long e) const;
    /// a^(p^e); e may be any integer, reduced modulo k.
    Index frobenius(Index a, long long e) const noexcept;

    /// Discrete log base generator(); a must be nonzero.
    std::uint32_t log(Index a) const;
    Index exp(long long i) const noexcept;

    /// Sum of a^(q^i) for i < r where order() = q^r.
    Index trace_rel(Index a, std::uint32_t q) const;
    /// a^((q^r-1)/(q-1)) where order() = q^r.
    Index norm_rel(Index a, std::uint32_t q) const;
    /// The p^d elements fixed by a -> a^(p^d), in index order.
    std::vector<Index> subfield_elements(std::uint32_t d) const;
    bool in_subfield(Index a, std::uint32_t sub_order) const;

    /// Base-p digits of a (length k).
    std::vector<std::uint32_t> digits(Index a) const;
    Index from_digits(const std::vector<std::uint32_t>& d) const;

    /// Index map sending each element of this field to its image under a
    /// fixed embedding into target (root of this modulus with smallest index).
    std::vector<Index> embedding_into(const Field& target) const;

    std::string describe() const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

   private:
    Field() = default;

    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t order_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<Index> exp_;            // size order-1
    std::vector<std::uint32_t> log_;    // size order, log_[0] unused
    std::vector<Index> add_table_;      // order^2 when small and p odd
    std::vector<Index> neg_;
};

/// Exponent e with base^e = n, or nullopt when n is not a power of base.
std::optional<std::uint32_t> integer_log(std::uint64_t n, std::uint64_t base);
bool is_prime(std::uint64_t n);
/// Prime p and exponent e with p^e = n, or nullopt.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n);

/// Field element bound to its field. Mixing fields in one operation throws.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(const Field& f, Index v);

    const Field& field() const;
    Index index() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(long long e) const;
    FieldElement frobenius(long long e) const;

    bool operator==(const FieldElement& o) const noexcept { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const FieldElement& o) const noexcept { return !(*this == o); }
    bool operator<(const FieldElement& o) const noexcept { return v_ < o.v_; }

   private:
    const Field& same(const FieldElement& o) const;

    const Field* f_ = nullptr;
    Index v_ = 0;
};

FieldElement trace_rel(const FieldElement& a, std::uint32_t q);
FieldElement norm_rel(const FieldElement& a, std::uint32_t q);

}  // namespace ntag

#endif
