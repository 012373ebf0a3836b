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

#ifndef NTAG_SEPCURVE_HPP
#define NTAG_SEPCURVE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ntag/errors.hpp"
#include "ntag/gf.hpp"
#include "ntag/poly.hpp"

namespace ntag {

enum class SpecViolation {
    DegreeBelowFour,
    NotAdditive,
    ZeroLinearCoefficient,  // a_0 = 0
    ZeroLeadingA,           // a_n = 0
    ZeroLeadingB,           // b_m = 0
    MDivisibleByP,
    NBelowOne,
    MBelowTwo,
    WrongCharacteristic,
};

std::string to_string(SpecViolation v);

class SpecError : public std::invalid_argument {
   public:
    SpecError(SpecViolation v, const std::string& what) : std::invalid_argument(what), violation(v) {}
    SpecViolation violation;
};

/**
 * Curve A(Y) = B(X) with A(Y) = sum a_j Y^(p^j) and B(X) = sum b_i X^i.
 * Coefficients are indices into the host field.
 */
struct SeparatedCurveSpec {
    FieldPtr field;
    std::map<std::uint32_t, Index> a;  // j -> a_j, zero entries dropped
    std::vector<Index> b;              // b_0..b_m

    std::uint32_t p() const { return field->p(); }
    std::uint32_t n() const { return a.empty() ? 0 : a.rbegin()->first; }
    std::uint32_t m() const { return b.empty() ? 0 : static_cast<std::uint32_t>(b.size() - 1); }
    /// p^n
    std::uint64_t a_degree() const;

    Poly A() const;
    Poly B() const;

    /// Same curve with coefficients mapped into target.
    SeparatedCurveSpec embedded_in(const FieldPtr& target) const;
};

/// Builds a spec from dense A and B, rejecting non-additive A.
SeparatedCurveSpec spec_from_polynomials(const FieldPtr& field, const Poly& a, const Poly& b);

/// Checks every defining condition (distinct SpecError per violation) and the
/// sampled identity A(u+v) = A(u) + A(v). Returns the spec unchanged.
const SeparatedCurveSpec& validate(const SeparatedCurveSpec& spec);

std::uint64_t genus(const SeparatedCurveSpec& spec);
/// gcd of the j >= 1 with a_j != 0.
std::uint32_t linearization_gcd(const SeparatedCurveSpec& spec);
/// A(mu Y) = mu A(Y) as polynomials.
bool scales_linearly(const SeparatedCurveSpec& spec, Index mu);

/// Point map (x, y) -> (b x + c, a y + Q(x)).
struct AffineMap {
    Index a = 1;
    Index b = 1;
    Index c = 0;
    std::vector<Index> q;  // Q coefficients, trailing zeros trimmed

    auto operator<=>(const AffineMap&) const = default;
};

AffineMap compose(const Field& f, const AffineMap& s1, const AffineMap& s2);
AffineMap inverse(const Field& f, const AffineMap& s);

/// Factor k1 with A(aY + Q(X)) - B(bX + c) = k1 (A(Y) - B(X)), found by full
/// bivariate expansion; nullopt when no such k1 exists.
std::optional<Index> preserving_factor(const SeparatedCurveSpec& spec, const AffineMap& s);

enum class MonomialCase { CaseI, CaseII, NonMonomialB };
std::string to_string(MonomialCase c);

struct ClassificationResult {
    MonomialCase which = MonomialCase::CaseII;
    std::uint32_t d = 0;
    std::optional<std::uint64_t> predicted_full_order;
    std::uint64_t predicted_stabilizer_order = 0;
    std::vector<std::string> generators;
    std::vector<std::string> notes;
    Index shift = 0;  // b_(m-1) / (m b_m)
};

/// b_m (X + shift)^m == B(X), checked by binomial expansion.
bool is_monomial_translate(const SeparatedCurveSpec& spec);

/// Requires a monomial translate B and m != 1 mod p^n.
ClassificationResult classify_monomial(const SeparatedCurveSpec& spec);
/// classify_monomial, or a NonMonomialB report with the translation count.
ClassificationResult classify(const SeparatedCurveSpec& spec);

/**
 * All maps (x, y) -> (b x + c, a y + Q(x)) with deg(Q) p^n < m preserving
 * the curve, over search_field. Throws BudgetExceeded when |F|^(3+#Q) is over
 * budget and std::runtime_error when the result is not closed under
 * composition (search field too small). Sorted by (a, b, c, Q).
 */
struct StabilizerSearch {
    SeparatedCurveSpec spec;  // coefficients embedded in the search field
    std::vector<AffineMap> maps;
};
StabilizerSearch brute_force_stabilizer_search(const SeparatedCurveSpec& spec, const FieldPtr& search_field,
                                               std::uint64_t budget = 1ull << 32, unsigned threads = 0);

/// Contains identity, closed under composition and inverse.
bool is_group(const Field& f, const std::vector<AffineMap>& maps);

/// Smallest field holding the coefficients, all roots of A and the
/// m(p^e - 1)-th roots of unity (e = n in case (i) form, else d).
FieldPtr recommended_search_field(const SeparatedCurveSpec& spec);

struct RootProfile {
    FieldPtr field;
    std::vector<Root> roots;
};
/// Roots of B with multiplicities in the smallest extension splitting it.
RootProfile split_B(const SeparatedCurveSpec& spec);

struct HConstraint {
    enum class Kind { Divides, DividesEither, Trivial };
    Kind kind;
    std::uint64_t value = 1;        // Divides: N; DividesEither: M
    std::string describe() const;
    bool admits(std::uint64_t h) const;
};
/// Constraints on the order of the tame complement H, read from root
/// multiplicities of B.
std::vector<HConstraint> h_bound_from_roots(const SeparatedCurveSpec& spec);

/// B(bX + c) = a' B(X) for some a' with a'^(p^d - 1) = 1. The map's
/// entries live in spec.field.
bool condiz_check(const SeparatedCurveSpec& spec, const AffineMap& s);

/// x' = gamma (x + shift), y' = delta y sends the curve onto X^m = Y^(p^n) + Y.
struct StandardForm {
    FieldPtr field;
    Index gamma = 1;
    Index delta = 1;
    Index shift = 0;
    /// The substituted equation equals kappa (Y'^(p^n) + Y' - X'^m).
    Index kappa = 1;
};
StandardForm to_standard_qm(const SeparatedCurveSpec& spec, std::optional<FieldPtr> field = std::nullopt);
/// Re-expands the substitution and checks proportionality.
bool verify_standard_form(const SeparatedCurveSpec& spec, const StandardForm& sf);

}  // namespace ntag

#endif
