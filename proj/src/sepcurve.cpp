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

#include "ntag/sepcurve.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "parallel.hpp"

namespace ntag {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return std::nullopt;
    return a * b;
}

std::uint64_t saturating_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        auto n = checked_mul(r, b);
        if (!n) return UINT64_MAX;
        r = *n;
    }
    return r;
}

std::vector<Index> trimmed(std::vector<Index> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

/// Smallest field GF(p^t), t a multiple of base, satisfying pred.
template <class Pred>
FieldPtr smallest_extension(std::uint32_t p, std::uint32_t base, Pred&& pred, const char* what) {
    for (std::uint32_t t = base;; t += base) {
        if (saturating_pow(p, t) > max_field_order)
            throw std::runtime_error(std::string(what) + " exceeds the largest supported field");
        FieldPtr f = Field::build(p, t);
        if (pred(f)) return f;
    }
}

}  // namespace

std::string to_string(SpecViolation v) {
    switch (v) {
        case SpecViolation::DegreeBelowFour: return "degree below four";
        case SpecViolation::NotAdditive: return "A is not additive";
        case SpecViolation::ZeroLinearCoefficient: return "a_0 is zero";
        case SpecViolation::ZeroLeadingA: return "a_n is zero";
        case SpecViolation::ZeroLeadingB: return "b_m is zero";
        case SpecViolation::MDivisibleByP: return "m divisible by p";
        case SpecViolation::NBelowOne: return "n below one";
        case SpecViolation::MBelowTwo: return "m below two";
        case SpecViolation::WrongCharacteristic: return "wrong characteristic";
    }
    return "unknown";
}

std::uint64_t SeparatedCurveSpec::a_degree() const { return ipow(p(), n()); }

Poly SeparatedCurveSpec::A() const {
    std::vector<Index> c(static_cast<std::size_t>(a_degree()) + 1, 0);
    for (const auto& [j, v] : a) c[static_cast<std::size_t>(ipow(p(), j))] = v;
    return Poly(*field, std::move(c));
}

Poly SeparatedCurveSpec::B() const { return Poly(*field, b); }

SeparatedCurveSpec SeparatedCurveSpec::embedded_in(const FieldPtr& target) const {
    if (target.get() == field.get()) return *this;
    if (target->p() != field->p())
        throw SpecError(SpecViolation::WrongCharacteristic, "target field has a different characteristic");
    const auto map = field->embedding_into(*target);
    SeparatedCurveSpec out{target, {}, {}};
    for (const auto& [j, v] : a) out.a[j] = map[v];
    for (Index v : b) out.b.push_back(map[v]);
    return out;
}

SeparatedCurveSpec spec_from_polynomials(const FieldPtr& field, const Poly& a, const Poly& b) {
    SeparatedCurveSpec s{field, {}, b.coeffs()};
    const auto& c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        auto j = i == 0 ? std::nullopt : integer_log(i, field->p());
        if (!j) throw SpecError(SpecViolation::NotAdditive, "A has a term of degree " + std::to_string(i));
        s.a[*j] = c[i];
    }
    return s;
}

const SeparatedCurveSpec& validate(const SeparatedCurveSpec& spec) {
    if (!spec.field) throw std::invalid_argument("spec has no field");
    const Field& f = *spec.field;
    for (const auto& [j, v] : spec.a) {
        if (!f.contains(v)) throw std::invalid_argument("coefficient outside the field");
        if (v == 0 && j == spec.n()) throw SpecError(SpecViolation::ZeroLeadingA, "a_n must be nonzero");
    }
    for (Index v : spec.b)
        if (!f.contains(v)) throw std::invalid_argument("coefficient outside the field");
    if (spec.n() < 1) throw SpecError(SpecViolation::NBelowOne, "A must have degree p^n with n >= 1");
    if (spec.b.empty() || spec.b.back() == 0) throw SpecError(SpecViolation::ZeroLeadingB, "b_m must be nonzero");
    if (spec.m() < 2) throw SpecError(SpecViolation::MBelowTwo, "B must have degree m >= 2");
    auto a0 = spec.a.find(0);
    if (a0 == spec.a.end() || a0->second == 0)
        throw SpecError(SpecViolation::ZeroLinearCoefficient, "a_0 must be nonzero");
    if (spec.m() % spec.p() == 0) throw SpecError(SpecViolation::MDivisibleByP, "m must be prime to p");
    if (std::max<std::uint64_t>(spec.a_degree(), spec.m()) < 4)
        throw SpecError(SpecViolation::DegreeBelowFour, "curve degree must be at least four");

    const Poly A = spec.A();
    std::mt19937 rng(20240607u);
    std::uniform_int_distribution<Index> pick(0, f.order() - 1);
    for (int i = 0; i < 64; ++i) {
        const Index u = pick(rng), v = pick(rng);
        if (A.eval(f.add(u, v)) != f.add(A.eval(u), A.eval(v)))
            throw SpecError(SpecViolation::NotAdditive, "A(u+v) != A(u) + A(v)");
    }
    return spec;
}

std::uint64_t genus(const SeparatedCurveSpec& spec) {
    validate(spec);
    return (spec.a_degree() - 1) * (spec.m() - 1) / 2;
}

std::uint32_t linearization_gcd(const SeparatedCurveSpec& spec) {
    std::uint32_t d = 0;
    for (const auto& [j, v] : spec.a)
        if (j >= 1 && v != 0) d = std::gcd(d, j);
    return d;
}

bool scales_linearly(const SeparatedCurveSpec& spec, Index mu) {
    const Poly A = spec.A();
    return A.compose(Poly(*spec.field, {0, mu})) == A.scaled(mu);
}

AffineMap compose(const Field& f, const AffineMap& s1, const AffineMap& s2) {
    // s1(s2(x, y)) = (b1 (b2 x + c2) + c1, a1 (a2 y + Q2(x)) + Q1(b2 x + c2))
    AffineMap r;
    r.b = f.mul(s1.b, s2.b);
    r.c = f.add(f.mul(s1.b, s2.c), s1.c);
    r.a = f.mul(s1.a, s2.a);
    const Poly q = Poly(f, s2.q).scaled(s1.a) + Poly(f, s1.q).compose(Poly(f, {s2.c, s2.b}));
    r.q = q.coeffs();
    return r;
}

AffineMap inverse(const Field& f, const AffineMap& s) {
    if (s.a == 0 || s.b == 0) throw std::invalid_argument("affine map is not invertible");
    AffineMap r;
    r.b = f.inv(s.b);
    r.c = f.neg(f.mul(s.c, r.b));
    r.a = f.inv(s.a);
    r.q = Poly(f, s.q).compose(Poly(f, {r.c, r.b})).scaled(f.neg(r.a)).coeffs();
    return r;
}

std::optional<Index> preserving_factor(const SeparatedCurveSpec& spec, const AffineMap& s) {
    const Field& f = *spec.field;
    const Poly A = spec.A(), B = spec.B();
    const BiPoly inner = BiPoly::from_x(Poly(f, s.q)) + BiPoly::from_y(Poly(f, {0, s.a}));
    const BiPoly lhs = substitute(A, inner) - BiPoly::from_x(B.compose(Poly(f, {s.c, s.b})));
    const BiPoly curve = BiPoly::from_y(A) - BiPoly::from_x(B);
    const Poly top = lhs.y_coeff(static_cast<std::size_t>(spec.a_degree()));
    if (top.degree() != 0) return std::nullopt;
    const Index k1 = f.div(top.coeff(0), A.lead());
    if (k1 == 0 || !(lhs == curve.scaled(k1))) return std::nullopt;
    return k1;
}

std::string to_string(MonomialCase c) {
    switch (c) {
        case MonomialCase::CaseI: return "case (i)";
        case MonomialCase::CaseII: return "case (ii)";
        case MonomialCase::NonMonomialB: return "non-monomial B";
    }
    return "unknown";
}

bool is_monomial_translate(const SeparatedCurveSpec& spec) {
    const Field& f = *spec.field;
    const std::uint32_t m = spec.m();
    if (m == 0 || spec.b.back() == 0) return false;
    const Index lead = spec.b.back();
    const Index shift = f.div(spec.b[m - 1], f.mul(f.from_int(m), lead));
    return Poly(f, {shift, 1}).pow(m).scaled(lead) == spec.B();
}

ClassificationResult classify_monomial(const SeparatedCurveSpec& spec) {
    validate(spec);
    if (!is_monomial_translate(spec)) throw std::invalid_argument("B is not a monomial translate b_m (X + s)^m");
    const std::uint64_t pn = spec.a_degree();
    const std::uint32_t m = spec.m();
    if (m % pn == 1) throw std::invalid_argument("m = 1 mod p^n lies outside the classification");
    const Field& f = *spec.field;

    ClassificationResult r;
    r.d = linearization_gcd(spec);
    r.shift = f.div(spec.b[m - 1], f.mul(f.from_int(m), spec.b.back()));
    const std::uint64_t pd = ipow(spec.p(), r.d);
    r.predicted_stabilizer_order = pn * m * (pd - 1);

    const bool binomial = spec.a.size() == 2;
    const std::string s = "s = " + std::to_string(r.shift);
    r.generators.push_back("G = {(x, y) -> (x, y + a) : A(a) = 0}, order " + std::to_string(pn));
    r.generators.push_back("C = {(x, y) -> (b x + (b - 1) s, b^m y) : b^(m (p^" + std::to_string(r.d) +
                           " - 1)) = 1}, " + s + ", order " + std::to_string(m * (pd - 1)));

    if (binomial && (pn + 1) % m == 0) {
        r.which = MonomialCase::CaseI;
        r.predicted_full_order = checked_mul(m * pn, pn * pn - 1);
        r.notes.push_back("full group C_m . PGL(2, p^n), inferred from the standard form");
        if (!r.predicted_full_order) r.notes.push_back("full order overflows 64 bits");
        r.notes.push_back("stabilizer of P_inf has order p^n m (p^n - 1)");
    } else {
        r.which = MonomialCase::CaseII;
        r.predicted_full_order = r.predicted_stabilizer_order;
    }
    return r;
}

ClassificationResult classify(const SeparatedCurveSpec& spec) {
    validate(spec);
    if (is_monomial_translate(spec)) return classify_monomial(spec);
    ClassificationResult r;
    r.which = MonomialCase::NonMonomialB;
    r.d = linearization_gcd(spec);
    r.predicted_stabilizer_order = spec.a_degree();
    r.generators.push_back("G = {(x, y) -> (x, y + a) : A(a) = 0}, order " + std::to_string(spec.a_degree()));
    r.notes.push_back("only the translations are guaranteed; |H| is bounded by root multiplicities of B");
    return r;
}

StabilizerSearch brute_force_stabilizer_search(const SeparatedCurveSpec& spec_in, const FieldPtr& search_field,
                                               std::uint64_t budget, unsigned threads) {
    validate(spec_in);
    const SeparatedCurveSpec spec = spec_in.embedded_in(search_field);
    const Field& f = *search_field;
    const std::uint64_t pn = spec.a_degree();
    const std::uint32_t m = spec.m();
    const std::size_t qlen = static_cast<std::size_t>((m - 1) / pn) + 1;
    const std::uint64_t space = saturating_pow(f.order(), 3 + qlen);
    if (space > budget)
        throw BudgetExceeded("search space " + std::to_string(space) + " exceeds budget " + std::to_string(budget));

    const Poly A = spec.A(), B = spec.B();
    // A(v X^i) for every coefficient slot i and value v
    std::vector<std::vector<Poly>> aq(qlen);
    for (std::size_t i = 0; i < qlen; ++i) {
        aq[i].reserve(f.order());
        for (Index v = 0; v < f.order(); ++v) aq[i].push_back(A.compose(Poly::monomial(f, v, i)));
    }
    std::vector<std::vector<Index>> preimage(f.order());
    for (Index v = 0; v < f.order(); ++v) preimage[A.eval(v)].push_back(v);

    // admissible (a, k1) pairs
    std::vector<std::pair<Index, Index>> scalings;
    for (Index a = 1; a < f.order(); ++a) {
        const Index k1 = f.pow(a, static_cast<long long>(pn));
        bool ok = true;
        for (const auto& [j, v] : spec.a)
            if (f.mul(v, f.pow(a, static_cast<long long>(ipow(spec.p(), j)))) != f.mul(k1, v)) ok = false;
        if (ok) scalings.emplace_back(a, k1);
    }

    std::mutex mu;
    std::vector<AffineMap> found;
    detail::run_chunks(f.order() - 1, detail::worker_count(threads), [&](std::uint64_t chunk) {
        const Index b = static_cast<Index>(chunk + 1);
        std::vector<AffineMap> local;
        for (Index c = 0; c < f.order(); ++c) {
            const Poly bc = B.compose(Poly(f, {c, b}));
            for (const auto& [a, k1] : scalings) {
                const Poly target = bc - B.scaled(k1);
                if (target.degree() > static_cast<long long>((qlen - 1) * pn)) continue;
                auto emit = [&](std::vector<Index> q) {
                    AffineMap s{a, b, c, trimmed(std::move(q))};
                    auto k = preserving_factor(spec, s);
                    if (!k || *k != k1) throw std::logic_error("prefiltered map fails the full identity");
                    local.push_back(std::move(s));
                };
                if (qlen == 1) {
                    if (target.degree() > 0) continue;
                    for (Index v : preimage[target.coeff(0)]) emit({v});
                    continue;
                }
                std::vector<Index> q(qlen, 0);
                for (;;) {
                    Poly sum(f);
                    for (std::size_t i = 0; i < qlen; ++i) sum = sum + aq[i][q[i]];
                    if (sum == target) emit(q);
                    std::size_t i = 0;
                    while (i < qlen && ++q[i] == f.order()) q[i++] = 0;
                    if (i == qlen) break;
                }
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        found.insert(found.end(), local.begin(), local.end());
    });
    std::sort(found.begin(), found.end());
    if (!is_group(f, found))
        throw std::runtime_error("maps found over GF(" + std::to_string(f.order()) +
                                 ") are not closed under composition; search field too small");
    return {spec, std::move(found)};
}

bool is_group(const Field& f, const std::vector<AffineMap>& maps) {
    const std::set<AffineMap> set(maps.begin(), maps.end());
    if (!set.count(AffineMap{})) return false;
    for (const auto& s : set) {
        if (!set.count(inverse(f, s))) return false;
        for (const auto& t : set)
            if (!set.count(compose(f, s, t))) return false;
    }
    return true;
}

FieldPtr recommended_search_field(const SeparatedCurveSpec& spec) {
    validate(spec);
    const std::uint32_t p = spec.p(), host = spec.field->k();
    const Poly A = spec.A();
    const std::uint64_t pn = spec.a_degree();
    const FieldPtr split = smallest_extension(
        p, host,
        [&](const FieldPtr& g) {
            const auto roots = roots_in_field(spec.embedded_in(g).A());
            return roots.size() == pn;
        },
        "splitting field of A");
    const std::uint64_t units = spec.m() * (ipow(p, linearization_gcd(spec)) - 1);
    const FieldPtr unity = smallest_extension(
        p, 1, [&](const FieldPtr& g) { return (g->order() - 1) % units == 0; }, "field of roots of unity");
    const std::uint32_t t = std::lcm(split->k(), unity->k());
    if (saturating_pow(p, t) > max_field_order) throw std::runtime_error("search field exceeds supported size");
    return Field::build(p, t);
}

RootProfile split_B(const SeparatedCurveSpec& spec) {
    if (!spec.field || spec.b.empty() || spec.b.back() == 0) throw std::invalid_argument("B must be nonzero");
    const std::uint32_t m = spec.m();
    RootProfile out;
    out.field = smallest_extension(
        spec.p(), spec.field->k(),
        [&](const FieldPtr& g) {
            out.roots = roots_in_field(spec.embedded_in(g).B());
            std::size_t total = 0;
            for (const auto& r : out.roots) total += r.multiplicity;
            return total == m;
        },
        "splitting field of B");
    return out;
}

std::string HConstraint::describe() const {
    switch (kind) {
        case Kind::Divides: return "|H| divides " + std::to_string(value);
        case Kind::DividesEither:
            return "|H| divides " + std::to_string(value) + " or " + std::to_string(value - 1);
        case Kind::Trivial: return "|H| = 1";
    }
    return "";
}

bool HConstraint::admits(std::uint64_t h) const {
    if (h == 0) return false;
    switch (kind) {
        case Kind::Divides: return value % h == 0;
        case Kind::DividesEither: return value % h == 0 || (value - 1) % h == 0;
        case Kind::Trivial: return h == 1;
    }
    return false;
}

std::vector<HConstraint> h_bound_from_roots(const SeparatedCurveSpec& spec) {
    const RootProfile prof = split_B(spec);
    const std::uint64_t m = spec.m();
    if (prof.roots.size() == 1) {
        const std::uint32_t d = linearization_gcd(spec);
        return {{HConstraint::Kind::Divides, m * (ipow(spec.p(), d) - 1)}};
    }
    std::map<std::size_t, std::size_t> by_mult;
    for (const auto& r : prof.roots) ++by_mult[r.multiplicity];
    if (by_mult.size() == 1 && by_mult.begin()->first > 1) return {{HConstraint::Kind::Trivial, 1}};
    std::vector<HConstraint> out;
    for (const auto& [mult, count] : by_mult)
        if (mult > 1 && count == 1) out.push_back({HConstraint::Kind::DividesEither, mult});
    if (out.empty()) out.push_back({HConstraint::Kind::Divides, m * (spec.a_degree() - 1)});
    return out;
}

bool condiz_check(const SeparatedCurveSpec& spec, const AffineMap& s) {
    const Field& f = *spec.field;
    if (s.b == 0) return false;
    const Index scale = f.pow(s.b, spec.m());
    const Poly B = spec.B();
    if (!(B.compose(Poly(f, {s.c, s.b})) == B.scaled(scale))) return false;
    return f.pow(scale, static_cast<long long>(ipow(spec.p(), linearization_gcd(spec)) - 1)) == 1;
}

StandardForm to_standard_qm(const SeparatedCurveSpec& spec_in, std::optional<FieldPtr> field) {
    validate(spec_in);
    if (spec_in.a.size() != 2 || !is_monomial_translate(spec_in))
        throw std::invalid_argument("spec is not of the form b_m (X + s)^m = a_n Y^(p^n) + a_0 Y");
    const SeparatedCurveSpec spec = spec_in.embedded_in(field.value_or(spec_in.field));
    const Field& f = *spec.field;
    const std::uint64_t pn = spec.a_degree();
    const std::uint32_t m = spec.m();
    const Index a0 = spec.a.at(0), an = spec.a.rbegin()->second, bm = spec.b.back();

    // y = lambda y', x + s = mu x' turn the equation into a0 lambda (Y'^pn + Y' - X'^m)
    const Index ratio = f.div(a0, an);
    std::optional<Index> lambda, mu;
    for (Index v = 1; v < f.order() && !lambda; ++v)
        if (f.pow(v, static_cast<long long>(pn - 1)) == ratio) lambda = v;
    if (!lambda) throw std::runtime_error("no (p^n - 1)-th root of a_0/a_n in " + f.describe());
    const Index kappa = f.mul(a0, *lambda);
    const Index want = f.div(kappa, bm);
    for (Index v = 1; v < f.order() && !mu; ++v)
        if (f.pow(v, m) == want) mu = v;
    if (!mu) throw std::runtime_error("no m-th root of a_0 lambda / b_m in " + f.describe());

    StandardForm sf;
    sf.field = spec.field;
    sf.gamma = f.inv(*mu);
    sf.delta = f.inv(*lambda);
    sf.shift = f.div(spec.b[m - 1], f.mul(f.from_int(m), bm));
    sf.kappa = kappa;
    if (!verify_standard_form(spec_in, sf)) throw std::logic_error("standard form failed verification");
    return sf;
}

bool verify_standard_form(const SeparatedCurveSpec& spec_in, const StandardForm& sf) {
    const SeparatedCurveSpec spec = spec_in.embedded_in(sf.field);
    const Field& f = *sf.field;
    if (sf.gamma == 0 || sf.delta == 0) return false;
    const Index lambda = f.inv(sf.delta), mu = f.inv(sf.gamma);
    const BiPoly lhs = substitute(spec.A(), BiPoly::from_y(Poly(f, {0, lambda}))) -
                       BiPoly::from_x(spec.B().compose(Poly(f, {f.neg(sf.shift), mu})));
    const std::size_t pn = static_cast<std::size_t>(spec.a_degree());
    std::vector<Index> y(pn + 1, 0);
    y[1] = 1;
    y[pn] = f.add(y[pn], 1);
    const BiPoly target = BiPoly::from_y(Poly(f, y)) - BiPoly::from_x(Poly::monomial(f, 1, spec.m()));
    return lhs == target.scaled(sf.kappa);
}

}  // namespace ntag
