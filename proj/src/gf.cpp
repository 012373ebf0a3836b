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

#include "ntag/gf.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ntag {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint32_t t = static_cast<std::uint32_t>((static_cast<std::uint64_t>(lead) * b[i]) % p);
            a[shift + i] = (a[shift + i] + p - t) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(r), m, p);
}

Poly decode(std::uint64_t code, std::uint32_t p) {
    Poly d;
    while (code > 0) {
        d.push_back(static_cast<std::uint32_t>(code % p));
        code /= p;
    }
    return d;
}

bool irreducible(const Poly& m, std::uint32_t p) {
    const std::size_t k = m.size() - 1;
    if (k <= 1) return k == 1;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (std::size_t deg = 1; deg <= k / 2; ++deg) {
        std::uint64_t lo = 1;
        for (std::size_t i = 0; i < deg; ++i) lo *= p;
        for (std::uint64_t rest = 0; rest < lo; ++rest) {
            Poly d = decode(rest, p);
            d.resize(deg + 1, 0);
            d[deg] = 1;
            if (poly_mod(m, d, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 2; t * t <= n; ++t) {
        if (n % t == 0) {
            out.push_back(t);
            while (n % t == 0) n /= t;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
    Poly r{1};
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t t = 2; t * t <= n; ++t)
        if (n % t == 0) return false;
    return true;
}

std::optional<std::uint32_t> integer_log(std::uint64_t n, std::uint64_t base) {
    if (base < 2 || n == 0) return std::nullopt;
    std::uint32_t e = 0;
    while (n % base == 0) {
        n /= base;
        ++e;
    }
    if (n != 1) return std::nullopt;
    return e;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (n % p != 0) ++p;
    auto e = integer_log(n, p);
    if (!e) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(p), *e);
}

FieldPtr Field::build(std::uint32_t p, std::uint32_t k, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("extension degree must be positive");
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        order *= p;
        if (order > max_field_order)
            throw std::invalid_argument("field order exceeds " + std::to_string(max_field_order));
    }

    Poly m;
    if (modulus) {
        m = *modulus;
        if (m.size() != k + 1 || m.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree " + std::to_string(k));
        for (auto c : m)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        if (!irreducible(m, p)) throw std::invalid_argument("modulus is reducible");
    } else {
        for (std::uint64_t rest = 0; rest < order; ++rest) {
            Poly cand = decode(rest, p);
            cand.resize(k + 1, 0);
            cand[k] = 1;
            if (irreducible(cand, p)) {
                m = std::move(cand);
                break;
            }
        }
    }

    std::shared_ptr<Field> f(new Field());
    f->p_ = p;
    f->k_ = k;
    f->order_ = static_cast<std::uint32_t>(order);
    f->modulus_ = m;

    const std::uint64_t n = order - 1;
    const auto factors = prime_factors(n);
    Poly gen;
    for (std::uint64_t cand = 1; cand < order; ++cand) {
        Poly g = decode(cand, p);
        bool full = true;
        for (auto t : factors) {
            Poly r = poly_powmod(g, n / t, m, p);
            if (r == Poly{1}) {
                full = false;
                break;
            }
        }
        if (n == 1 || full) {
            gen = std::move(g);
            break;
        }
    }

    auto encode = [&](const Poly& a) {
        Index v = 0;
        for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
        return v;
    };
    f->exp_.resize(n);
    f->log_.assign(order, 0);
    Poly cur{1};
    for (std::uint64_t i = 0; i < n; ++i) {
        const Index v = encode(cur);
        f->exp_[i] = v;
        f->log_[v] = static_cast<std::uint32_t>(i);
        cur = poly_mulmod(cur, gen, m, p);
    }

    f->neg_.resize(order);
    for (Index a = 0; a < order; ++a) {
        auto d = f->digits(a);
        for (auto& x : d) x = (p - x) % p;
        f->neg_[a] = f->from_digits(d);
    }
    if (p != 2 && order <= 1024) {
        f->add_table_.resize(static_cast<std::size_t>(order) * order);
        for (Index a = 0; a < order; ++a) {
            auto da = f->digits(a);
            for (Index b = 0; b < order; ++b) {
                auto db = f->digits(b);
                for (std::uint32_t i = 0; i < k; ++i) db[i] = (db[i] + da[i]) % p;
                f->add_table_[static_cast<std::size_t>(a) * order + b] = f->from_digits(db);
            }
        }
    }
    return f;
}

std::uint64_t Field::modulus_encoding() const noexcept {
    std::uint64_t v = 0;
    for (std::size_t i = modulus_.size(); i-- > 0;) v = v * p_ + modulus_[i];
    return v;
}

Index Field::from_int(long long n) const noexcept {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Index>(r);
}

Index Field::add(Index a, Index b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
    Index out = 0;
    Index scale = 1;
    while (a > 0 || b > 0) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

Index Field::neg(Index a) const noexcept { return neg_[a]; }

Index Field::sub(Index a, Index b) const noexcept { return add(a, neg_[b]); }

Index Field::div(Index a, Index b) const { return mul(a, inv(b)); }

Index Field::inv(Index a) const {
    if (a == 0) throw std::domain_error("division by zero in " + describe());
    const std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : order_ - 1 - l];
}

Index Field::pow(Index a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("zero raised to a negative power");
        return e == 0 ? 1 : 0;
    }
    const long long n = order_ - 1;
    long long r = (static_cast<long long>(log_[a]) * (e % n)) % n;
    if (r < 0) r += n;
    return exp_[r];
}

Index Field::frobenius(Index a, long long e) const noexcept {
    if (a == 0) return 0;
    long long s = e % static_cast<long long>(k_);
    if (s < 0) s += k_;
    const std::uint64_t n = order_ - 1;
    std::uint64_t l = log_[a];
    for (long long i = 0; i < s; ++i) l = (l * p_) % n;
    return exp_[l];
}

std::uint32_t Field::log(Index a) const {
    if (a == 0 || a >= order_) throw std::domain_error("log of zero");
    return log_[a];
}

Index Field::exp(long long i) const noexcept {
    const long long n = order_ - 1;
    long long r = i % n;
    if (r < 0) r += n;
    return exp_[r];
}

namespace {
std::uint32_t relative_degree(const Field& f, std::uint32_t q) {
    auto e = integer_log(q, f.p());
    if (!e || *e == 0 || f.k() % *e != 0)
        throw std::invalid_argument("field of order " + std::to_string(f.order()) + " is not a power of " +
                                    std::to_string(q));
    return f.k() / *e;
}
}  // namespace

Index Field::trace_rel(Index a, std::uint32_t q) const {
    const std::uint32_t r = relative_degree(*this, q);
    const std::uint32_t e = k_ / r;
    Index s = 0;
    Index cur = a;
    for (std::uint32_t i = 0; i < r; ++i) {
        s = add(s, cur);
        cur = frobenius(cur, e);
    }
    return s;
}

Index Field::norm_rel(Index a, std::uint32_t q) const {
    relative_degree(*this, q);
    const std::uint64_t c = (static_cast<std::uint64_t>(order_) - 1) / (q - 1);
    return pow(a, static_cast<long long>(c));
}

std::vector<Index> Field::subfield_elements(std::uint32_t d) const {
    if (d == 0 || k_ % d != 0)
        throw std::invalid_argument("subfield degree " + std::to_string(d) + " does not divide " + std::to_string(k_));
    std::vector<Index> out;
    for (Index a = 0; a < order_; ++a)
        if (frobenius(a, d) == a) out.push_back(a);
    return out;
}

bool Field::in_subfield(Index a, std::uint32_t sub_order) const {
    auto e = integer_log(sub_order, p_);
    if (!e || *e == 0 || k_ % *e != 0) throw std::invalid_argument("not a subfield order");
    return frobenius(a, *e) == a;
}

std::vector<std::uint32_t> Field::digits(Index a) const {
    std::vector<std::uint32_t> d(k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Index Field::from_digits(const std::vector<std::uint32_t>& d) const {
    Index v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return v;
}

std::vector<Index> Field::embedding_into(const Field& target) const {
    if (target.p_ != p_ || target.k_ % k_ != 0)
        throw std::invalid_argument(describe() + " does not embed into " + target.describe());
    auto eval_modulus = [&](Index x) {
        Index acc = 0;
        for (std::size_t i = modulus_.size(); i-- > 0;) acc = target.add(target.mul(acc, x), target.from_int(modulus_[i]));
        return acc;
    };
    Index root = 0;
    bool found = false;
    for (Index x = 0; x < target.order_; ++x) {
        if (eval_modulus(x) == 0) {
            root = x;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("no root of the modulus in the target field");
    std::vector<Index> map(order_);
    for (Index a = 0; a < order_; ++a) {
        auto d = digits(a);
        Index acc = 0;
        for (std::size_t i = d.size(); i-- > 0;) acc = target.add(target.mul(acc, root), target.from_int(d[i]));
        map[a] = acc;
    }
    return map;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (k_ > 1) os << "^" << k_;
    os << ")";
    return os.str();
}

FieldElement::FieldElement(const Field& f, Index v) : f_(&f), v_(v) {
    if (!f.contains(v)) throw std::out_of_range("element index " + std::to_string(v) + " outside " + f.describe());
}

const Field& FieldElement::field() const {
    if (!f_) throw std::logic_error("unbound field element");
    return *f_;
}

const Field& FieldElement::same(const FieldElement& o) const {
    if (f_ == nullptr || f_ != o.f_) throw std::invalid_argument("field elements from different fields");
    return *f_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {same(o), f_->add(v_, o.v_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {same(o), f_->sub(v_, o.v_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {same(o), f_->mul(v_, o.v_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {same(o), f_->div(v_, o.v_)}; }
FieldElement FieldElement::operator-() const { return {field(), f_->neg(v_)}; }
FieldElement FieldElement::inv() const { return {field(), f_->inv(v_)}; }
FieldElement FieldElement::pow(long long e) const { return {field(), f_->pow(v_, e)}; }
FieldElement FieldElement::frobenius(long long e) const { return {field(), f_->frobenius(v_, e)}; }

FieldElement trace_rel(const FieldElement& a, std::uint32_t q) {
    return {a.field(), a.field().trace_rel(a.index(), q)};
}

FieldElement norm_rel(const FieldElement& a, std::uint32_t q) {
    return {a.field(), a.field().norm_rel(a.index(), q)};
}

}  // namespace ntag
