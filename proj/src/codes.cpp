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

#include "ntag/codes.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <set>
#include <string>
#include <thread>

namespace ntag {

namespace {

void check_ell(const NormTraceCurve& curve, long long l) {
    const long long top = static_cast<long long>(curve.field_order()) - 1;
    if (l < 1 || l > top)
        throw std::invalid_argument("l = " + std::to_string(l) + " outside 1.." + std::to_string(top));
}

AGCode evaluate_code(const NormTraceCurve& curve, long long l, bool extended) {
    check_ell(curve, l);
    AGCode code;
    code.curve = &curve;
    code.ell = l;
    code.extended = extended;
    code.places = curve.theta();
    const long long deg_g = l * static_cast<long long>(curve.h());
    code.basis = extended ? basis_one_point(curve, deg_g) : basis_multipoint(curve, l);
    code.n = code.places.size();
    code.generator = Matrix(curve.field(), code.basis.size(), code.n);
    const MonomialTerm t = local_parameter_at_infinity(curve);
    for (std::size_t i = 0; i < code.basis.size(); ++i) {
        const auto fn = FunctionElem::monomial(code.basis[i]);
        for (std::size_t j = 0; j < code.n; ++j) {
            const Place& p = code.places[j];
            code.generator.at(i, j) =
                (extended && p.at_infinity) ? extended_evaluate(curve, fn, p, deg_g, t) : evaluate(curve, fn, p);
        }
    }
    code.k = rank(code.generator);
    code.d_star = static_cast<long long>(code.n) - deg_g;
    return code;
}

}  // namespace

AGCode build_code(const NormTraceCurve& curve, long long l) { return evaluate_code(curve, l, false); }

AGCode extended_one_point_code(const NormTraceCurve& curve, long long l) { return evaluate_code(curve, l, true); }

long long designed_distance(const NormTraceCurve& curve, long long l) {
    if (l < 1) throw std::invalid_argument("l must be positive");
    const long long h = static_cast<long long>(curve.h());
    const long long top = static_cast<long long>(curve.field_order()) * h;  // q^(2r-1)
    return top + 1 - (l + 1) * h;
}

DeltaBranch delta_branch(std::uint32_t q, long long l) {
    if (l % q == 0) return DeltaBranch::MultipleOfQ;
    if (l % q == q - 1) return DeltaBranch::QMinusOne;
    return DeltaBranch::Other;
}

long long dimension_closed_form(std::uint32_t q, std::uint32_t r, long long l) {
    if (!prime_power(q) || r < 2) throw std::invalid_argument("need a prime power q and r >= 2");
    long long Q = 1;
    for (std::uint32_t i = 0; i < r; ++i) Q *= q;
    const long long h = Q / q;
    const long long c = (Q - 1) / (q - 1);
    const long long g = (h - 1) * (c - 1) / 2;
    if (l < 1 || l > Q - 1) throw std::invalid_argument("l = " + std::to_string(l) + " outside 1.." + std::to_string(Q - 1));
    if (l >= c - 2) return l * h + 1 - g;

    // Everything below is twice the low-range formula, to stay in integers.
    const long long qq = q;
    const long long L = l / qq;
    long long twice = 2 * (l + 1) + (qq - 1) * L * (L + 1) + (qq * qq - 3 * qq + 2);
    switch (delta_branch(q, l)) {
        case DeltaBranch::MultipleOfQ: {
            const long long t = l / qq - 1;
            twice += (qq - 1) * (qq - 1) * t * t + (qq - 3) * (qq - 1) * t + qq * (qq - 1) * t;
            break;
        }
        case DeltaBranch::QMinusOne:
            twice += (qq - 1) * (qq - 1) * L * L + (qq - 3) * (qq - 1) * L + qq * (qq - 1) * L;
            break;
        case DeltaBranch::Other: {
            const long long R = l - L * qq;
            const long long S = qq - 1 - R;
            twice += (qq - 1) * (R * L * L + S * (L - 1) * (L - 1)) + (qq - 3) * (R * L + S * (L - 1)) +
                     L * R * (R + 1) + (L - 1) * S * (qq + R);
            break;
        }
    }
    if (twice % 2 != 0) throw std::logic_error("dimension formula produced a half-integer");
    return twice / 2;
}

Witness witness_codeword(const AGCode& code, std::optional<std::vector<Index>> roots) {
    if (code.extended) throw std::invalid_argument("witness codewords are defined for the multipoint code");
    const NormTraceCurve& curve = *code.curve;
    const Field& f = curve.field();
    Witness w;
    if (roots) {
        w.roots = *roots;
    } else {
        for (Index v = 1; static_cast<long long>(w.roots.size()) < code.ell; ++v) w.roots.push_back(v);
    }
    if (static_cast<long long>(w.roots.size()) != code.ell)
        throw std::invalid_argument("witness needs exactly l = " + std::to_string(code.ell) + " roots");
    std::set<Index> seen;
    for (Index v : w.roots) {
        if (v == 0 || !f.contains(v)) throw std::invalid_argument("witness roots must be nonzero field elements");
        if (!seen.insert(v).second) throw std::invalid_argument("witness roots must be distinct");
    }
    FunctionElem fn = FunctionElem::constant(1);
    for (Index v : w.roots) {
        // (x - v)/x = 1 - v x^-1
        auto factor = FunctionElem::make(curve, {{1, {0, 0}}, {f.neg(v), {-1, 0}}});
        fn = multiply(curve, fn, factor);
    }
    w.function = fn;
    w.word.reserve(code.n);
    for (const auto& p : code.places) w.word.push_back(evaluate(curve, fn, p));
    return w;
}

namespace {

struct SearchState {
    std::atomic<std::size_t> best;
    std::atomic<std::uint64_t> examined{0};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::vector<Index> best_message;
    std::size_t stop_at;

    SearchState(std::size_t n, std::size_t stop) : best(n + 1), stop_at(stop) {}

    void offer(std::size_t w, const std::vector<Index>& msg) {
        std::size_t cur = best.load();
        while (w < cur) {
            if (best.compare_exchange_weak(cur, w)) {
                std::lock_guard lock(mu);
                if (w <= best.load()) best_message = msg;
                if (w <= stop_at) stop = true;
                return;
            }
        }
    }
};

using detail::run_chunks;
using detail::worker_count;

// Characteristic 2: codewords as bit planes, message bits walked in Gray order.
void search_binary(const Matrix& g, SearchState& st, unsigned threads) {
    const Field& f = g.field();
    const std::size_t k = g.rows(), n = g.cols();
    const std::size_t b = f.k();
    const std::size_t words = (n + 63) / 64;
    const std::size_t stride = b * words;

    auto planes_of = [&](std::size_t row, Index scalar) {
        std::vector<std::uint64_t> out(stride, 0);
        for (std::size_t j = 0; j < n; ++j) {
            const Index v = f.mul(g.at(row, j), scalar);
            for (std::size_t t = 0; t < b; ++t)
                if ((v >> t) & 1u) out[t * words + j / 64] |= std::uint64_t{1} << (j % 64);
        }
        return out;
    };
    // unit[row * b + t] = row * X^t
    std::vector<std::vector<std::uint64_t>> unit(k * b);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t t = 0; t < b; ++t) unit[i * b + t] = planes_of(i, Index{1} << t);

    auto weight = [&](const std::vector<std::uint64_t>& cw) {
        std::size_t w = 0;
        for (std::size_t x = 0; x < words; ++x) {
            std::uint64_t any = 0;
            for (std::size_t t = 0; t < b; ++t) any |= cw[t * words + x];
            w += static_cast<std::size_t>(std::popcount(any));
        }
        return w;
    };

    for (std::size_t lead = 0; lead < k && !st.stop; ++lead) {
        const std::size_t tail_bits = b * (k - 1 - lead);
        const std::size_t fixed = std::min<std::size_t>(tail_bits, 12);
        const std::size_t free_bits = tail_bits - fixed;
        const std::vector<std::uint64_t> base = planes_of(lead, 1);

        auto message_of = [&](std::uint64_t high, std::uint64_t gray) {
            std::vector<Index> msg(k, 0);
            msg[lead] = 1;
            for (std::size_t bit = 0; bit < tail_bits; ++bit) {
                const bool on = bit < free_bits ? ((gray >> bit) & 1u) : ((high >> (bit - free_bits)) & 1u);
                if (on) msg[lead + 1 + bit / b] ^= Index{1} << (bit % b);
            }
            return msg;
        };

        run_chunks(std::uint64_t{1} << fixed, threads, [&](std::uint64_t high) {
            if (st.stop) return;
            std::vector<std::uint64_t> cw = base;
            for (std::size_t bit = 0; bit < fixed; ++bit)
                if ((high >> bit) & 1u) {
                    const auto& u = unit[(lead + 1) * b + free_bits + bit];
                    for (std::size_t x = 0; x < stride; ++x) cw[x] ^= u[x];
                }
            std::size_t local_best = st.best.load();
            auto consider = [&](std::uint64_t s) {
                const std::size_t w = weight(cw);
                if (w < local_best) {
                    st.offer(w, message_of(high, s ^ (s >> 1)));
                    local_best = st.best.load();
                }
            };
            consider(0);
            const std::uint64_t steps = std::uint64_t{1} << free_bits;
            for (std::uint64_t s = 1; s < steps; ++s) {
                const auto& u = unit[(lead + 1) * b + static_cast<std::size_t>(std::countr_zero(s))];
                for (std::size_t x = 0; x < stride; ++x) cw[x] ^= u[x];
                consider(s);
                if ((s & 0xFFFF) == 0) {
                    if (st.stop) break;
                    local_best = st.best.load();
                }
            }
            st.examined += steps;
        });
    }
}

// Any characteristic: odometer over tail digits, updated by field deltas.
void search_generic(const Matrix& g, SearchState& st, unsigned threads) {
    const Field& f = g.field();
    const std::size_t k = g.rows(), n = g.cols();
    const Index Q = f.order();

    for (std::size_t lead = 0; lead < k && !st.stop; ++lead) {
        const std::size_t tail = k - 1 - lead;
        const std::size_t fixed = std::min<std::size_t>(tail, 2);
        std::uint64_t chunks = 1;
        for (std::size_t i = 0; i < fixed; ++i) chunks *= Q;
        const std::size_t free_digits = tail - fixed;

        run_chunks(chunks, threads, [&](std::uint64_t chunk) {
            if (st.stop) return;
            std::vector<Index> msg(k, 0);
            msg[lead] = 1;
            std::uint64_t rest = chunk;
            for (std::size_t i = 0; i < fixed; ++i) {
                msg[lead + 1 + free_digits + i] = static_cast<Index>(rest % Q);
                rest /= Q;
            }
            std::vector<Index> cw = combine_rows(g, msg);
            std::uint64_t count = 0;
            for (;;) {
                ++count;
                const std::size_t w = hamming_weight(cw);
                if (w < st.best.load()) st.offer(w, msg);
                if (st.stop) break;
                // advance odometer on msg[lead+1 .. lead+free_digits]
                std::size_t pos = 0;
                while (pos < free_digits) {
                    const std::size_t row = lead + 1 + pos;
                    const Index old = msg[row];
                    const Index nxt = old + 1 == Q ? 0 : old + 1;
                    msg[row] = nxt;
                    const Index delta = f.sub(nxt, old);
                    auto r = g.row(row);
                    for (std::size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], f.mul(delta, r[j]));
                    if (nxt != 0) break;
                    ++pos;
                }
                if (pos == free_digits) break;
            }
            st.examined += count;
        });
    }
}

}  // namespace

MinDistanceResult min_distance_exhaustive(const Matrix& generator, std::uint64_t budget,
                                          std::optional<std::size_t> stop_at, unsigned threads) {
    const Field& f = generator.field();
    const Echelon e = echelon(generator);
    if (e.rank() == 0) throw std::invalid_argument("zero code has no minimum distance");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) {
        if (total > budget / f.order()) throw BudgetExceeded("message space exceeds budget " + std::to_string(budget));
        total *= f.order();
    }
    // Work on a basis so every nonzero message gives a nonzero codeword.
    const Matrix& basis = e.reduced;
    SearchState st(basis.cols(), stop_at.value_or(0));
    const unsigned t = worker_count(threads);
    if (f.p() == 2)
        search_binary(basis, st, t);
    else
        search_generic(basis, st, t);

    MinDistanceResult out;
    out.weight = st.best.load();
    out.examined = st.examined.load();
    out.stopped_early = st.stop.load();
    // Express the best message in terms of the caller's rows.
    const auto word = combine_rows(basis, st.best_message);
    {
        // Solve msg * generator = word by elimination on the transpose.
        Matrix aug(f, generator.cols(), generator.rows() + 1);
        for (std::size_t j = 0; j < generator.cols(); ++j) {
            for (std::size_t i = 0; i < generator.rows(); ++i) aug.at(j, i) = generator.at(i, j);
            aug.at(j, generator.rows()) = word[j];
        }
        const Echelon sol = echelon(aug);
        std::vector<Index> msg(generator.rows(), 0);
        for (std::size_t i = 0; i < sol.rank(); ++i)
            if (sol.pivots[i] < generator.rows()) msg[sol.pivots[i]] = sol.reduced.at(i, generator.rows());
        out.message = std::move(msg);
    }
    return out;
}

MinDistanceResult min_distance_exhaustive(AGCode& code, std::uint64_t budget, bool stop_at_designed, unsigned threads) {
    std::optional<std::size_t> stop;
    if (stop_at_designed && code.d_star > 0) stop = static_cast<std::size_t>(code.d_star);
    auto res = min_distance_exhaustive(code.generator, budget, stop, threads);
    code.d_exact = static_cast<long long>(res.weight);
    return res;
}

bool verify_monomial_witness(const Matrix& a, const Matrix& b, const MonomialWitness& w) {
    if (a.cols() != b.cols() || w.diagonal.size() != a.cols() || w.permutation.size() != a.cols()) return false;
    const Field& f = a.field();
    for (Index d : w.diagonal)
        if (d == 0 || !f.contains(d)) return false;
    std::vector<bool> hit(a.cols(), false);
    for (auto j : w.permutation) {
        if (j >= a.cols() || hit[j]) return false;
        hit[j] = true;
    }
    const Matrix scaled = scale_columns(a, w.diagonal);
    Matrix moved(f, scaled.rows(), scaled.cols());
    for (std::size_t i = 0; i < scaled.rows(); ++i)
        for (std::size_t j = 0; j < scaled.cols(); ++j) moved.at(i, w.permutation[j]) = scaled.at(i, j);
    return same_row_space(moved, b);
}

std::optional<MonomialWitness> monomial_equivalence_check(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return std::nullopt;
    const Field& f = a.field();
    const Echelon ea = echelon(a);
    const Echelon eb = echelon(b);
    if (ea.pivots != eb.pivots) return std::nullopt;
    const std::size_t n = a.cols();
    const std::size_t k = ea.rank();

    // d_j / d_{pivot_i} = rb(i, j) / ra(i, j) whenever either entry is nonzero.
    std::vector<Index> diag(n, 0);
    std::vector<bool> row_done(k, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (diag[start] != 0) continue;
        diag[start] = 1;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            const std::size_t j = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i < k; ++i) {
                const Index xa = ea.reduced.at(i, j), xb = eb.reduced.at(i, j);
                if ((xa == 0) != (xb == 0)) return std::nullopt;
                if (xa == 0 || row_done[i]) continue;
                row_done[i] = true;
                // d_pivot = d_j * ra / rb
                const Index dp = f.mul(diag[j], f.div(xa, xb));
                for (std::size_t jj = 0; jj < n; ++jj) {
                    const Index ya = ea.reduced.at(i, jj), yb = eb.reduced.at(i, jj);
                    if ((ya == 0) != (yb == 0)) return std::nullopt;
                    if (ya == 0) continue;
                    const Index want = f.mul(dp, f.div(yb, ya));
                    if (diag[jj] == 0) {
                        diag[jj] = want;
                        stack.push_back(jj);
                    } else if (diag[jj] != want) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    MonomialWitness w;
    w.diagonal = std::move(diag);
    w.permutation.resize(n);
    for (std::size_t j = 0; j < n; ++j) w.permutation[j] = j;
    if (!verify_monomial_witness(a, b, w)) return std::nullopt;
    return w;
}

std::optional<MonomialWitness> monomial_equivalence_check(const AGCode& a, const AGCode& b) {
    if (a.n != b.n || a.k != b.k) return std::nullopt;
    return monomial_equivalence_check(a.generator, b.generator);
}

std::vector<Index> multipoint_to_extended_diagonal(const NormTraceCurve& curve, long long l) {
    check_ell(curve, l);
    const Field& f = curve.field();
    const MonomialTerm t = local_parameter_at_infinity(curve);
    const auto x_l = FunctionElem::monomial({l, 0});
    std::vector<Index> diag;
    for (const auto& p : curve.theta()) {
        if (p.at_infinity)
            diag.push_back(extended_evaluate(curve, x_l, p, l * static_cast<long long>(curve.h()), t));
        else
            diag.push_back(f.pow(p.x, l));
    }
    return diag;
}

}  // namespace ntag
