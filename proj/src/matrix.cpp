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

#include "ntag/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ntag {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : f_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

void Matrix::append_row(std::span<const Index> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Echelon echelon(const Matrix& m) {
    const Field& f = m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t top = 0;
    for (std::size_t col = 0; col < a.cols() && top < a.rows(); ++col) {
        std::size_t sel = top;
        while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != top)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(top, j));
        const Index s = f.inv(a.at(top, col));
        for (std::size_t j = col; j < a.cols(); ++j) a.at(top, j) = f.mul(a.at(top, j), s);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == top) continue;
            const Index t = a.at(i, col);
            if (t == 0) continue;
            for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(t, a.at(top, j)));
        }
        pivots.push_back(col);
        ++top;
    }
    Matrix reduced(f, 0, a.cols());
    for (std::size_t i = 0; i < top; ++i) reduced.append_row(a.row(i));
    return {std::move(reduced), std::move(pivots)};
}

bool Echelon::contains(std::span<const Index> v) const {
    const Field& f = reduced.field();
    if (v.size() != reduced.cols()) throw std::invalid_argument("vector length mismatch");
    std::vector<Index> w(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Index t = w[pivots[i]];
        if (t == 0) continue;
        auto r = reduced.row(i);
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(t, r[j]));
    }
    return std::all_of(w.begin(), w.end(), [](Index x) { return x == 0; });
}

std::size_t rank(const Matrix& m) { return echelon(m).rank(); }

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    auto ea = echelon(a);
    auto eb = echelon(b);
    return ea.pivots == eb.pivots && ea.reduced == eb.reduced;
}

Matrix scale_columns(const Matrix& m, std::span<const Index> diag) {
    if (diag.size() != m.cols()) throw std::invalid_argument("diagonal length mismatch");
    Matrix out = m;
    const Field& f = m.field();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = f.mul(m.at(i, j), diag[j]);
    return out;
}

std::vector<Index> combine_rows(const Matrix& m, std::span<const Index> coeffs) {
    if (coeffs.size() != m.rows()) throw std::invalid_argument("coefficient count mismatch");
    const Field& f = m.field();
    std::vector<Index> out(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (coeffs[i] == 0) continue;
        auto r = m.row(i);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(coeffs[i], r[j]));
    }
    return out;
}

std::size_t hamming_weight(std::span<const Index> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Index x) { return x != 0; }));
}

}  // namespace ntag
