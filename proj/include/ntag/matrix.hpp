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

#ifndef NTAG_MATRIX_HPP
#define NTAG_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ntag/gf.hpp"

namespace ntag {

/// Dense row-major matrix of field indices.
class Matrix {
   public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    const Field& field() const { return *f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Index& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Index at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<Index> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Index> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const Index> r);

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

   private:
    const Field* f_ = nullptr;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Index> data_;
};

/// Reduced row echelon form with zero rows dropped.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each row

    std::size_t rank() const noexcept { return pivots.size(); }
    /// Reduces v against the echelon rows; true when v lies in the row space.
    bool contains(std::span<const Index> v) const;
};

/// Gauss-Jordan elimination; pivot row chosen as the first nonzero in row order.
Echelon echelon(const Matrix& m);
std::size_t rank(const Matrix& m);
bool same_row_space(const Matrix& a, const Matrix& b);

/// m with column j multiplied by diag[j].
Matrix scale_columns(const Matrix& m, std::span<const Index> diag);

/// Coefficient vector times m.
std::vector<Index> combine_rows(const Matrix& m, std::span<const Index> coeffs);

std::size_t hamming_weight(std::span<const Index> v);

}  // namespace ntag

#endif
