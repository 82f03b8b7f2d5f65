/*
   Copyright 2026 The qsheaf Authors

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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qsheaf/field.hpp"

namespace qsheaf {

/// Row-major dense matrix over a finite field.
class DenseMatrix {
  public:
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_, cols_;
    std::vector<Elem> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row. Pivots are chosen left to right, first nonzero row wins.
std::vector<std::size_t> row_reduce(const Field& f, DenseMatrix& m);

std::size_t rank(const Field& f, DenseMatrix m);

/// A solution of m x = rhs with every free variable set to zero, or nullopt
/// when the system is inconsistent.
std::optional<std::vector<Elem>> solve(const Field& f, const DenseMatrix& m, const std::vector<Elem>& rhs);

/// Basis of the right kernel of m, one vector per free column (in order).
std::vector<std::vector<Elem>> kernel_basis(const Field& f, const DenseMatrix& m);

}  // namespace qsheaf
