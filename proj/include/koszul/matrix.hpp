/*
   Copyright 2026 The koszul authors

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

#ifndef KOSZUL_MATRIX_HPP
#define KOSZUL_MATRIX_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "scalar.hpp"

namespace koszul {

// Dense matrix over an exact field, row-major.
template <class C>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<C> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, C(0)) {}

    C& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const C& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = C(1);
        return m;
    }
};

template <class C>
Matrix<C> mat_mul(const Matrix<C>& a, const Matrix<C>& b) {
    if (a.cols != b.rows) throw internal_error("matrix product shape mismatch");
    Matrix<C> r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (is_zero(a.at(i, k))) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                if (is_zero(b.at(k, j))) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

template <class C>
Matrix<C> mat_add(const Matrix<C>& a, const Matrix<C>& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw internal_error("matrix sum shape mismatch");
    Matrix<C> r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] += b.data[i];
    return r;
}

template <class C>
Matrix<C> mat_scale(const Matrix<C>& a, const C& c) {
    Matrix<C> r = a;
    for (auto& x : r.data) x *= c;
    return r;
}

template <class C>
Matrix<C> mat_transpose(const Matrix<C>& a) {
    Matrix<C> r(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

template <class C>
bool mat_eq(const Matrix<C>& a, const Matrix<C>& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        if (!(a.data[i] == b.data[i])) return false;
    return true;
}

// Row echelon form in place; returns the rank and records the pivot column
// of each pivot row.
template <class C>
std::size_t echelonize(Matrix<C>& m, std::vector<std::size_t>* pivot_cols = nullptr) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(piv, j), m.at(rank, j));
        C inv = C(1) / m.at(rank, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(rank, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || is_zero(m.at(i, col))) continue;
            C f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) -= f * m.at(rank, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

template <class C>
std::size_t mat_rank(Matrix<C> m) {
    return echelonize(m);
}

// Basis of the right kernel {x : M x = 0}, one column vector per basis
// element, derived from the reduced echelon form.
template <class C>
std::vector<std::vector<C>> kernel_basis(Matrix<C> m) {
    std::vector<std::size_t> pivots;
    std::size_t rank = echelonize(m, &pivots);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<C>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<C> v(m.cols, C(0));
        v[free] = C(1);
        for (std::size_t r = 0; r < rank; ++r)
            v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves M x = b if possible.
template <class C>
bool solve_linear(Matrix<C> m, std::vector<C> b, std::vector<C>& x) {
    if (m.rows != b.size()) throw internal_error("solve shape mismatch");
    Matrix<C> aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = echelonize(aug, &pivots);
    for (std::size_t r = 0; r < rank; ++r)
        if (pivots[r] == m.cols) return false;  // inconsistent
    x.assign(m.cols, C(0));
    for (std::size_t r = 0; r < rank; ++r) x[pivots[r]] = aug.at(r, m.cols);
    return true;
}

// Sparse rank over a field: rows held as sorted (column, value) lists and
// reduced online against the pivot rows found so far.  Suited to the wide
// incidence-like matrices of Koszul differentials.
template <class C>
struct SparseRows {
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::size_t, C>>> rows;

    void add_row(std::vector<std::pair<std::size_t, C>> row) {
        rows.push_back(std::move(row));
    }
};

// Online Gaussian eliminator over sparse rows.  Rows are absorbed one at a
// time; absorb() reports whether the row enlarged the span, so callers can
// interleave rank queries with row insertion.
template <class C>
struct OnlineRank {
    // pivot column -> reduced row with leading 1 in that column
    std::map<std::size_t, std::vector<std::pair<std::size_t, C>>> pivots;
    std::size_t rank = 0;

    bool absorb(std::vector<std::pair<std::size_t, C>> row) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) break;
            // row -= leading coeff * pivot row
            const C f = row.front().second;
            const auto& prow = it->second;
            std::vector<std::pair<std::size_t, C>> merged;
            merged.reserve(row.size() + prow.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() && j < prow.size()) {
                if (row[i].first < prow[j].first) {
                    merged.push_back(row[i++]);
                } else if (row[i].first > prow[j].first) {
                    merged.emplace_back(prow[j].first, -(f * prow[j].second));
                    ++j;
                } else {
                    C v = row[i].second - f * prow[j].second;
                    if (!is_zero(v)) merged.emplace_back(row[i].first, std::move(v));
                    ++i, ++j;
                }
            }
            while (i < row.size()) merged.push_back(row[i++]);
            while (j < prow.size()) {
                merged.emplace_back(prow[j].first, -(f * prow[j].second));
                ++j;
            }
            row = std::move(merged);
        }
        if (row.empty()) return false;
        C inv = C(1) / row.front().second;
        for (auto& e : row) e.second *= inv;
        pivots.emplace(row.front().first, std::move(row));
        ++rank;
        return true;
    }
};

template <class C>
std::size_t sparse_rank(const SparseRows<C>& m) {
    OnlineRank<C> elim;
    for (const auto& input : m.rows) elim.absorb(input);
    return elim.rank;
}

// Rank over the fraction field of a polynomial ring, by Bareiss one-step
// fraction-free elimination: every division is exact in the ring.
template <class C>
std::size_t rank_fraction_free(std::vector<std::vector<Poly<C>>> m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    Poly<C> prev_pivot;  // empty marker: first step divides by 1
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != rank) std::swap(m[piv], m[rank]);
        const std::vector<Poly<C>> pivot_row = m[rank];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Poly<C> num = m[i][j] * pivot_row[col] - m[i][col] * pivot_row[j];
                m[i][j] = prev_pivot.is_zero() ? num : poly_divexact(num, prev_pivot);
            }
            m[i][col] = Poly<C>(m[i][col].ring);
        }
        prev_pivot = pivot_row[col];
        ++rank;
    }
    return rank;
}

}  // namespace koszul

#endif  // KOSZUL_MATRIX_HPP
