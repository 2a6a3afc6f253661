/**************************************************************************
 * matrix.hpp
 *
 * Copyright 2026 The lrc-towers Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "field.hpp"

namespace lrc {

/// Dense row-major matrix over GF(q).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    Gf& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Gf operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Gf> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Gf> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    std::vector<Gf> column(std::size_t c) const {
        std::vector<Gf> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    void append_row(std::span<const Gf> values) {
        if (rows_ == 0 && cols_ == 0) cols_ = values.size();
        if (values.size() != cols_) throw Error(Errc::InvalidArgument, "row length mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    /// Keeps the listed columns, in the given order.
    Matrix select_columns(std::span<const std::size_t> cols) const {
        Matrix out(rows_, cols.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Gf> data_;
};

inline Matrix stack(const Matrix& top, const Matrix& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw Error(Errc::InvalidArgument, "column count mismatch");
    Matrix out = top;
    for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
    return out;
}

/// Reduced row-echelon form with first-nonzero pivoting; zero rows are dropped.
inline Matrix rref(const FiniteField& F, Matrix m, std::vector<std::size_t>* pivots = nullptr) {
    std::size_t lead = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t sel = lead;
        while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != lead)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(lead, j));
        const Gf s = F.inv(m(lead, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) = F.mul(m(lead, j), s);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c).is_zero()) continue;
            const Gf f = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.sub(m(r, j), F.mul(f, m(lead, j)));
        }
        piv.push_back(c);
        ++lead;
    }
    Matrix out(0, m.cols());
    for (std::size_t r = 0; r < lead; ++r) out.append_row(m.row(r));
    if (pivots) *pivots = std::move(piv);
    return out;
}

inline std::size_t rank(const FiniteField& F, const Matrix& m) { return rref(F, m).rows(); }

inline bool in_row_space(const FiniteField& F, const Matrix& m, std::span<const Gf> v) {
    Matrix ext = m.rows() ? m : Matrix(0, v.size());
    const auto r = rank(F, ext);
    ext.append_row(v);
    return rank(F, ext) == r;
}

/// msg * G
inline std::vector<Gf> encode(const FiniteField& F, std::span<const Gf> msg, const Matrix& G) {
    if (msg.size() != G.rows()) throw Error(Errc::InvalidArgument, "message length mismatch");
    std::vector<Gf> out(G.cols());
    for (std::size_t r = 0; r < G.rows(); ++r) {
        if (msg[r].is_zero()) continue;
        for (std::size_t c = 0; c < G.cols(); ++c) out[c] = F.add(out[c], F.mul(msg[r], G(r, c)));
    }
    return out;
}

/**
 * Row space of M1 intersected with row space of M2 (Zassenhaus).
 *
 * The block matrix [[M1, M1], [M2, 0]] is reduced; rows whose left half is
 * zero carry an intersection basis in the right half. Output is in reduced
 * row-echelon form and therefore canonical.
 */
inline Matrix rowspace_intersection(const FiniteField& F, const Matrix& M1, const Matrix& M2) {
    const std::size_t n = M1.rows() ? M1.cols() : M2.cols();
    if (M1.rows() && M2.rows() && M1.cols() != M2.cols())
        throw Error(Errc::InvalidArgument, "column count mismatch");
    if (M1.rows() == 0 || M2.rows() == 0) return Matrix(0, n);
    Matrix block(M1.rows() + M2.rows(), 2 * n);
    for (std::size_t r = 0; r < M1.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            block(r, c) = M1(r, c);
            block(r, n + c) = M1(r, c);
        }
    for (std::size_t r = 0; r < M2.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) block(M1.rows() + r, c) = M2(r, c);
    const Matrix red = rref(F, block);
    Matrix out(0, n);
    for (std::size_t r = 0; r < red.rows(); ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = red(r, c).is_zero();
        if (left_zero) out.append_row(red.row(r).subspan(n, n));
    }
    return rref(F, out);
}

}  // namespace lrc
