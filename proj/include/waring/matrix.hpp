#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over an exact field: rank, determinant, nullspace.
 *
 * Forward elimination is fraction-free (Bareiss): each update is
 * (p * a_ij - a_ik * a_pj) / previous_pivot, which keeps entries as minors
 * of the input instead of letting fractions compound. Nullspaces are read off
 * the reduced row-echelon form, so the returned basis is canonical.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "waring/errors.hpp"
#include "waring/field.hpp"

namespace waring {

template <ExactField F>
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, F(Rational(0))) {}

    ExactMatrix(std::vector<std::vector<F>> const& rows) {  // NOLINT(google-explicit-constructor)
        rows_ = rows.size();
        cols_ = rows_ ? rows.front().size() : 0;
        data_.reserve(rows_ * cols_);
        for (auto const& r : rows) {
            if (r.size() != cols_) throw validation_error("ragged matrix rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(Rational(1));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    F const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<F> column(std::size_t c) const {
        std::vector<F> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    std::vector<F> times(std::vector<F> const& v) const {
        if (v.size() != cols_) throw validation_error("matrix-vector size mismatch");
        std::vector<F> out(rows_, F(Rational(0)));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out[r] = out[r] + (*this)(r, c) * v[c];
        return out;
    }

    ExactMatrix transposed() const {
        ExactMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(ExactMatrix const& a, ExactMatrix const& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// Output of fraction-free forward elimination.
template <ExactField F>
struct Echelon {
    ExactMatrix<F> matrix;
    std::vector<std::size_t> pivot_columns;
    int swaps = 0;
};

/// Bareiss elimination; the pivot is the first nonzero entry at or below the
/// current row.
template <ExactField F>
Echelon<F> bareiss_echelon(ExactMatrix<F> m) {
    std::vector<std::size_t> pivots;
    int swaps = 0;
    F previous(Rational(1));
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
            ++swaps;
        }
        F const pivot = m(row, col);
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            F const factor = m(i, col);
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m(i, j) = (pivot * m(i, j) - factor * m(row, j)) / previous;
            m(i, col) = F(Rational(0));
        }
        previous = pivot;
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots), swaps};
}

template <ExactField F>
std::size_t rank(ExactMatrix<F> const& m) {
    return bareiss_echelon(m).pivot_columns.size();
}

template <ExactField F>
F determinant(ExactMatrix<F> const& m) {
    if (m.rows() != m.cols()) throw validation_error("determinant of a non-square matrix");
    if (m.rows() == 0) return F(Rational(1));
    auto e = bareiss_echelon(m);
    if (e.pivot_columns.size() < m.rows()) return F(Rational(0));
    F d = e.matrix(m.rows() - 1, m.cols() - 1);
    return e.swaps % 2 ? -d : d;
}

/// Reduced row-echelon form (unit pivots, zeros above and below).
template <ExactField F>
Echelon<F> rref(ExactMatrix<F> const& m) {
    auto e = bareiss_echelon(m);
    auto& a = e.matrix;
    for (std::size_t r = e.pivot_columns.size(); r-- > 0;) {
        std::size_t pc = e.pivot_columns[r];
        F inv = F(Rational(1)) / a(r, pc);
        for (std::size_t c = pc; c < a.cols(); ++c) a(r, c) = a(r, c) * inv;
        for (std::size_t i = 0; i < r; ++i) {
            F factor = a(i, pc);
            if (is_zero(factor)) continue;
            for (std::size_t c = pc; c < a.cols(); ++c) a(i, c) = a(i, c) - factor * a(r, c);
        }
    }
    return e;
}

/**
 * Basis of {v : M v = 0}, one vector per free column of the RREF, in
 * increasing order of the free column. Each vector has a 1 in its own free
 * column and zeros in the other free columns.
 */
template <ExactField F>
std::vector<std::vector<F>> nullspace(ExactMatrix<F> const& m) {
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), F(Rational(0)));
        v[free] = F(Rational(1));
        for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.matrix(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// 3x3 determinant by cofactor expansion; needs only ring operations.
template <RationalAlgebra R>
R det3(R const& a, R const& b, R const& c, R const& d, R const& e, R const& f, R const& g, R const& h,
       R const& i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace waring
