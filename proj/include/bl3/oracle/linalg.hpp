#pragma once

// Dense row reduction over F_p. Pivoting is deterministic: the first row
// (in construction order) with a nonzero entry in the current column.

#include <cstddef>
#include <utility>
#include <vector>

#include "bl3/oracle/field.hpp"

namespace bl3::oracle {

using Vector = std::vector<u64>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    u64& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    u64 operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    u64* row(std::size_t r) { return data_.data() + r * cols_; }
    const u64* row(std::size_t r) const { return data_.data() + r * cols_; }

    void append_row(const Vector& v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw oracle_error("row length mismatch");
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<u64> data_;
};

/// Reduced row echelon form computed in place; the first `pivots.size()`
/// rows hold the pivot rows, each normalized to a leading 1.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

namespace detail {

/// dst -= factor * src on columns [from, cols).
inline void axpy_neg(u64* dst, const u64* src, u64 factor, std::size_t from, std::size_t cols, const PrimeField& F) {
    const u64 f = F.neg(factor);
    const u64 p = F.modulus();
    if (F.small()) {
        for (std::size_t j = from; j < cols; ++j)
            if (src[j]) dst[j] = (dst[j] + f * src[j]) % p;
    } else {
        for (std::size_t j = from; j < cols; ++j)
            if (src[j]) dst[j] = F.add(dst[j], F.mul(f, src[j]));
    }
}

}  // namespace detail

inline Echelon row_reduce(Matrix m, const PrimeField& F) {
    Echelon out;
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = r;
        while (piv < R && m(piv, c) == 0) ++piv;
        if (piv == R) continue;
        if (piv != r)
            for (std::size_t j = c; j < C; ++j) std::swap(m(piv, j), m(r, j));
        const u64 inv = F.inv(m(r, c));
        u64* pr = m.row(r);
        for (std::size_t j = c; j < C; ++j) pr[j] = F.mul(pr[j], inv);
        for (std::size_t i = r + 1; i < R; ++i)
            if (const u64 f = m(i, c)) detail::axpy_neg(m.row(i), pr, f, c, C, F);
        out.pivots.push_back(c);
        ++r;
    }
    // back substitution among pivot rows only
    for (std::size_t k = out.pivots.size(); k-- > 0;) {
        const std::size_t c = out.pivots[k];
        for (std::size_t i = 0; i < k; ++i)
            if (const u64 f = m(i, c)) detail::axpy_neg(m.row(i), m.row(k), f, c, C, F);
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m, const PrimeField& F) { return row_reduce(m, F).rank(); }

/// Basis of {v : m v = 0}, one vector per free column, in column order.
inline std::vector<Vector> kernel(const Matrix& m, const PrimeField& F) {
    const auto e = row_reduce(m, F);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        Vector v(C, 0);
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = F.neg(e.reduced(k, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

inline u64 dot(const Vector& a, const Vector& b, const PrimeField& F) {
    u64 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
    return s;
}

}  // namespace bl3::oracle
