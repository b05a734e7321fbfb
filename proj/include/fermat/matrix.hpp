#pragma once

#include <utility>
#include <vector>

#include "fermat/polynomial.hpp"

namespace fermat {

/// Dense rectangular matrix of polynomials over one ring.
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, unsigned rows, unsigned cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * cols, Polynomial::zero(ring_)) {}

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    const RingPtr& ring() const { return ring_; }

    Polynomial& at(unsigned r, unsigned c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Polynomial& at(unsigned r, unsigned c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    void set(unsigned r, unsigned c, Polynomial p) { at(r, c) = std::move(p); }

    PolyMatrix without_row(unsigned row) const {
        PolyMatrix m(ring_, rows_ - 1, cols_);
        for (unsigned r = 0, rr = 0; r < rows_; ++r) {
            if (r == row) continue;
            for (unsigned c = 0; c < cols_; ++c) m.at(rr, c) = at(r, c);
            ++rr;
        }
        return m;
    }

    /// [this | column] for a column vector given as rows() polynomials.
    PolyMatrix with_appended_column(const std::vector<Polynomial>& column) const {
        if (column.size() != rows_) throw shape_error("appended column has wrong height");
        PolyMatrix m(ring_, rows_, cols_ + 1);
        for (unsigned r = 0; r < rows_; ++r) {
            for (unsigned c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
            m.at(r, cols_) = column[r];
        }
        return m;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            if (a.entries_[i] != b.entries_[i]) return false;
        return true;
    }

private:
    RingPtr ring_;
    unsigned rows_, cols_;
    std::vector<Polynomial> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
inline Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw shape_error("determinant of a non-square matrix");
    const unsigned n = m.rows();
    RingPtr ring = m.ring();
    if (n == 0) return Polynomial::constant(ring, std::uint64_t{1});
    if (n == 1) return m.at(0, 0);

    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial::zero(ring)));
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) a[r][c] = m.at(r, c);

    bool negate = false;
    Polynomial prev = Polynomial::constant(ring, std::uint64_t{1});
    for (unsigned k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            unsigned swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial::zero(ring);
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (unsigned i = k + 1; i < n; ++i) {
            for (unsigned j = k + 1; j < n; ++j) {
                Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num.is_zero() ? std::move(num) : exact_div(num, prev);
            }
            a[i][k] = Polynomial::zero(ring);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// The rows() determinants obtained by deleting each row in turn (no
/// alternating sign applied); requires the Hilbert-Burch shape rows = cols+1.
inline std::vector<Polynomial> maximal_minors(const PolyMatrix& m) {
    if (m.rows() != m.cols() + 1)
        throw shape_error("maximal_minors requires rows = cols + 1");
    std::vector<Polynomial> minors;
    minors.reserve(m.rows());
    for (unsigned r = 0; r < m.rows(); ++r) minors.push_back(determinant(m.without_row(r)));
    return minors;
}

}  // namespace fermat
