#pragma once

#include <cstdint>
#include <vector>

#include "fermat/field.hpp"

namespace fermat {

/// Row-echelon workspace over F_p.  Rows are dense coefficient vectors;
/// products stay below 2^63 for word-sized moduli (delayed reduction).
class EchelonBasis {
public:
    EchelonBasis(const PrimeField& field, std::size_t ncols)
        : F_(field), ncols_(ncols) {}

    std::size_t rank() const { return rows_.size(); }

    /// Reduces `row` against the current basis; inserts the remainder if
    /// nonzero.  Returns true when the row was independent.
    bool insert(std::vector<std::uint64_t> row) {
        const std::uint64_t p = F_.modulus();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::size_t c = pivot_[r];
            if (row[c] == 0) continue;
            std::uint64_t f = p - row[c];  // row += f * rows_[r]  (mod p)
            const std::vector<std::uint64_t>& basis_row = rows_[r];
            for (std::size_t j = c; j < ncols_; ++j) {
                if (basis_row[j] == 0) continue;
                row[j] = (row[j] + f * basis_row[j]) % p;
            }
        }
        std::size_t c = 0;
        while (c < ncols_ && row[c] == 0) ++c;
        if (c == ncols_) return false;
        // normalize pivot to 1
        std::uint64_t inv = F_.inv({row[c]}).value;
        for (std::size_t j = c; j < ncols_; ++j)
            if (row[j]) row[j] = F_.mul({row[j]}, {inv}).value;
        rows_.push_back(std::move(row));
        pivot_.push_back(c);
        return true;
    }

    const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivot_; }

private:
    PrimeField F_;
    std::size_t ncols_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivot_;
};

inline std::size_t rank_mod_p(const PrimeField& field,
                              const std::vector<std::vector<std::uint64_t>>& rows,
                              std::size_t ncols) {
    EchelonBasis ech(field, ncols);
    for (const auto& r : rows) ech.insert(r);
    return ech.rank();
}

/// Basis of the right nullspace of the matrix (rows x ncols), reduced
/// column-echelon style; deterministic ordering by free column index.
inline std::vector<std::vector<std::uint64_t>> nullspace_mod_p(
    const PrimeField& field, const std::vector<std::vector<std::uint64_t>>& rows,
    std::size_t ncols) {
    EchelonBasis ech(field, ncols);
    for (const auto& r : rows) ech.insert(r);

    // back-substitute: echelon rows are already normalized with pivot 1,
    // eliminate above-pivot entries to reach RREF
    std::vector<std::vector<std::uint64_t>> rref = ech.rows();
    std::vector<std::size_t> piv = ech.pivots();
    const std::uint64_t p = field.modulus();
    for (std::size_t r = rref.size(); r-- > 0;) {
        std::size_t c = piv[r];
        for (std::size_t r2 = 0; r2 < r; ++r2) {
            std::uint64_t v = rref[r2][c];
            if (v == 0) continue;
            std::uint64_t f = p - v;
            for (std::size_t j = c; j < ncols; ++j)
                if (rref[r][j]) rref[r2][j] = (rref[r2][j] + f * rref[r][j]) % p;
        }
    }

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> null_basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint64_t> v(ncols, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < rref.size(); ++r) {
            std::uint64_t coeff = rref[r][free_col];
            if (coeff) v[piv[r]] = p - coeff;
        }
        null_basis.push_back(std::move(v));
    }
    return null_basis;
}

}  // namespace fermat
