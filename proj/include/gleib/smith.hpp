#pragma once

#include <vector>

#include "gleib/field.hpp"

namespace gleib {

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, int cols = -1);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const BigInt& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(int dst, int src, const BigInt& factor);
    void add_col_multiple(int dst, int src, const BigInt& factor);
    void negate_row(int r);
    void negate_col(int c);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> data_;
};

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... and
/// d_i >= 0. The nonzero diagonal entries come first.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    std::vector<BigInt> diagonal;  // min(rows, cols) entries
};

SmithForm smith_normal_form(const IntMatrix& m);

/// H = A * M with A unimodular and H in row Hermite normal form: pivots
/// positive, strictly moving right, entries above each pivot reduced into
/// [0, pivot), zero rows last.
struct HermiteForm {
    IntMatrix A;
    IntMatrix H;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

}  // namespace gleib
