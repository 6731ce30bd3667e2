#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gleib/field.hpp"

namespace gleib {

/// Coefficient vector; position i holds the coefficient of e_{i+1}.
using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec field, int n);
/// Standard basis vector e_index (1-based).
Vector unit_vector(FieldSpec field, int n, int index);
bool is_zero(std::span<const Scalar> v);

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix(FieldSpec field, int rows, int cols);

    static Matrix identity(FieldSpec field, int n);
    static Matrix from_rows(FieldSpec field, int cols, const std::vector<Vector>& rows);

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vector row(int r) const;
    Vector column(int c) const;
    Matrix transpose() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    FieldSpec field_;
    int rows_;
    int cols_;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix rref;              // reduced row echelon form, zero rows dropped
    std::vector<int> pivots;  // pivot column of each row, strictly increasing
};

Echelon row_reduce(const Matrix& m);
int rank(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Basis (as rows) of { x : m * x = 0 }.
std::vector<Vector> null_space(const Matrix& m);

/// A subspace of F^n stored by its reduced row echelon basis.
class Subspace {
public:
    Subspace(FieldSpec field, int ambient_dim);  // the zero subspace

    static Subspace span(FieldSpec field, int ambient_dim, const std::vector<Vector>& vectors);
    static Subspace full(FieldSpec field, int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const FieldSpec& field() const { return field_; }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    FieldSpec field_;
    int ambient_dim_;
    std::vector<Vector> basis_;
    std::vector<int> pivots_;
};

}  // namespace gleib
