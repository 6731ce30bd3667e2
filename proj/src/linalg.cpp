#include "gleib/linalg.hpp"

#include <utility>

namespace gleib {

Vector zero_vector(FieldSpec field, int n) { return Vector(static_cast<std::size_t>(n), Scalar::zero(field)); }

Vector unit_vector(FieldSpec field, int n, int index) {
    if (index < 1 || index > n) throw DimensionMismatch("basis index out of range");
    Vector v = zero_vector(field, n);
    v[static_cast<std::size_t>(index - 1)] = Scalar::one(field);
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Matrix::Matrix(FieldSpec field, int rows, int cols)
    : field_{field}, rows_{rows}, cols_{cols},
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Scalar::zero(field)) {}

Matrix Matrix::identity(FieldSpec field, int n) {
    Matrix m{field, n, n};
    for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, int cols, const std::vector<Vector>& rows) {
    Matrix m{field, static_cast<int>(rows.size()), cols};
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols) throw DimensionMismatch("ragged rows");
        for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(int r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                  data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

Vector Matrix::column(int c) const {
    Vector v;
    v.reserve(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t{field_, cols_, rows_};
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product over different fields");
    Matrix out{a.field_, a.rows_, b.cols_};
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
            }
        }
    }
    return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector out = zero_vector(a.field_, a.rows_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Echelon row_reduce(const Matrix& m) {
    Matrix a = m;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < a.rows(); ++r) {
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
        const Scalar scale = a(row, col).inv();
        for (int c = col; c < a.cols(); ++c) a(row, c) *= scale;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            const Scalar factor = a(r, col);
            for (int c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    Matrix rref{m.field(), row, m.cols()};
    for (int r = 0; r < row; ++r)
        for (int c = 0; c < m.cols(); ++c) rref(r, c) = a(r, c);
    return {std::move(rref), std::move(pivots)};
}

int rank(const Matrix& m) { return static_cast<int>(row_reduce(m).pivots.size()); }

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    Matrix a = m;
    const int n = a.rows();
    Scalar det = Scalar::one(m.field());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Scalar::zero(m.field());
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        const Scalar inv = a(col, col).inv();
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            const Scalar factor = a(r, col) * inv;
            for (int c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const int n = m.rows();
    Matrix aug{m.field(), n, 2 * n};
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar::one(m.field());
    }
    Echelon e = row_reduce(aug);
    if (static_cast<int>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
        return std::nullopt;
    }
    Matrix inv{m.field(), n, n};
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
    return inv;
}

std::vector<Vector> null_space(const Matrix& m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vector> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vector v = zero_vector(m.field(), m.cols());
        v[static_cast<std::size_t>(free)] = Scalar::one(m.field());
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Subspace::Subspace(FieldSpec field, int ambient_dim) : field_{field}, ambient_dim_{ambient_dim} {}

Subspace Subspace::span(FieldSpec field, int ambient_dim, const std::vector<Vector>& vectors) {
    Subspace s{field, ambient_dim};
    if (vectors.empty()) return s;
    Echelon e = row_reduce(Matrix::from_rows(field, ambient_dim, vectors));
    for (int r = 0; r < e.rref.rows(); ++r) s.basis_.push_back(e.rref.row(r));
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::full(FieldSpec field, int ambient_dim) {
    Subspace s{field, ambient_dim};
    for (int i = 1; i <= ambient_dim; ++i) {
        s.basis_.push_back(unit_vector(field, ambient_dim, i));
        s.pivots_.push_back(i - 1);
    }
    return s;
}

bool Subspace::contains(const Vector& v) const {
    if (static_cast<int>(v.size()) != ambient_dim_) throw DimensionMismatch("vector length differs from ambient dim");
    // reduce v against the echelon basis; pivot entries are 1 and columns are clean
    Vector rest = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Scalar coeff = rest[pivots_[r]];
        if (coeff.is_zero()) continue;
        for (int c = 0; c < ambient_dim_; ++c) rest[c] -= coeff * basis_[r][c];
    }
    return is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_) {
        if (!contains(v)) return false;
    }
    return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
}

}  // namespace gleib
