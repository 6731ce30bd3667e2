#include "gleib/smith.hpp"

#include <utility>

#include "gleib/error.hpp"

namespace gleib {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt{-v} : v; }

}  // namespace

IntMatrix::IntMatrix(int rows, int cols)
    : rows_{rows}, cols_{cols}, data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m{n, n};
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, int cols) {
    if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m{static_cast<int>(rows.size()), cols};
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != cols) throw DimensionMismatch("ragged integer rows");
        for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(int dst, int src, const BigInt& factor) {
    if (factor == 0) return;
    for (int c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const BigInt& factor) {
    if (factor == 0) return;
    for (int r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(int r) {
    for (int c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(int c) {
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("integer matrix product shape mismatch");
    IntMatrix out{a.rows_, b.cols_};
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int swap_with = -1;
            for (int r = k + 1; r < n; ++r) {
                if (a(r, k) != 0) {
                    swap_with = r;
                    break;
                }
            }
            if (swap_with < 0) return 0;
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    return abs_value(determinant(m)) == 1;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    const int steps = std::min(rows, cols);

    for (int t = 0; t < steps; ++t) {
        bool finished = false;
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            int pr = -1, pc = -1;
            BigInt best;
            for (int r = t; r < rows; ++r)
                for (int c = t; c < cols; ++c) {
                    if (a(r, c) == 0) continue;
                    BigInt mag = abs_value(a(r, c));
                    if (pr < 0 || mag < best) {
                        best = mag;
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0) {
                finished = true;
                break;
            }
            a.swap_rows(t, pr);
            u.swap_rows(t, pr);
            a.swap_cols(t, pc);
            v.swap_cols(t, pc);

            bool clean = true;
            for (int r = t + 1; r < rows; ++r) {
                if (a(r, t) == 0) continue;
                const BigInt q = a(r, t) / a(t, t);
                a.add_row_multiple(r, t, -q);
                u.add_row_multiple(r, t, -q);
                clean = clean && a(r, t) == 0;
            }
            for (int c = t + 1; c < cols; ++c) {
                if (a(t, c) == 0) continue;
                const BigInt q = a(t, c) / a(t, t);
                a.add_col_multiple(c, t, -q);
                v.add_col_multiple(c, t, -q);
                clean = clean && a(t, c) == 0;
            }
            if (!clean) continue;

            int bad_row = -1;
            for (int r = t + 1; r < rows && bad_row < 0; ++r)
                for (int c = t + 1; c < cols; ++c) {
                    if (a(r, c) % a(t, t) != 0) {
                        bad_row = r;
                        break;
                    }
                }
            if (bad_row < 0) break;
            // pulling the offending row up makes the next remainder smaller
            a.add_row_multiple(t, bad_row, 1);
            u.add_row_multiple(t, bad_row, 1);
        }
        if (finished) break;
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithForm out{std::move(u), std::move(a), std::move(v), {}};
    for (int i = 0; i < steps; ++i) out.diagonal.push_back(out.D(i, i));
    return out;
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    IntMatrix h = m;
    IntMatrix a = IntMatrix::identity(rows);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Euclid on column c over rows r.. until a single nonzero remains at row r
        while (true) {
            int best = -1;
            for (int i = r; i < rows; ++i) {
                if (h(i, c) != 0 && (best < 0 || abs_value(h(i, c)) < abs_value(h(best, c)))) best = i;
            }
            if (best < 0) break;
            h.swap_rows(r, best);
            a.swap_rows(r, best);
            bool single = true;
            for (int i = r + 1; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                const BigInt q = h(i, c) / h(r, c);
                h.add_row_multiple(i, r, -q);
                a.add_row_multiple(i, r, -q);
                single = single && h(i, c) == 0;
            }
            if (single) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            h.negate_row(r);
            a.negate_row(r);
        }
        for (int i = 0; i < r; ++i) {
            const BigInt q = floor_div(h(i, c), h(r, c));
            h.add_row_multiple(i, r, -q);
            a.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return {std::move(a), std::move(h)};
}

}  // namespace gleib
