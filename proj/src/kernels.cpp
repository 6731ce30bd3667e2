#include "gleib/kernels.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gleib {

PrimeStructure PrimeStructure::from_algebra(const Algebra& a) {
    if (!a.field().is_prime_field()) throw FieldMismatch("automorphism kernels need a prime field, got " + a.field().name());
    PrimeStructure s;
    s.n = a.dim();
    s.p = a.field().characteristic();
    s.c.assign(static_cast<std::size_t>(s.n) * s.n * s.n, 0);
    for (const auto& [key, terms] : a.structure_constants()) {
        for (const auto& t : terms) {
            s.c[(static_cast<std::size_t>(key.first - 1) * s.n + (key.second - 1)) * s.n + (t.k - 1)] = t.c.residue();
        }
    }
    return s;
}

std::int64_t determinant_mod_p(ResidueMatrix m, int n, std::int64_t p) {
    std::int64_t det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if (m[r * n + col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
            det = p - det;
        }
        det = mod_mul(det, m[col * n + col], p);
        const std::int64_t inv = mod_inv(m[col * n + col], p);
        for (int r = col + 1; r < n; ++r) {
            const std::int64_t f = mod_mul(m[r * n + col], inv, p);
            if (f == 0) continue;
            for (int c = col; c < n; ++c) m[r * n + c] = mod_reduce(m[r * n + c] - mod_mul(f, m[col * n + c], p), p);
        }
    }
    return mod_reduce(det, p);
}

std::optional<ResidueMatrix> inverse_mod_p(const ResidueMatrix& m, int n, std::int64_t p) {
    const int w = 2 * n;
    std::vector<std::int64_t> a(static_cast<std::size_t>(n) * w, 0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) a[r * w + c] = m[r * n + c];
        a[r * w + n + r] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if (a[r * w + col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int c = 0; c < w; ++c) std::swap(a[piv * w + c], a[col * w + c]);
        const std::int64_t inv = mod_inv(a[col * w + col], p);
        for (int c = 0; c < w; ++c) a[col * w + c] = mod_mul(a[col * w + c], inv, p);
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r * w + col] == 0) continue;
            const std::int64_t f = a[r * w + col];
            for (int c = 0; c < w; ++c) a[r * w + c] = mod_reduce(a[r * w + c] - mod_mul(f, a[col * w + c], p), p);
        }
    }
    ResidueMatrix out(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out[r * n + c] = a[r * w + n + c];
    return out;
}

ResidueMatrix multiply_mod_p(const ResidueMatrix& a, const ResidueMatrix& b, int n, std::int64_t p) {
    ResidueMatrix out(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i * n + k] == 0) continue;
            for (int j = 0; j < n; ++j) out[i * n + j] = mod_reduce(out[i * n + j] + mod_mul(a[i * n + k], b[k * n + j], p), p);
        }
    return out;
}

namespace {

bool pair_holds(const PrimeStructure& s, const ResidueMatrix& m, int i, int j) {
    const int n = s.n;
    const std::int64_t p = s.p;
    for (int r = 0; r < n; ++r) {
        std::int64_t lhs = 0;
        for (int k = 0; k < n; ++k) {
            const std::int64_t c = s.at(i, j, k);
            if (c != 0) lhs += mod_mul(c, m[r * n + k], p);
        }
        std::int64_t rhs = 0;
        for (int a = 0; a < n; ++a) {
            const std::int64_t x = m[a * n + i];
            if (x == 0) continue;
            for (int b = 0; b < n; ++b) {
                const std::int64_t y = m[b * n + j];
                if (y == 0) continue;
                const std::int64_t c = s.at(a, b, r);
                if (c != 0) rhs += mod_mul(mod_mul(x, y, p), c, p);
            }
        }
        if (mod_reduce(lhs, p) != mod_reduce(rhs, p)) return false;
    }
    return true;
}

void check_deadline(const Deadline& deadline) {
    if (deadline && std::chrono::steady_clock::now() > *deadline) throw BudgetExceeded("time budget exhausted during automorphism search");
}

}  // namespace

bool preserves_products(const PrimeStructure& s, const ResidueMatrix& m) {
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            if (!pair_holds(s, m, i, j)) return false;
        }
    return true;
}

std::vector<ResidueMatrix> automorphisms_serial(const PrimeStructure& s, Deadline deadline) {
    const int cells = s.n * s.n;
    ResidueMatrix m(static_cast<std::size_t>(cells), 0);
    std::vector<ResidueMatrix> out;
    std::uint64_t visited = 0;
    while (true) {
        if ((++visited & 0xFFFF) == 0) check_deadline(deadline);
        if (preserves_products(s, m) && determinant_mod_p(m, s.n, s.p) != 0) out.push_back(m);
        int c = cells - 1;
        while (c >= 0 && ++m[c] == s.p) m[c--] = 0;
        if (c < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Search {
    const PrimeStructure& s;
    // pairs (i, j) whose constraint only involves columns <= t, grouped by t
    std::vector<std::vector<std::pair<int, int>>> ready;
    std::int64_t column_count;
    const Deadline& deadline;
    std::atomic<bool>& stop;

    void set_column(ResidueMatrix& m, int col, std::int64_t code) const {
        for (int r = 0; r < s.n; ++r) {
            m[r * s.n + col] = code % s.p;
            code /= s.p;
        }
    }

    void extend(ResidueMatrix& m, int col, std::vector<ResidueMatrix>& out, std::uint64_t& nodes) const {
        if (stop.load(std::memory_order_relaxed)) return;
        if ((++nodes & 0x3FF) == 0 && deadline && std::chrono::steady_clock::now() > *deadline) {
            stop.store(true);
            return;
        }
        for (const auto& [i, j] : ready[static_cast<std::size_t>(col)]) {
            if (!pair_holds(s, m, i, j)) return;
        }
        if (col + 1 == s.n) {
            if (determinant_mod_p(m, s.n, s.p) != 0) out.push_back(m);
            return;
        }
        for (std::int64_t code = 0; code < column_count; ++code) {
            set_column(m, col + 1, code);
            extend(m, col + 1, out, nodes);
        }
        set_column(m, col + 1, 0);
    }
};

}  // namespace

std::vector<ResidueMatrix> automorphisms_parallel(const PrimeStructure& s, Deadline deadline) {
    check_deadline(deadline);
    const int n = s.n;
    std::vector<std::vector<std::pair<int, int>>> ready(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int last = std::max(i, j);
            for (int k = 0; k < n; ++k) {
                if (s.at(i, j, k) != 0) last = std::max(last, k);
            }
            ready[static_cast<std::size_t>(last)].emplace_back(i, j);
        }
    std::int64_t column_count = 1;
    for (int r = 0; r < n; ++r) column_count *= s.p;

    std::atomic<bool> stop{false};
    const Search search{s, std::move(ready), column_count, deadline, stop};
    std::vector<ResidueMatrix> out;
#pragma omp parallel
    {
        std::vector<ResidueMatrix> local;
        std::uint64_t nodes = 0;
        ResidueMatrix m(static_cast<std::size_t>(n) * n, 0);
#pragma omp for schedule(dynamic)
        for (std::int64_t code = 0; code < column_count; ++code) {
            search.set_column(m, 0, code);
            search.extend(m, 0, local, nodes);
        }
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
    if (stop.load()) throw BudgetExceeded("time budget exhausted during automorphism search");
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gleib
