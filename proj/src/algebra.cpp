#include "gleib/algebra.hpp"

#include <algorithm>
#include <cctype>

namespace gleib {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::NF: return "NF";
        case Family::F1: return "F1";
        case Family::F2: return "F2";
        case Family::LieL: return "LieL";
        case Family::LieQ: return "LieQ";
        case Family::Custom: return "Custom";
    }
    return "Custom";
}

Family parse_family(std::string_view text) {
    std::string t;
    for (char c : text) {
        if (c != '-' && c != '_') t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (t == "nf") return Family::NF;
    if (t == "f1") return Family::F1;
    if (t == "f2") return Family::F2;
    if (t == "liel" || t == "l") return Family::LieL;
    if (t == "lieq" || t == "q") return Family::LieQ;
    if (t == "custom") return Family::Custom;
    throw ParseError("unknown family '" + std::string{text} + "'");
}

namespace {

StructureConstants normalize(int dim, const FieldSpec& field, StructureConstants sc) {
    StructureConstants out;
    for (auto& [key, terms] : sc) {
        auto [i, j] = key;
        if (i < 1 || i > dim || j < 1 || j > dim) {
            throw InvalidAlgebra("product index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        }
        std::map<int, Scalar> merged;
        for (auto& t : terms) {
            if (t.k < 1 || t.k > dim) throw InvalidAlgebra("term index " + std::to_string(t.k) + " out of range");
            if (!(t.c.field() == field)) throw InvalidAlgebra("coefficient over " + t.c.field().name());
            auto it = merged.find(t.k);
            if (it == merged.end()) {
                merged.emplace(t.k, t.c);
            } else {
                it->second += t.c;
            }
        }
        std::vector<Term> clean;
        for (auto& [k, c] : merged) {
            if (!c.is_zero()) clean.push_back({k, c});
        }
        if (!clean.empty()) out.emplace(key, std::move(clean));
    }
    return out;
}

void add_term(StructureConstants& sc, int i, int j, int k, const Scalar& c) { sc[{i, j}].push_back({k, c}); }

}  // namespace

Algebra::Algebra(Unchecked, int dim, FieldSpec field, StructureConstants sc, Family label)
    : dim_{dim}, field_{field}, sc_{normalize(dim, field, std::move(sc))}, label_{label} {}

Algebra::Algebra(int dim, FieldSpec field, StructureConstants sc, Family label)
    : Algebra(Unchecked{}, dim, field, std::move(sc), label) {
    if (dim < 1) throw InvalidAlgebra("dimension must be positive");
    if (label != Family::Custom) {
        Algebra expected = make_family(label, dim, field);
        if (expected.sc_ != sc_) {
            throw InvalidAlgebra("structure constants do not match family " + std::string{family_name(label)});
        }
    }
}

const std::vector<Term>& Algebra::bracket(int i, int j) const {
    static const std::vector<Term> empty;
    auto it = sc_.find({i, j});
    return it == sc_.end() ? empty : it->second;
}

bool Algebra::same_structure(const Algebra& other) const {
    return dim_ == other.dim_ && field_ == other.field_ && sc_ == other.sc_;
}

std::size_t Algebra::nonzero_count() const {
    std::size_t count = 0;
    for (const auto& [key, terms] : sc_) count += terms.size();
    return count;
}

Algebra make_family(Family family, int n, FieldSpec field) {
    const Scalar one = Scalar::one(field);
    StructureConstants sc;
    switch (family) {
        case Family::NF:
            if (n < 2) throw DimensionTooSmall("NF_n needs n >= 2");
            for (int i = 1; i <= n - 1; ++i) add_term(sc, i, 1, i + 1, one);
            break;
        case Family::F1:
            if (n < 3) throw DimensionTooSmall("F_n^1 needs n >= 3");
            for (int i = 2; i <= n - 1; ++i) add_term(sc, i, 1, i + 1, one);
            break;
        case Family::F2:
            if (n < 3) throw DimensionTooSmall("F_n^2 needs n >= 3");
            for (int i = 1; i <= n - 2; ++i) add_term(sc, i, 1, i + 1, one);
            break;
        case Family::LieL:
            if (n < 3) throw DimensionTooSmall("L_n needs n >= 3");
            for (int i = 2; i <= n - 1; ++i) {
                add_term(sc, i, 1, i + 1, one);
                add_term(sc, 1, i, i + 1, -one);
            }
            break;
        case Family::LieQ:
            if (n % 2 != 0) throw QnOddDimension("Q_n is defined for even n only");
            if (n < 4) throw DimensionTooSmall("Q_n needs n >= 4");
            for (int i = 2; i <= n - 1; ++i) {
                add_term(sc, i, 1, i + 1, one);
                add_term(sc, 1, i, i + 1, -one);
            }
            // the partner index is n+1-i; with n-i the relation at i = n/2 would
            // force [e_{n/2}, e_{n/2}] to be both c e_n and -c e_n
            for (int i = 2; i <= n - 1; ++i) {
                const Scalar sign = (i % 2 == 1) ? one : -one;  // (-1)^{i+1}
                add_term(sc, i, n + 1 - i, n, sign);
            }
            break;
        case Family::Custom:
            throw UnsupportedFamily("Custom is not a constructible family");
    }
    return Algebra{Algebra::Unchecked{}, n, field, std::move(sc), family};
}

Algebra abelian(int n, FieldSpec field) { return Algebra{n, field, {}}; }

Vector product(const Algebra& a, const Vector& x, const Vector& y) {
    const int n = a.dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
        throw DimensionMismatch("product operands must have length " + std::to_string(n));
    }
    Vector out = zero_vector(a.field(), n);
    for (const auto& [key, terms] : a.structure_constants()) {
        const Scalar& xi = x[static_cast<std::size_t>(key.first - 1)];
        const Scalar& yj = y[static_cast<std::size_t>(key.second - 1)];
        if (xi.is_zero() || yj.is_zero()) continue;
        const Scalar w = xi * yj;
        for (const auto& t : terms) out[static_cast<std::size_t>(t.k - 1)] += w * t.c;
    }
    return out;
}

namespace {

/// Sparse vector keyed by basis index; used by the triple-loop checks.
using Sparse = std::map<int, Scalar>;

void accumulate(Sparse& out, int k, const Scalar& c) {
    auto it = out.find(k);
    if (it == out.end()) {
        if (!c.is_zero()) out.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
}

Sparse bracket_basis(const Algebra& a, int i, int j) {
    Sparse out;
    for (const auto& t : a.bracket(i, j)) accumulate(out, t.k, t.c);
    return out;
}

// [u, e_j] and [e_i, u] for sparse u
Sparse bracket_right(const Algebra& a, const Sparse& u, int j) {
    Sparse out;
    for (const auto& [k, c] : u)
        for (const auto& t : a.bracket(k, j)) accumulate(out, t.k, c * t.c);
    return out;
}

Sparse bracket_left(const Algebra& a, int i, const Sparse& u) {
    Sparse out;
    for (const auto& [k, c] : u)
        for (const auto& t : a.bracket(i, k)) accumulate(out, t.k, c * t.c);
    return out;
}

}  // namespace

LeibnizReport check_leibniz(const Algebra& a) {
    const int n = a.dim();
    // cache [e_x, e_y] once; the triple loop then only does sparse work
    std::vector<Sparse> table(static_cast<std::size_t>(n * n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) table[static_cast<std::size_t>((i - 1) * n + (j - 1))] = bracket_basis(a, i, j);
    auto cached = [&](int i, int j) -> const Sparse& { return table[static_cast<std::size_t>((i - 1) * n + (j - 1))]; };

    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z) {
                Sparse lhs = bracket_left(a, x, cached(y, z));
                Sparse rhs = bracket_right(a, cached(x, y), z);
                for (const auto& [k, c] : bracket_right(a, cached(x, z), y)) accumulate(rhs, k, -c);
                if (lhs != rhs) return {false, std::array<int, 3>{x, y, z}};
            }
    return {};
}

bool is_anticommutative(const Algebra& a) {
    const int n = a.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Sparse sum = bracket_basis(a, i, j);
            for (const auto& t : a.bracket(j, i)) accumulate(sum, t.k, t.c);
            if (i == j ? !bracket_basis(a, i, i).empty() : !sum.empty()) return false;
        }
    return true;
}

std::vector<Subspace> lower_central_series(const Algebra& a) {
    const int n = a.dim();
    std::vector<Subspace> series{Subspace::full(a.field(), n)};
    for (int step = 0; step <= n && series.back().dim() > 0; ++step) {
        std::vector<Vector> generators;
        for (const auto& v : series.back().basis())
            for (int j = 1; j <= n; ++j) {
                Vector w = product(a, v, unit_vector(a.field(), n, j));
                if (!is_zero(w)) generators.push_back(std::move(w));
            }
        Subspace next = Subspace::span(a.field(), n, generators);
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

NilpotencyProfile nilpotency_profile(const Algebra& a) {
    const int n = a.dim();
    NilpotencyProfile profile;
    auto series = lower_central_series(a);
    for (const auto& s : series) profile.series_dims.push_back(s.dim());
    profile.nilpotent = series.back().dim() == 0;
    if (profile.nilpotent) profile.index = static_cast<int>(series.size());
    auto dim_at = [&](int i) {  // dim L^i with the series continued by zeros
        return i <= static_cast<int>(series.size()) ? series[static_cast<std::size_t>(i - 1)].dim() : 0;
    };
    if (profile.nilpotent) {
        profile.null_filiform = true;
        for (int i = 1; i <= n + 1; ++i) profile.null_filiform = profile.null_filiform && dim_at(i) == n + 1 - i;
        profile.filiform = true;
        for (int i = 2; i <= n; ++i) profile.filiform = profile.filiform && dim_at(i) == n - i;
    }
    return profile;
}

namespace {

// coefficient matrix of x -> ([e_1, x], ..., [e_n, x]) stacked (left = false),
// or of x -> [x, e_i] (left = true)
Matrix multiplication_system(const Algebra& a, bool left) {
    const int n = a.dim();
    Matrix m{a.field(), n * n, n};
    for (int i = 1; i <= n; ++i)
        for (int col = 1; col <= n; ++col) {
            const auto& terms = left ? a.bracket(col, i) : a.bracket(i, col);
            for (const auto& t : terms) m((i - 1) * n + (t.k - 1), col - 1) += t.c;
        }
    return m;
}

}  // namespace

Subspace right_annihilator(const Algebra& a) {
    return Subspace::span(a.field(), a.dim(), null_space(multiplication_system(a, false)));
}

Subspace center(const Algebra& a) {
    const int n = a.dim();
    Matrix right = multiplication_system(a, false);
    Matrix left = multiplication_system(a, true);
    Matrix both{a.field(), 2 * n * n, n};
    for (int r = 0; r < n * n; ++r)
        for (int c = 0; c < n; ++c) {
            both(r, c) = right(r, c);
            both(n * n + r, c) = left(r, c);
        }
    return Subspace::span(a.field(), n, null_space(both));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("direct sum of algebras over different fields");
    StructureConstants sc = a.structure_constants();
    const int shift = a.dim();
    for (const auto& [key, terms] : b.structure_constants()) {
        auto& dst = sc[{key.first + shift, key.second + shift}];
        for (const auto& t : terms) dst.push_back({t.k + shift, t.c});
    }
    return Algebra{a.dim() + b.dim(), a.field(), std::move(sc)};
}

Algebra permute_basis(const Algebra& a, const std::vector<int>& perm) {
    const int n = a.dim();
    if (static_cast<int>(perm.size()) != n) throw DimensionMismatch("permutation length differs from dim");
    std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
    for (int p : perm) {
        if (p < 1 || p > n || seen[static_cast<std::size_t>(p)]++) throw InvalidAlgebra("not a permutation");
    }
    auto map = [&](int i) { return perm[static_cast<std::size_t>(i - 1)]; };
    StructureConstants sc;
    for (const auto& [key, terms] : a.structure_constants()) {
        auto& dst = sc[{map(key.first), map(key.second)}];
        for (const auto& t : terms) dst.push_back({map(t.k), t.c});
    }
    return Algebra{n, a.field(), std::move(sc)};
}

AssociatedGraded associated_graded(const Algebra& a) {
    const int n = a.dim();
    auto series = lower_central_series(a);
    if (series.back().dim() != 0) throw NotNilpotent("lower central series does not reach zero");

    std::vector<Vector> basis;
    std::vector<int> levels;
    for (std::size_t lvl = 0; lvl + 1 < series.size(); ++lvl) {
        // extend a basis of L^{lvl+2} to L^{lvl+1}, greedily over the echelon rows
        std::vector<Vector> current = series[lvl + 1].basis();
        int rank_now = series[lvl + 1].dim();
        for (const auto& v : series[lvl].basis()) {
            current.push_back(v);
            const int r = Subspace::span(a.field(), n, current).dim();
            if (r > rank_now) {
                rank_now = r;
                basis.push_back(v);
                levels.push_back(static_cast<int>(lvl) + 1);
            } else {
                current.pop_back();
            }
        }
    }

    // columns of change are the adapted basis vectors
    Matrix change{a.field(), n, n};
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) change(r, c) = basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    const Matrix to_adapted = *inverse(change);

    StructureConstants sc;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const Vector w = to_adapted * product(a, basis[static_cast<std::size_t>(p)], basis[static_cast<std::size_t>(q)]);
            const int target = levels[static_cast<std::size_t>(p)] + levels[static_cast<std::size_t>(q)];
            for (int k = 0; k < n; ++k) {
                // quotient by L^{target+1}: keep only the level-target block
                if (!w[static_cast<std::size_t>(k)].is_zero() && levels[static_cast<std::size_t>(k)] == target) {
                    sc[{p + 1, q + 1}].push_back({k + 1, w[static_cast<std::size_t>(k)]});
                }
            }
        }

    bool standard = true;
    for (const auto& v : basis) {
        int nonzero = 0;
        for (const auto& x : v) {
            if (!x.is_zero()) nonzero += x.is_one() ? 1 : 2;
        }
        standard = standard && nonzero == 1;
    }
    return {Algebra{n, a.field(), std::move(sc)}, std::move(basis), std::move(levels), standard};
}

}  // namespace gleib
