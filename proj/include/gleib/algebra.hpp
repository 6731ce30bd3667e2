#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gleib/field.hpp"
#include "gleib/linalg.hpp"

namespace gleib {

/// Family tags. NF is the null-filiform algebra, F1/F2 the two naturally
/// graded filiform non-Lie Leibniz families, LieL/LieQ the filiform Lie
/// algebras L_n and Q_n.
enum class Family { NF, F1, F2, LieL, LieQ, Custom };

std::string_view family_name(Family f);
/// Accepts the JSON labels ("NF", "F1", ...) and the CLI spellings
/// ("nf", "f1", "f2", "lie-l", "lie-q", "custom").
Family parse_family(std::string_view text);

struct Term {
    int k;     // 1-based basis index
    Scalar c;  // nonzero coefficient
    friend bool operator==(const Term&, const Term&) = default;
};

/// [e_i, e_j] = sum of terms, keyed by (i, j), 1-based. Ordered map gives the
/// canonical (i, j)-lexicographic ordering.
using StructureConstants = std::map<std::pair<int, int>, std::vector<Term>>;

/// A finite-dimensional algebra given by sparse structure constants.
/// Immutable once built: the constructor merges repeated k, drops zero
/// coefficients and empty products, and sorts terms by k.
class Algebra {
public:
    /// Throws InvalidAlgebra on out-of-range indices or foreign-field
    /// coefficients, and when a family label does not match the family
    /// constructor output.
    Algebra(int dim, FieldSpec field, StructureConstants sc, Family label = Family::Custom);

    int dim() const { return dim_; }
    const FieldSpec& field() const { return field_; }
    const StructureConstants& structure_constants() const { return sc_; }
    Family label() const { return label_; }

    /// Terms of [e_i, e_j]; empty when the product vanishes.
    const std::vector<Term>& bracket(int i, int j) const;

    /// Same dimension, field and structure constants (the label is ignored).
    bool same_structure(const Algebra& other) const;

    /// Number of nonzero coefficients c_{ij}^k.
    std::size_t nonzero_count() const;

private:
    struct Unchecked {};
    Algebra(Unchecked, int dim, FieldSpec field, StructureConstants sc, Family label);
    friend Algebra make_family(Family family, int n, FieldSpec field);

    int dim_;
    FieldSpec field_;
    StructureConstants sc_;
    Family label_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

Algebra make_family(Family family, int n, FieldSpec field);
Algebra abelian(int n, FieldSpec field);

Vector product(const Algebra& a, const Vector& x, const Vector& y);

struct LeibnizReport {
    bool ok = true;
    std::optional<std::array<int, 3>> first_violation;  // basis triple (x, y, z)
};

/// Exhaustive check of [x,[y,z]] = [[x,y],z] - [[x,z],y] on all basis triples.
LeibnizReport check_leibniz(const Algebra& a);

/// [e_i, e_j] = -[e_j, e_i] and [e_i, e_i] = 0 on all basis pairs.
bool is_anticommutative(const Algebra& a);

/// L^1 = L, L^{k+1} = [L^k, L]; stops at the first zero term or the first
/// repeat, and after at most dim + 1 steps.
std::vector<Subspace> lower_central_series(const Algebra& a);

struct NilpotencyProfile {
    bool nilpotent = false;
    std::optional<int> index;  // least k with L^k = 0
    bool null_filiform = false;
    bool filiform = false;
    std::vector<int> series_dims;
};

NilpotencyProfile nilpotency_profile(const Algebra& a);

/// { x : [y, x] = 0 for all y }.
Subspace right_annihilator(const Algebra& a);
/// { x : [y, x] = [x, y] = 0 for all y }.
Subspace center(const Algebra& a);

/// Block structure constants: A on e_1..e_m, B on e_{m+1}..e_{m+n}.
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// Relabels the basis: e_i of the input becomes e_{perm[i-1]} of the output.
Algebra permute_basis(const Algebra& a, const std::vector<int>& perm);

/// gr(L) = L^1/L^2 + L^2/L^3 + ... in an adapted basis.
struct AssociatedGraded {
    Algebra graded;
    /// Adapted basis vectors in the original coordinates, level by level.
    std::vector<Vector> adapted_basis;
    /// Level (1-based) of each adapted basis vector.
    std::vector<int> levels;
    /// True when every adapted basis vector is a standard basis vector.
    bool standard_adapted_basis = false;
};

/// Throws NotNilpotent when the lower central series does not reach zero.
AssociatedGraded associated_graded(const Algebra& a);

}  // namespace gleib
