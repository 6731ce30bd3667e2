#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "gleib/algebra.hpp"
#include "gleib/group.hpp"
#include "gleib/linalg.hpp"

namespace gleib {

/// Set partition of basis indices 1..n. Blocks are sorted, and ordered by
/// their smallest element.
using Partition = std::vector<std::vector<int>>;

Partition discrete_partition(int n);
Partition single_block_partition(int n);
/// Sorts blocks and block contents; throws InvalidGrading unless the blocks
/// cover 1..n exactly once.
Partition normalize_partition(Partition p, int n);

/// Homogeneous-basis grading: each standard basis vector e_i has a degree.
/// Construction only checks shapes; verify_grading checks closure.
class Grading {
public:
    Grading(AlgebraPtr algebra, AbelianGroup group, std::vector<GroupElem> degrees);

    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const Algebra& algebra() const { return *algebra_; }
    const AbelianGroup& group() const { return group_; }
    /// Degree of e_i, 1-based.
    const GroupElem& degree(int i) const { return degrees_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<GroupElem>& degrees() const { return degrees_; }

    /// Fibers of the degree map.
    Partition partition() const;
    /// Distinct degrees carrying a nonzero component, sorted.
    std::vector<GroupElem> support() const;
    /// (degree, basis indices) for each component, in support order.
    std::vector<std::pair<GroupElem, std::vector<int>>> components() const;

private:
    AlgebraPtr algebra_;
    AbelianGroup group_;
    std::vector<GroupElem> degrees_;
};

/// Grading whose components are arbitrary subspaces, e.g. the image of a
/// homogeneous-basis grading under a non-diagonal automorphism.
class SubspaceGrading {
public:
    /// Throws InvalidGrading unless the components form a direct sum
    /// decomposition (dims add up to n and the stacked basis is invertible).
    SubspaceGrading(AlgebraPtr algebra, AbelianGroup group, std::vector<std::pair<GroupElem, Subspace>> components);

    const Algebra& algebra() const { return *algebra_; }
    const AbelianGroup& group() const { return group_; }
    const std::vector<std::pair<GroupElem, Subspace>>& components() const { return components_; }

private:
    AlgebraPtr algebra_;
    AbelianGroup group_;
    std::vector<std::pair<GroupElem, Subspace>> components_;
};

SubspaceGrading to_subspace_grading(const Grading& g);
/// Components M * L_g for an automorphism M (columns are images of e_i).
SubspaceGrading transport(const Grading& g, const Matrix& automorphism);

struct GradingReport {
    bool ok = true;
    /// Homogeneous form: (i, j, k) of a nonzero c_{ij}^k with
    /// deg i + deg j != deg k. Subspace form: component positions (a, b, -1).
    std::optional<std::array<int, 3>> first_violation;
};

GradingReport verify_grading(const Grading& g);
GradingReport verify_grading(const SubspaceGrading& g);

/// Universal group of a partition: one generator per block modulo the
/// relations deg i + deg j = deg k forced by nonzero c_{ij}^k.
struct UniversalGrading {
    AbelianGroup group;
    Partition partition;
    std::vector<GroupElem> block_degrees;
    Grading grading;
    /// Each generator of `group` as an integer combination of block
    /// generators; used to factor other gradings through this one.
    std::vector<std::vector<std::int64_t>> generator_in_blocks;
};

/// Returns nullopt when the relations force two distinct blocks onto the
/// same degree.
std::optional<UniversalGrading> universal_grading(const AlgebraPtr& algebra, const Partition& partition);

/// A homomorphism given by the images of the source generators.
struct Homomorphism {
    AbelianGroup source;
    AbelianGroup target;
    std::vector<GroupElem> images;

    /// Throws InconsistentHomomorphism when some torsion generator of order m
    /// has an image with m * image != 0.
    void validate() const;
    GroupElem apply(const GroupElem& g) const;
};

Grading coarsen(const Grading& g, const Homomorphism& phi);

/// The homomorphism from the universal group of g's partition to g's group
/// that reproduces g.
Homomorphism factor_through_universal(const UniversalGrading& universal, const Grading& g);

/// Universal grading of the induced partition, with blocks listed in the
/// canonical support order (order, then coordinates, then smallest index).
struct CanonicalGrading {
    AbelianGroup group;
    Partition blocks;
    std::vector<GroupElem> degrees;
    friend bool operator==(const CanonicalGrading&, const CanonicalGrading&) = default;
    friend auto operator<=>(const CanonicalGrading&, const CanonicalGrading&) = default;
};

CanonicalGrading canonical_form(const Grading& g);

/// Weak equivalence on homogeneous-basis gradings: equal canonical forms.
/// Throws DifferentAlgebras unless both grade the same structure constants.
bool equivalent(const Grading& a, const Grading& b);

/// Every coarsening of `source` by a homomorphism into a menu group, one
/// representative per induced partition, sorted by canonical form. Free
/// generator images are bounded by `free_bound` in each coordinate. Menu
/// items run in parallel; the merge keeps the first representative in menu
/// order, so the output does not depend on the thread count.
std::vector<Grading> enumerate_coarsenings(const Grading& source, const std::vector<AbelianGroup>& menu,
                                           std::int64_t free_bound);

/// The Z-grading of gr(L) putting level-i adapted basis vectors in degree i.
Grading natural_grading(const AssociatedGraded& gr);

/// When the adapted basis of gr(L) is made of standard basis vectors, the
/// degree map e_i -> level on L itself (checked with verify_grading by the
/// caller); nullopt otherwise.
std::optional<Grading> natural_degree_map(const AlgebraPtr& algebra);

}  // namespace gleib
