#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gleib/algebra.hpp"
#include "gleib/grading.hpp"
#include "gleib/kernels.hpp"
#include "gleib/linalg.hpp"

namespace gleib {

/// f(e_i) = alpha^i e_i + sum_{j>i} beta_{n+i-j} / alpha^{n-j} e_j.
struct AutParamsNF {
    Scalar alpha;
    std::vector<Scalar> betas;  // beta_1, ..., beta_{n-1}
};

/// f(e_1) = a1 e_1 + an e_n, f(e_2) = sum_{k>=2} b_k e_k,
/// f(e_i) = a1^{i-2} sum_{k>=i} b_{k-i+2} e_k.
struct AutParamsF1 {
    Scalar a1;
    Scalar an;
    std::vector<Scalar> b;  // b_2, ..., b_n
};

/// Columns are the images f(e_i). Throw ZeroParameter when alpha, a1 or b_2
/// vanish and DimensionMismatch on wrong parameter counts.
Matrix aut_matrix_nf(int n, const AutParamsNF& params);
Matrix aut_matrix_f1(int n, const AutParamsF1& params);

bool is_automorphism(const Algebra& a, const Matrix& m);

/// Integer weights of a diagonal torus: e_i is scaled by prod_t lambda_t^{w_it}.
struct WeightSystem {
    int rank = 0;
    std::vector<std::vector<std::int64_t>> weights;  // one row per basis vector

    static WeightSystem nf(int n);
    static WeightSystem f1(int n);
    /// e_i -> (i, 0) for i < n, e_n -> (0, 1).
    static WeightSystem f2(int n);
    /// Torsion-free universal grading of the discrete partition, when it exists.
    static std::optional<WeightSystem> from_universal(const AlgebraPtr& a);

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
};

/// c_{ij}^k != 0 implies w_i + w_j = w_k.
bool weights_additive(const Algebra& a, const WeightSystem& w);

/// diag(prod_t lambda_t^{w_it}); lambdas must be nonzero.
Matrix torus_element(const WeightSystem& w, FieldSpec field, const std::vector<Scalar>& lambdas);

/// Images of the character lattice generators in a target group.
struct Specialization {
    AbelianGroup target;
    std::vector<GroupElem> images;
};

/// degree(e_i) = sum_t w_it * images_t.
Grading toral_grading(const AlgebraPtr& a, const WeightSystem& w, const Specialization& s);

/// The Z^rank grading given by the weights.
Grading weight_grading(const AlgebraPtr& a, const WeightSystem& w);

/// Every specialization into a menu group, one grading per equivalence class.
/// Free images are bounded by n.
std::vector<Grading> enumerate_toral_gradings(const AlgebraPtr& a, const WeightSystem& w,
                                              const std::vector<AbelianGroup>& menu);

/// The parametrized automorphism family over F_p as sorted residue matrices.
/// Supported for NF and F1; throws UnsupportedFamily otherwise.
std::vector<ResidueMatrix> automorphism_family(Family family, int n, std::int64_t p);

/// Diagonal torus matrices over F_p, sorted.
std::vector<ResidueMatrix> torus_points(const WeightSystem& w, int n, std::int64_t p);

struct BruteForceOptions {
    /// Largest p^(n^2) the search will accept.
    std::uint64_t budget = 43046721;  // 3^16
    std::optional<std::int64_t> budget_ms;
    bool parallel = true;
};

struct BruteForceReport {
    std::uint64_t count = 0;
    std::optional<bool> all_in_family;  // empty for families without a parametrization
    std::optional<std::uint64_t> family_size;
    std::int64_t elapsed_ms = 0;
    std::vector<ResidueMatrix> automorphisms;
};

/// Throws BudgetExceeded when p^(n^2) is over budget or time runs out.
BruteForceReport brute_force_aut(const Algebra& a, const BruteForceOptions& options = {});

enum class NormalizerMode {
    /// M T(lambda) M^-1 = T(phi(lambda)) as Laurent polynomials in lambda.
    Formal,
    /// M T M^-1 lies in the torus for every F_p-point T.
    FieldPoints,
};

struct NormalizerReport {
    bool equals_torus = false;
    std::uint64_t normalizer_size = 0;
    std::uint64_t torus_size = 0;
    std::uint64_t candidates = 0;
    std::string source;  // "brute-force" or "family"
    std::int64_t elapsed_ms = 0;
};

/// Candidates come from brute force for n <= 3 and from the parametrized
/// family otherwise. NF and F1 only.
NormalizerReport normalizer_equals_torus(const Algebra& a, NormalizerMode mode = NormalizerMode::Formal,
                                         const BruteForceOptions& options = {});

/// One row of the toral case analysis: a specialization and the expected
/// degree map written out from the listed components.
struct ToralCase {
    std::string label;
    Specialization specialization;
    std::vector<GroupElem> expected;
};

/// NF (n >= 3) and F1 (n >= 4) case tables. Throws UnsupportedFamily otherwise.
std::vector<ToralCase> toral_case_table(Family family, int n);

}  // namespace gleib
