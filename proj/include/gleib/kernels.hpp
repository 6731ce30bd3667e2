#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "gleib/algebra.hpp"

namespace gleib {

/// Dense structure constants reduced mod p, 0-based: c[(i*n + j)*n + k].
struct PrimeStructure {
    int n = 0;
    std::int64_t p = 2;
    std::vector<std::int64_t> c;

    /// Throws FieldMismatch unless the algebra lives over a prime field.
    static PrimeStructure from_algebra(const Algebra& a);
    std::int64_t at(int i, int j, int k) const { return c[(static_cast<std::size_t>(i) * n + j) * n + k]; }
};

/// Row-major n x n residue matrix; column c holds the image of e_{c+1}.
using ResidueMatrix = std::vector<std::int64_t>;

std::int64_t determinant_mod_p(ResidueMatrix m, int n, std::int64_t p);
std::optional<ResidueMatrix> inverse_mod_p(const ResidueMatrix& m, int n, std::int64_t p);
ResidueMatrix multiply_mod_p(const ResidueMatrix& a, const ResidueMatrix& b, int n, std::int64_t p);

/// M [e_i, e_j] = [M e_i, M e_j] for every basis pair (invertibility not checked).
bool preserves_products(const PrimeStructure& s, const ResidueMatrix& m);

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Reference scan over all p^(n^2) matrices, single threaded. Sorted output.
/// Throws BudgetExceeded when the deadline passes.
std::vector<ResidueMatrix> automorphisms_serial(const PrimeStructure& s, Deadline deadline = {});

/// Column-by-column backtracking: a product constraint is tested as soon as
/// every column it mentions is fixed. The first column is split across
/// OpenMP threads. Sorted output, identical to automorphisms_serial.
std::vector<ResidueMatrix> automorphisms_parallel(const PrimeStructure& s, Deadline deadline = {});

}  // namespace gleib
