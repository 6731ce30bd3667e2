#pragma once

#include <string>
#include <vector>

#include "gleib/algebra.hpp"
#include "gleib/grading.hpp"

namespace gleib {

enum class Hypothesis {
    E1Homogeneous,
    E1E2Homogeneous,
    /// e_1 for NF; e_1, e_2 for F1 and the Lie families; e_1, e_n for F2.
    FamilyDefault,
};

/// Indices forced homogeneous by the generators: if e_i and e_j are
/// homogeneous and [e_i, e_j] is a single nonzero multiple of e_k, so is e_k.
std::vector<int> propagate_homogeneity(const Algebra& a, std::vector<int> generators);

/// trivial, Z, Z_i (2 <= i <= n), Z x Z_i (2 <= i <= n-1).
std::vector<AbelianGroup> standard_menu(int n);

struct H1Enumeration {
    std::vector<Grading> gradings;
    std::vector<int> generators;
    /// Generators taken homogeneous by assumption only (e_n for F2).
    std::vector<int> assumed_homogeneous;
};

/// All gradings in which the hypothesis generators are homogeneous, one per
/// equivalence class. Throws UnsupportedFamily for Custom algebras under
/// FamilyDefault and when the generators leave some e_k undetermined.
H1Enumeration enumerate_h1_gradings(const AlgebraPtr& a, Hypothesis hypothesis, const std::vector<AbelianGroup>& menu);

struct CatalogEntry {
    Family family;
    int n;
    std::string item;    // "(1)" ... "(5)"
    std::string params;  // e.g. "i=3 k=2"
    std::string note;    // set when the listed pattern was corrected
    Grading grading;
};

/// Instantiated catalog for NF (n >= 2), F1 and F2 (n >= 3). Throws
/// BadDimension below that and UnsupportedFamily for other families.
std::vector<CatalogEntry> catalog(Family family, int n);

struct EnumerationReport {
    std::vector<CanonicalGrading> found;
    std::vector<CanonicalGrading> expected;
    std::vector<CanonicalGrading> missing;
    std::vector<CanonicalGrading> extra;
    /// Pairs of expected labels with the same canonical form.
    std::vector<std::pair<std::string, std::string>> collapsed;

    bool passed() const { return missing.empty() && extra.empty(); }
};

EnumerationReport compare(const std::vector<Grading>& found, const std::vector<Grading>& expected,
                          const std::vector<std::string>& expected_labels = {});
EnumerationReport compare(const std::vector<Grading>& found, const std::vector<CatalogEntry>& expected);

struct LiftedGrading {
    int rule;  // 1: the new vector joins a degree, 2: it gets its own Z factor
    Grading grading;
};

/// Gradings of A + B, B one-dimensional with zero product, from a grading
/// of A. Rule 1 puts the new basis vector into each support degree and into
/// one fresh degree when the group has one; rule 2 uses Z x G.
std::vector<LiftedGrading> lift_direct_sum_gradings(const Grading& g);

}  // namespace gleib
