#include "gleib/grading.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gleib/smith.hpp"

namespace gleib {

Partition discrete_partition(int n) {
    Partition p;
    for (int i = 1; i <= n; ++i) p.push_back({i});
    return p;
}

Partition single_block_partition(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    return {all};
}

Partition normalize_partition(Partition p, int n) {
    std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
    for (auto& block : p) {
        if (block.empty()) throw InvalidGrading("empty partition block");
        std::sort(block.begin(), block.end());
        for (int i : block) {
            if (i < 1 || i > n || seen[static_cast<std::size_t>(i)]++) throw InvalidGrading("blocks must cover 1..n exactly once");
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (!seen[static_cast<std::size_t>(i)]) throw InvalidGrading("blocks must cover 1..n exactly once");
    }
    std::sort(p.begin(), p.end());
    return p;
}

Grading::Grading(AlgebraPtr algebra, AbelianGroup group, std::vector<GroupElem> degrees)
    : algebra_{std::move(algebra)}, group_{std::move(group)}, degrees_{std::move(degrees)} {
    if (!algebra_) throw InvalidGrading("grading without an algebra");
    if (static_cast<int>(degrees_.size()) != algebra_->dim()) throw InvalidGrading("one degree per basis vector required");
    for (const auto& d : degrees_) {
        if (!(d.group() == group_)) throw GroupMismatch("degree in " + d.group().to_string() + ", grading by " + group_.to_string());
    }
}

std::vector<std::pair<GroupElem, std::vector<int>>> Grading::components() const {
    std::map<GroupElem, std::vector<int>> by_degree;
    for (int i = 1; i <= algebra_->dim(); ++i) by_degree[degree(i)].push_back(i);
    return {by_degree.begin(), by_degree.end()};
}

Partition Grading::partition() const {
    Partition p;
    for (auto& [deg, indices] : components()) p.push_back(std::move(indices));
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<GroupElem> Grading::support() const {
    std::vector<GroupElem> s;
    for (auto& [deg, indices] : components()) s.push_back(deg);
    return s;
}

SubspaceGrading::SubspaceGrading(AlgebraPtr algebra, AbelianGroup group,
                                 std::vector<std::pair<GroupElem, Subspace>> components)
    : algebra_{std::move(algebra)}, group_{std::move(group)}, components_{std::move(components)} {
    const int n = algebra_->dim();
    std::vector<Vector> stacked;
    for (const auto& [deg, space] : components_) {
        if (!(deg.group() == group_)) throw GroupMismatch("component degree outside the grading group");
        for (const auto& v : space.basis()) stacked.push_back(v);
    }
    if (static_cast<int>(stacked.size()) != n || rank(Matrix::from_rows(algebra_->field(), n, stacked)) != n) {
        throw InvalidGrading("components do not form a direct sum decomposition");
    }
}

SubspaceGrading to_subspace_grading(const Grading& g) {
    const auto& a = g.algebra();
    std::vector<std::pair<GroupElem, Subspace>> comps;
    for (auto& [deg, indices] : g.components()) {
        std::vector<Vector> vs;
        for (int i : indices) vs.push_back(unit_vector(a.field(), a.dim(), i));
        comps.emplace_back(deg, Subspace::span(a.field(), a.dim(), vs));
    }
    return SubspaceGrading{g.algebra_ptr(), g.group(), std::move(comps)};
}

SubspaceGrading transport(const Grading& g, const Matrix& automorphism) {
    const auto& a = g.algebra();
    std::vector<std::pair<GroupElem, Subspace>> comps;
    for (auto& [deg, indices] : g.components()) {
        std::vector<Vector> vs;
        for (int i : indices) vs.push_back(automorphism.column(i - 1));
        comps.emplace_back(deg, Subspace::span(a.field(), a.dim(), vs));
    }
    return SubspaceGrading{g.algebra_ptr(), g.group(), std::move(comps)};
}

GradingReport verify_grading(const Grading& g) {
    for (const auto& [key, terms] : g.algebra().structure_constants()) {
        const GroupElem sum = g.degree(key.first) + g.degree(key.second);
        for (const auto& t : terms) {
            if (!(sum == g.degree(t.k))) return {false, std::array<int, 3>{key.first, key.second, t.k}};
        }
    }
    return {};
}

GradingReport verify_grading(const SubspaceGrading& g) {
    const auto& comps = g.components();
    for (std::size_t a = 0; a < comps.size(); ++a)
        for (std::size_t b = 0; b < comps.size(); ++b) {
            const GroupElem target = comps[a].first + comps[b].first;
            const Subspace* home = nullptr;
            for (const auto& c : comps) {
                if (c.first == target) home = &c.second;
            }
            for (const auto& u : comps[a].second.basis())
                for (const auto& v : comps[b].second.basis()) {
                    Vector w = product(g.algebra(), u, v);
                    const bool fine = home ? home->contains(w) : is_zero(w);
                    if (!fine) return {false, std::array<int, 3>{static_cast<int>(a), static_cast<int>(b), -1}};
                }
        }
    return {};
}

namespace {

IntMatrix unimodular_inverse(const IntMatrix& m) {
    // the Hermite form of a unimodular matrix is the identity
    return hermite_normal_form(m).A;
}

std::int64_t to_i64(const BigInt& v) { return static_cast<std::int64_t>(v); }

}  // namespace

std::optional<UniversalGrading> universal_grading(const AlgebraPtr& algebra, const Partition& partition) {
    const int n = algebra->dim();
    Partition blocks = normalize_partition(partition, n);
    const int b = static_cast<int>(blocks.size());
    std::vector<int> block_of(static_cast<std::size_t>(n + 1));
    for (int j = 0; j < b; ++j)
        for (int i : blocks[static_cast<std::size_t>(j)]) block_of[static_cast<std::size_t>(i)] = j;

    std::set<std::vector<std::int64_t>> rows;
    for (const auto& [key, terms] : algebra->structure_constants()) {
        for (const auto& t : terms) {
            std::vector<std::int64_t> r(static_cast<std::size_t>(b), 0);
            ++r[block_of[key.first]];
            ++r[block_of[key.second]];
            --r[block_of[t.k]];
            if (std::any_of(r.begin(), r.end(), [](std::int64_t x) { return x != 0; })) rows.insert(r);
        }
    }

    std::vector<BigInt> diag;
    IntMatrix v = IntMatrix::identity(b);
    if (!rows.empty()) {
        SmithForm snf = smith_normal_form(IntMatrix::from_rows({rows.begin(), rows.end()}, b));
        diag = snf.diagonal;
        v = snf.V;
    }
    // coordinate t of the new basis: dropped (d_t = 1), torsion (d_t > 1) or free
    std::vector<int> free_coords, torsion_coords;
    std::vector<std::int64_t> torsion;
    for (int t = 0; t < b; ++t) {
        const BigInt d = t < static_cast<int>(diag.size()) ? diag[static_cast<std::size_t>(t)] : BigInt{0};
        if (d == 1) continue;
        if (d == 0) {
            free_coords.push_back(t);
        } else {
            torsion_coords.push_back(t);
            torsion.push_back(to_i64(d));
        }
    }
    const int r = static_cast<int>(free_coords.size());
    AbelianGroup group{r, torsion};
    const IntMatrix v_inv = unimodular_inverse(v);

    // Hermite form of the free block makes the free coordinates canonical
    IntMatrix free_block{r, b};
    for (int s = 0; s < r; ++s)
        for (int j = 0; j < b; ++j) free_block(s, j) = v(j, free_coords[static_cast<std::size_t>(s)]);
    HermiteForm hnf = hermite_normal_form(free_block);
    const IntMatrix a_inv = unimodular_inverse(hnf.A);

    std::vector<GroupElem> block_degrees;
    for (int j = 0; j < b; ++j) {
        std::vector<std::int64_t> coords;
        for (int s = 0; s < r; ++s) coords.push_back(to_i64(hnf.H(s, j)));
        for (int t : torsion_coords) coords.push_back(to_i64(v(j, t)));
        block_degrees.emplace_back(group, std::move(coords));
    }
    for (int j = 0; j < b; ++j)
        for (int k = j + 1; k < b; ++k) {
            if (block_degrees[static_cast<std::size_t>(j)] == block_degrees[static_cast<std::size_t>(k)]) return std::nullopt;
        }

    std::vector<std::vector<std::int64_t>> generators;
    for (int s = 0; s < r; ++s) {
        // new free generator s = sum_t (A^{-1})_{t s} * old free generator t
        std::vector<std::int64_t> combo(static_cast<std::size_t>(b), 0);
        for (int t = 0; t < r; ++t) {
            const BigInt coeff = a_inv(t, s);
            if (coeff == 0) continue;
            for (int j = 0; j < b; ++j) combo[j] += to_i64(coeff * v_inv(free_coords[static_cast<std::size_t>(t)], j));
        }
        generators.push_back(std::move(combo));
    }
    for (int t : torsion_coords) {
        std::vector<std::int64_t> combo(static_cast<std::size_t>(b));
        for (int j = 0; j < b; ++j) combo[j] = to_i64(v_inv(t, j));
        generators.push_back(std::move(combo));
    }

    std::vector<GroupElem> degrees(static_cast<std::size_t>(n));
    for (int j = 0; j < b; ++j)
        for (int i : blocks[static_cast<std::size_t>(j)]) degrees[static_cast<std::size_t>(i - 1)] = block_degrees[static_cast<std::size_t>(j)];
    Grading grading{algebra, group, std::move(degrees)};
    return UniversalGrading{std::move(group), std::move(blocks), std::move(block_degrees), std::move(grading),
                            std::move(generators)};
}

void Homomorphism::validate() const {
    if (static_cast<int>(images.size()) != source.arity()) {
        throw InconsistentHomomorphism("need one image per generator of " + source.to_string());
    }
    for (int c = 0; c < source.arity(); ++c) {
        const GroupElem& img = images[static_cast<std::size_t>(c)];
        if (!(img.group() == target)) throw InconsistentHomomorphism("image outside " + target.to_string());
        const std::int64_t m = source.modulus(c);
        if (m != 0 && !(m * img).is_zero()) {
            throw InconsistentHomomorphism("image of a generator of order " + std::to_string(m) + " has incompatible order");
        }
    }
}

GroupElem Homomorphism::apply(const GroupElem& g) const {
    if (!(g.group() == source)) throw GroupMismatch("element outside the homomorphism source");
    GroupElem out = GroupElem::zero(target);
    for (int c = 0; c < source.arity(); ++c) {
        if (g.coords()[c] != 0) out += g.coords()[c] * images[static_cast<std::size_t>(c)];
    }
    return out;
}

Grading coarsen(const Grading& g, const Homomorphism& phi) {
    phi.validate();
    if (!(phi.source == g.group())) throw GroupMismatch("homomorphism source differs from grading group");
    std::vector<GroupElem> degrees;
    for (const auto& d : g.degrees()) degrees.push_back(phi.apply(d));
    return Grading{g.algebra_ptr(), phi.target, std::move(degrees)};
}

Homomorphism factor_through_universal(const UniversalGrading& universal, const Grading& g) {
    std::vector<GroupElem> block_images;
    for (const auto& block : universal.partition) {
        for (int i : block) {
            if (!(g.degree(i) == g.degree(block.front()))) throw InvalidGrading("grading is not constant on the universal blocks");
        }
        block_images.push_back(g.degree(block.front()));
    }
    std::vector<GroupElem> images;
    for (const auto& combo : universal.generator_in_blocks) {
        GroupElem img = GroupElem::zero(g.group());
        for (std::size_t j = 0; j < combo.size(); ++j) {
            if (combo[j] != 0) img += combo[j] * block_images[j];
        }
        images.push_back(std::move(img));
    }
    return Homomorphism{universal.group, g.group(), std::move(images)};
}

CanonicalGrading canonical_form(const Grading& g) {
    auto universal = universal_grading(g.algebra_ptr(), g.partition());
    if (!universal) throw InvalidGrading("degree map is not a grading: its fibers collapse in the universal group");
    std::vector<std::size_t> order(universal->partition.size());
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](std::size_t j) {
        const auto ord = elem_order(universal->block_degrees[j]);
        // finite orders first, infinite last
        return std::make_tuple(ord.has_value() ? 0 : 1, ord.value_or(0), universal->block_degrees[j].coords(),
                               universal->partition[j].front());
    };
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
    CanonicalGrading out{universal->group, {}, {}};
    for (std::size_t j : order) {
        out.blocks.push_back(universal->partition[j]);
        out.degrees.push_back(universal->block_degrees[j]);
    }
    return out;
}

bool equivalent(const Grading& a, const Grading& b) {
    if (!a.algebra().same_structure(b.algebra())) throw DifferentAlgebras("gradings live on different algebras");
    return canonical_form(a) == canonical_form(b);
}

namespace {

// representatives keyed by partition, in discovery order
using Found = std::vector<std::pair<Partition, Grading>>;

Found coarsenings_into(const Grading& source, const AbelianGroup& target, std::int64_t free_bound) {
    const AbelianGroup& from = source.group();
    const std::vector<GroupElem> all = elements(target, free_bound);
    std::vector<std::vector<GroupElem>> choices;
    for (int c = 0; c < from.arity(); ++c) {
        const std::int64_t m = from.modulus(c);
        std::vector<GroupElem> ok;
        for (const auto& g : all) {
            if (m == 0 || (m * g).is_zero()) ok.push_back(g);
        }
        choices.push_back(std::move(ok));
    }
    Found found;
    std::set<Partition> seen;
    std::vector<std::size_t> digit(choices.size(), 0);
    while (true) {
        std::vector<GroupElem> images;
        for (std::size_t c = 0; c < choices.size(); ++c) images.push_back(choices[c][digit[c]]);
        Grading g = coarsen(source, Homomorphism{from, target, std::move(images)});
        Partition p = g.partition();
        if (seen.insert(p).second) found.emplace_back(std::move(p), std::move(g));
        std::size_t c = choices.size();
        while (c > 0 && ++digit[c - 1] == choices[c - 1].size()) digit[--c] = 0;
        if (c == 0) break;
    }
    return found;
}

}  // namespace

std::vector<Grading> enumerate_coarsenings(const Grading& source, const std::vector<AbelianGroup>& menu,
                                           std::int64_t free_bound) {
    std::vector<Found> per_item(menu.size());
    const auto count = static_cast<std::int64_t>(menu.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < count; ++t) {
        per_item[static_cast<std::size_t>(t)] = coarsenings_into(source, menu[static_cast<std::size_t>(t)], free_bound);
    }
    std::set<Partition> seen;
    std::vector<std::pair<CanonicalGrading, Grading>> merged;
    for (auto& item : per_item) {
        for (auto& [p, g] : item) {
            if (seen.insert(p).second) merged.emplace_back(canonical_form(g), std::move(g));
        }
    }
    std::stable_sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Grading> out;
    for (auto& [c, g] : merged) out.push_back(std::move(g));
    return out;
}

Grading natural_grading(const AssociatedGraded& gr) {
    auto algebra = std::make_shared<const Algebra>(gr.graded);
    const AbelianGroup z = AbelianGroup::integers();
    std::vector<GroupElem> degrees;
    for (int level : gr.levels) degrees.emplace_back(z, std::vector<std::int64_t>{level});
    return Grading{algebra, z, std::move(degrees)};
}

std::optional<Grading> natural_degree_map(const AlgebraPtr& algebra) {
    AssociatedGraded gr = associated_graded(*algebra);
    if (!gr.standard_adapted_basis) return std::nullopt;
    const AbelianGroup z = AbelianGroup::integers();
    std::vector<GroupElem> degrees(static_cast<std::size_t>(algebra->dim()));
    for (std::size_t p = 0; p < gr.adapted_basis.size(); ++p) {
        const auto& v = gr.adapted_basis[p];
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_zero()) degrees[i] = GroupElem{z, {gr.levels[p]}};
        }
    }
    return Grading{algebra, z, std::move(degrees)};
}

}  // namespace gleib
