#include <doctest.h>

#include <algorithm>
#include <random>

#include "gleib/torus.hpp"

using namespace gleib;

namespace {

const FieldSpec Q = FieldSpec::rationals();

AlgebraPtr fam(Family f, int n, FieldSpec field = Q) { return std::make_shared<const Algebra>(make_family(f, n, field)); }

Matrix diag(FieldSpec f, std::vector<std::int64_t> d) {
    Matrix m(f, static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = Scalar::from_int(f, d[i]);
    return m;
}

std::vector<std::int64_t> flat(const Grading& g) {
    std::vector<std::int64_t> out;
    for (const auto& d : g.degrees())
        for (auto c : d.coords()) out.push_back(c);
    return out;
}

Scalar nonzero(FieldSpec f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(1, 6);
    std::bernoulli_distribution sign;
    return Scalar::from_int(f, sign(rng) ? d(rng) : -d(rng));
}

}  // namespace

TEST_CASE("automorphism matrices") {
    CHECK(aut_matrix_nf(3, {Scalar::one(Q), {Scalar::zero(Q), Scalar::zero(Q)}}) == Matrix::identity(Q, 3));
    CHECK(aut_matrix_nf(3, {Scalar::from_int(Q, 2), {Scalar::zero(Q), Scalar::zero(Q)}}) == diag(Q, {2, 4, 8}));
    CHECK(aut_matrix_f1(4, {Scalar::one(Q), Scalar::zero(Q), {Scalar::one(Q), Scalar::zero(Q), Scalar::zero(Q)}}) ==
          Matrix::identity(Q, 4));
    CHECK_THROWS_AS(aut_matrix_nf(3, {Scalar::zero(Q), {Scalar::zero(Q), Scalar::zero(Q)}}), ZeroParameter);
    CHECK_THROWS_AS(aut_matrix_f1(4, {Scalar::one(Q), Scalar::zero(Q), {Scalar::zero(Q), Scalar::one(Q), Scalar::zero(Q)}}),
                    ZeroParameter);
    CHECK_THROWS_AS(aut_matrix_nf(3, {Scalar::one(Q), {Scalar::zero(Q)}}), DimensionMismatch);
}

TEST_CASE("is_automorphism") {
    const Algebra nf3 = make_family(Family::NF, 3, Q);
    CHECK(is_automorphism(nf3, Matrix::identity(Q, 3)));
    CHECK_FALSE(is_automorphism(nf3, diag(Q, {1, 1, 2})));
    CHECK_FALSE(is_automorphism(nf3, Matrix(Q, 3, 3)));
}

TEST_CASE("the beta index must depend on i") {
    // Coefficient of e_j in f(e_i) taken as beta_{n+1-j} alpha^{j-n}, the same for every i.
    const Algebra nf3 = make_family(Family::NF, 3, Q);
    const Scalar b1 = Scalar::from_int(Q, 1), b2 = Scalar::from_int(Q, 2);
    Matrix literal = Matrix::identity(Q, 3);
    literal(1, 0) = b2;
    literal(2, 0) = b1;
    literal(2, 1) = b1;
    CHECK_FALSE(is_automorphism(nf3, literal));
    CHECK(is_automorphism(nf3, aut_matrix_nf(3, {Scalar::one(Q), {b1, b2}})));
}

TEST_CASE("random family members are automorphisms") {
    std::mt19937_64 rng{5};
    std::uniform_int_distribution<std::int64_t> any(-5, 5);
    for (FieldSpec f : {Q, FieldSpec::prime(7), FieldSpec::prime(11)}) {
        for (int n = 2; n <= 10; ++n) {
            const Algebra nf = make_family(Family::NF, n, f);
            for (int t = 0; t < 3; ++t) {
                AutParamsNF p{nonzero(f, rng), {}};
                for (int k = 1; k < n; ++k) p.betas.push_back(Scalar::from_int(f, any(rng)));
                CHECK(is_automorphism(nf, aut_matrix_nf(n, p)));
            }
            if (n < 3) continue;
            const Algebra f1 = make_family(Family::F1, n, f);
            for (int t = 0; t < 3; ++t) {
                AutParamsF1 p{nonzero(f, rng), Scalar::from_int(f, any(rng)), {nonzero(f, rng)}};
                for (int k = 3; k <= n; ++k) p.b.push_back(Scalar::from_int(f, any(rng)));
                CHECK(is_automorphism(f1, aut_matrix_f1(n, p)));
            }
        }
    }
}

TEST_CASE("families are closed under composition") {
    for (Family f : {Family::NF, Family::F1}) {
        const auto fam3 = automorphism_family(f, 3, 3);
        CHECK(std::is_sorted(fam3.begin(), fam3.end()));
        for (std::size_t a = 0; a < fam3.size(); a += 3)
            for (std::size_t b = 0; b < fam3.size(); b += 5)
                CHECK(std::binary_search(fam3.begin(), fam3.end(), multiply_mod_p(fam3[a], fam3[b], 3, 3)));
    }
    CHECK(automorphism_family(Family::NF, 3, 5).size() == 100);
    CHECK(automorphism_family(Family::F1, 4, 3).size() == 108);
    CHECK_THROWS_AS(automorphism_family(Family::F2, 4, 3), UnsupportedFamily);
}

TEST_CASE("weight systems") {
    CHECK(WeightSystem::nf(3).weights == std::vector<std::vector<std::int64_t>>{{1}, {2}, {3}});
    CHECK(WeightSystem::f1(4).weights == std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}});
    CHECK(WeightSystem::f2(4).weights == std::vector<std::vector<std::int64_t>>{{1, 0}, {2, 0}, {3, 0}, {0, 1}});
    for (int n = 3; n <= 9; ++n) {
        CHECK(weights_additive(make_family(Family::NF, n, Q), WeightSystem::nf(n)));
        CHECK(weights_additive(make_family(Family::F1, n, Q), WeightSystem::f1(n)));
        CHECK(weights_additive(make_family(Family::F2, n, Q), WeightSystem::f2(n)));
        CHECK(WeightSystem::from_universal(fam(Family::NF, n)) == WeightSystem::nf(n));
    }
    CHECK_FALSE(weights_additive(make_family(Family::NF, 3, Q), WeightSystem::f1(3)));
}

TEST_CASE("torus elements form a subgroup") {
    const auto f = FieldSpec::prime(7);
    const auto w = WeightSystem::f1(5);
    const std::vector<Scalar> a{Scalar::from_int(f, 3), Scalar::from_int(f, 2)};
    const std::vector<Scalar> b{Scalar::from_int(f, 5), Scalar::from_int(f, 6)};
    const std::vector<Scalar> ab{a[0] * b[0], a[1] * b[1]};
    CHECK(torus_element(w, f, a) * torus_element(w, f, b) == torus_element(w, f, ab));
    CHECK(is_automorphism(make_family(Family::F1, 5, f), torus_element(w, f, a)));
    CHECK(torus_element(WeightSystem::nf(3), Q, {Scalar::from_int(Q, 2)}) == diag(Q, {2, 4, 8}));
    CHECK(torus_points(WeightSystem::nf(3), 3, 5).size() == 4);
    CHECK(torus_points(WeightSystem::f1(3), 3, 5).size() == 16);
}

TEST_CASE("toral gradings") {
    const auto z2 = AbelianGroup::cyclic(2), z3 = AbelianGroup::cyclic(3);
    CHECK(flat(toral_grading(fam(Family::NF, 4), WeightSystem::nf(4), {z2, {GroupElem{z2, {1}}}})) ==
          std::vector<std::int64_t>{1, 0, 1, 0});
    CHECK(flat(toral_grading(fam(Family::NF, 5), WeightSystem::nf(5), {z3, {GroupElem{z3, {1}}}})) ==
          std::vector<std::int64_t>{1, 2, 0, 1, 2});
    for (int n = 4; n <= 7; ++n) {
        const auto g = toral_grading(fam(Family::F1, n), WeightSystem::f1(n), {z2, {GroupElem{z2, {0}}, GroupElem{z2, {1}}}});
        std::vector<std::int64_t> expect(static_cast<std::size_t>(n), 1);
        expect[0] = 0;
        CHECK(flat(g) == expect);
    }
    CHECK(flat(weight_grading(fam(Family::F1, 4), WeightSystem::f1(4))) == std::vector<std::int64_t>{1, 0, 0, 1, 1, 1, 2, 1});
}

TEST_CASE("cyclic toral gradings of NF_5") {
    const auto nf5 = fam(Family::NF, 5);
    std::vector<AbelianGroup> menu{AbelianGroup::trivial(), AbelianGroup::integers()};
    for (int m = 2; m <= 4; ++m) menu.push_back(AbelianGroup::cyclic(m));
    const auto all = enumerate_toral_gradings(nf5, WeightSystem::nf(5), menu);
    REQUIRE(all.size() == 5);
    std::vector<Partition> parts;
    for (const auto& g : all) parts.push_back(g.partition());
    std::sort(parts.begin(), parts.end());
    std::vector<Partition> want{{{1, 2, 3, 4, 5}}, {{1}, {2}, {3}, {4}, {5}}, {{1, 3, 5}, {2, 4}}, {{1, 4}, {2, 5}, {3}}, {{1, 5}, {2}, {3}, {4}}};
    std::sort(want.begin(), want.end());
    CHECK(parts == want);
    CHECK(enumerate_toral_gradings(nf5, WeightSystem::nf(5), {AbelianGroup::trivial()}).size() == 1);
}

TEST_CASE("brute force automorphism counts") {
    const auto r = brute_force_aut(make_family(Family::NF, 3, FieldSpec::prime(5)));
    CHECK(r.count == 100);
    CHECK(r.all_in_family == true);
    CHECK(brute_force_aut(make_family(Family::F1, 3, FieldSpec::prime(3))).count == 36);
    CHECK(brute_force_aut(make_family(Family::NF, 2, FieldSpec::prime(2))).count == 2);
    BruteForceOptions serial;
    serial.parallel = false;
    CHECK(brute_force_aut(make_family(Family::NF, 2, FieldSpec::prime(3)), serial).count == 6);
    CHECK_FALSE(brute_force_aut(make_family(Family::F2, 3, FieldSpec::prime(2))).all_in_family.has_value());
    CHECK_THROWS_AS(brute_force_aut(make_family(Family::NF, 4, FieldSpec::prime(5))), BudgetExceeded);
    CHECK_THROWS_AS(brute_force_aut(make_family(Family::NF, 3, Q)), FieldMismatch);
}

TEST_CASE("normalizer of the maximal torus") {
    const auto a = normalizer_equals_torus(make_family(Family::NF, 3, FieldSpec::prime(5)));
    CHECK(a.equals_torus);
    CHECK(a.normalizer_size == 4);
    CHECK(normalizer_equals_torus(make_family(Family::NF, 4, FieldSpec::prime(3))).equals_torus);
    const auto c = normalizer_equals_torus(make_family(Family::F1, 3, FieldSpec::prime(5)));
    CHECK(c.equals_torus);
    CHECK(c.normalizer_size == 16);
}

TEST_CASE("toral case tables") {
    for (int n = 3; n <= 9; ++n) {
        const auto nf = fam(Family::NF, n);
        for (const auto& c : toral_case_table(Family::NF, n)) {
            INFO(c.label);
            CHECK(toral_grading(nf, WeightSystem::nf(n), c.specialization).degrees() == c.expected);
        }
    }
    for (int n = 4; n <= 8; ++n) {
        const auto f1 = fam(Family::F1, n);
        for (const auto& c : toral_case_table(Family::F1, n)) {
            INFO(c.label);
            CHECK(toral_grading(f1, WeightSystem::f1(n), c.specialization).degrees() == c.expected);
        }
    }
    CHECK_THROWS_AS(toral_case_table(Family::F2, 5), UnsupportedFamily);
}
