// Acceptance checks AC1..AC10. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails. All comparisons are exact.
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "gleib/enumerator.hpp"
#include "gleib/smith.hpp"
#include "gleib/torus.hpp"

using namespace gleib;

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t).count();
}

struct Criterion {
    bool ok = true;
    int checks = 0;
    std::string first_failure;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) first_failure = what;
        ok = ok && cond;
    }
};

AlgebraPtr ptr(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

std::string tag(Family f, int n, const FieldSpec& field) {
    return std::string{family_name(f)} + "_" + std::to_string(n) + "/" + field.name();
}

// Leibniz identity on basis triples through product(), independent of the
// structure-constant loop in check_leibniz.
bool leibniz_oracle(const Algebra& a) {
    const int n = a.dim();
    const auto& f = a.field();
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z) {
                const Vector ex = unit_vector(f, n, x), ey = unit_vector(f, n, y), ez = unit_vector(f, n, z);
                const Vector lhs = product(a, ex, product(a, ey, ez));
                const Vector r1 = product(a, product(a, ex, ey), ez);
                const Vector r2 = product(a, product(a, ex, ez), ey);
                for (int k = 0; k < n; ++k)
                    if (lhs[k] != r1[k] - r2[k]) return false;
            }
    return true;
}

Criterion ac1() {
    Criterion c;
    for (const FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
        std::vector<std::pair<Family, int>> list;
        for (int n = 2; n <= 12; ++n) {
            list.emplace_back(Family::NF, n);
            if (n >= 3) {
                list.emplace_back(Family::F1, n);
                list.emplace_back(Family::F2, n);
                list.emplace_back(Family::LieL, n);
            }
            if (n >= 4 && n % 2 == 0) list.emplace_back(Family::LieQ, n);
        }
        for (const auto& [fam, n] : list) {
            const auto start = Clock::now();
            const Algebra a = make_family(fam, n, f);
            const bool ok = check_leibniz(a).ok;
            const std::int64_t ms = ms_since(start);
            c.expect(ok && leibniz_oracle(a), "Leibniz " + tag(fam, n, f));
            c.expect(ms < 1000, "runtime " + tag(fam, n, f));
            if (fam == Family::LieL || fam == Family::LieQ) {
                bool anti = true;
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        const Vector x = product(a, unit_vector(f, n, i), unit_vector(f, n, j));
                        const Vector y = product(a, unit_vector(f, n, j), unit_vector(f, n, i));
                        for (int k = 0; k < n; ++k) anti = anti && x[k] == -y[k];
                    }
                c.expect(anti && is_anticommutative(a), "antisymmetry " + tag(fam, n, f));
            }
        }
    }
    return c;
}

Criterion ac2() {
    Criterion c;
    const auto Q = FieldSpec::rationals();
    for (int n = 2; n <= 12; ++n) {
        std::vector<int> nf;
        for (int i = 1; i <= n + 1; ++i) nf.push_back(n + 1 - i);
        c.expect(nilpotency_profile(make_family(Family::NF, n, Q)).series_dims == nf, "NF_" + std::to_string(n));
        if (n < 3) continue;
        std::vector<int> fil{n};
        for (int k = n - 2; k >= 0; --k) fil.push_back(k);
        c.expect(nilpotency_profile(make_family(Family::F1, n, Q)).series_dims == fil, "F1_" + std::to_string(n));
        c.expect(nilpotency_profile(make_family(Family::F2, n, Q)).series_dims == fil, "F2_" + std::to_string(n));
    }
    return c;
}

Criterion ac3() {
    Criterion c;
    const auto Q = FieldSpec::rationals();
    for (int n = 2; n <= 10; ++n) {
        const Algebra a = make_family(Family::NF, n, Q);
        c.expect(center(a) == Subspace::span(Q, n, {unit_vector(Q, n, n)}), "center NF_" + std::to_string(n));
        std::vector<Vector> tail;
        for (int i = 2; i <= n; ++i) tail.push_back(unit_vector(Q, n, i));
        c.expect(right_annihilator(a) == Subspace::span(Q, n, tail), "annihilator NF_" + std::to_string(n));
    }
    return c;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Criterion ac4() {
    Criterion c;
    struct Case {
        Family f;
        int n;
        std::int64_t p;
    };
    std::vector<Case> cases;
    for (std::int64_t p : {2, 3, 5}) {
        cases.push_back({Family::NF, 2, p});
        cases.push_back({Family::NF, 3, p});
        cases.push_back({Family::F1, 3, p});
    }
    cases.push_back({Family::NF, 4, 3});
    cases.push_back({Family::F1, 4, 3});
    for (const auto& k : cases) {
        const auto f = FieldSpec::prime(k.p);
        const auto start = Clock::now();
        const auto r = brute_force_aut(make_family(k.f, k.n, f));
        const std::int64_t ms = ms_since(start);
        const auto q = static_cast<std::uint64_t>(k.p);
        const std::uint64_t predicted = (k.f == Family::NF ? (q - 1) : (q - 1) * (q - 1)) * ipow(q, k.n - 1);
        c.expect(r.count == predicted, "count " + tag(k.f, k.n, f));
        c.expect(r.all_in_family == true, "family " + tag(k.f, k.n, f));
        c.expect(ms < 120000, "runtime " + tag(k.f, k.n, f));
    }
    return c;
}

Criterion ac5() {
    Criterion c;
    for (std::int64_t p : {3, 5}) {
        const auto f = FieldSpec::prime(p);
        for (int n = 2; n <= 5; ++n) {
            c.expect(normalizer_equals_torus(make_family(Family::NF, n, f)).equals_torus, tag(Family::NF, n, f));
            if (n >= 3) c.expect(normalizer_equals_torus(make_family(Family::F1, n, f)).equals_torus, tag(Family::F1, n, f));
        }
    }
    return c;
}

Criterion ac6() {
    Criterion c;
    const auto Q = FieldSpec::rationals();
    auto run = [&](Family fam, int n, const WeightSystem& w) {
        const auto a = ptr(make_family(fam, n, Q));
        for (const auto& tc : toral_case_table(fam, n)) {
            const Grading got = toral_grading(a, w, tc.specialization);
            const Grading want{a, tc.specialization.target, tc.expected};
            const std::string what = tag(fam, n, Q) + " " + tc.label;
            c.expect(verify_grading(got).ok, what + " closed");
            c.expect(got.degrees() == tc.expected, what + " degrees");
            c.expect(canonical_form(got) == canonical_form(want), what + " canonical");
        }
    };
    for (int n = 3; n <= 9; ++n) run(Family::NF, n, WeightSystem::nf(n));
    for (int n = 4; n <= 8; ++n) run(Family::F1, n, WeightSystem::f1(n));
    return c;
}

Criterion ac7() {
    Criterion c;
    const auto Q = FieldSpec::rationals();
    const auto start = Clock::now();
    auto run = [&](Family fam, int lo, int hi) {
        for (int n = lo; n <= hi; ++n) {
            const auto a = ptr(make_family(fam, n, Q));
            const auto e = enumerate_h1_gradings(a, Hypothesis::FamilyDefault, standard_menu(n));
            const auto r = compare(e.gradings, catalog(fam, n));
            std::ostringstream what;
            what << tag(fam, n, Q) << " missing=" << r.missing.size() << " extra=" << r.extra.size();
            c.expect(r.passed(), what.str());
        }
    };
    run(Family::NF, 2, 8);
    run(Family::F2, 3, 7);
    run(Family::F1, 3, 6);
    c.expect(ms_since(start) < 300000, "runtime");
    return c;
}

Criterion ac8() {
    Criterion c;
    const auto Q = FieldSpec::rationals();
    for (int n = 3; n <= 7; ++n) {
        const Algebra sum = direct_sum(make_family(Family::NF, n - 1, Q), abelian(1, Q));
        const Algebra f2 = make_family(Family::F2, n, Q);
        c.expect(sum.structure_constants() == f2.structure_constants() && sum.dim() == n, "structure n=" + std::to_string(n));
        std::vector<Grading> lifted;
        for (const auto& e : catalog(Family::NF, n - 1))
            for (const auto& l : lift_direct_sum_gradings(e.grading)) lifted.push_back(l.grading);
        const auto r = compare(lifted, catalog(Family::F2, n));
        c.expect(r.passed(), "lift n=" + std::to_string(n));
    }
    return c;
}

// Degrees of the universal grading as integer rows, checked to be the given
// weights times a unimodular matrix read off at the rows `basis`.
bool same_up_to_unimodular(const Grading& g, const WeightSystem& w, const std::vector<int>& basis) {
    const int r = w.rank;
    if (g.group() != AbelianGroup::integers(r)) return false;
    IntMatrix u(r, r);
    for (int t = 0; t < r; ++t) {
        const auto& row = w.weights[static_cast<std::size_t>(basis[t] - 1)];
        for (int s = 0; s < r; ++s)
            if (row[s] != (s == t ? 1 : 0)) return false;
        for (int s = 0; s < r; ++s) u(t, s) = g.degree(basis[t]).coords()[s];
    }
    if (!is_unimodular(u)) return false;
    for (int i = 1; i <= g.algebra().dim(); ++i)
        for (int s = 0; s < r; ++s) {
            BigInt v = 0;
            for (int t = 0; t < r; ++t) v += BigInt(w.weights[i - 1][t]) * u(t, s);
            if (v != g.degree(i).coords()[s]) return false;
        }
    return true;
}

Criterion ac9() {
    Criterion c;
    const auto Q = FieldSpec::rationals();
    for (int n = 3; n <= 12; ++n) {
        const std::string sn = std::to_string(n);
        WeightSystem nf{1, {}}, f1{2, {}}, f2{2, {}};
        for (int i = 1; i <= n; ++i) nf.weights.push_back({i});
        f1.weights = {{1, 0}, {0, 1}};
        for (int i = 3; i <= n; ++i) f1.weights.push_back({i - 2, 1});
        for (int i = 1; i < n; ++i) f2.weights.push_back({i, 0});
        f2.weights.push_back({0, 1});
        c.expect(nf == WeightSystem::nf(n) && f1 == WeightSystem::f1(n) && f2 == WeightSystem::f2(n), "weights n=" + sn);

        const auto unf = universal_grading(ptr(make_family(Family::NF, n, Q)), discrete_partition(n));
        const auto uf1 = universal_grading(ptr(make_family(Family::F1, n, Q)), discrete_partition(n));
        const auto uf2 = universal_grading(ptr(make_family(Family::F2, n, Q)), discrete_partition(n));
        c.expect(unf && uf1 && uf2, "exists n=" + sn);
        if (!unf || !uf1 || !uf2) continue;
        bool literal = unf->group == AbelianGroup::integers();
        for (int i = 1; i <= n; ++i) literal = literal && unf->grading.degree(i).coords() == std::vector<std::int64_t>{i};
        c.expect(literal, "NF literal n=" + sn);
        c.expect(same_up_to_unimodular(unf->grading, nf, {1}), "NF n=" + sn);
        c.expect(same_up_to_unimodular(uf1->grading, f1, {1, 2}), "F1 n=" + sn);
        c.expect(same_up_to_unimodular(uf2->grading, f2, {1, n}), "F2 n=" + sn);
    }
    return c;
}

Criterion ac10() {
    Criterion c;
    std::mt19937_64 rng{20240611};
    std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
    for (int t = 0; t < 1000; ++t) {
        const int rows = dim(rng), cols = dim(rng);
        IntMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = val(rng);
        const auto s = smith_normal_form(m);
        bool ok = is_unimodular(s.U) && is_unimodular(s.V) && s.U * m * s.V == s.D;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (i != j && s.D(i, j) != 0) ok = false;
        const int k = std::min(rows, cols);
        for (int i = 0; i < k; ++i) {
            if (s.D(i, i) < 0) ok = false;
            if (i + 1 < k && s.D(i, i) != 0 && s.D(i + 1, i + 1) % s.D(i, i) != 0) ok = false;
            if (i + 1 < k && s.D(i, i) == 0 && s.D(i + 1, i + 1) != 0) ok = false;
        }
        c.expect(ok, "SNF sample " + std::to_string(t));
    }

    const auto Q = FieldSpec::rationals();
    const std::vector<AlgebraPtr> algebras{ptr(make_family(Family::NF, 5, Q)), ptr(make_family(Family::F1, 5, Q)),
                                           ptr(make_family(Family::F2, 5, Q)), ptr(make_family(Family::NF, 6, Q))};
    std::uniform_int_distribution<std::int64_t> coef(-3, 3);
    for (const auto& a : algebras) {
        const auto u = universal_grading(a, discrete_partition(a->dim()));
        c.expect(u.has_value(), "universal");
        if (!u) continue;
        const auto menu = standard_menu(a->dim());
        std::uniform_int_distribution<std::size_t> pick(0, menu.size() - 1);
        std::vector<Grading> gs;
        for (int t = 0; t < 50; ++t) {
            const auto& target = menu[pick(rng)];
            Homomorphism phi{u->group, target, {}};
            for (int g = 0; g < u->group.arity(); ++g) {
                std::vector<std::int64_t> coords;
                for (int s = 0; s < target.arity(); ++s) coords.push_back(coef(rng));
                phi.images.emplace_back(target, coords);
            }
            gs.push_back(coarsen(u->grading, phi));
            c.expect(verify_grading(gs.back()).ok, "coarsening verifies");
        }
        const std::size_t m = gs.size();
        std::vector<std::vector<char>> eq(m, std::vector<char>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) eq[i][j] = equivalent(gs[i], gs[j]);
        for (std::size_t i = 0; i < m; ++i) {
            c.expect(eq[i][i], "reflexive");
            for (std::size_t j = 0; j < m; ++j) {
                c.expect(eq[i][j] == eq[j][i], "symmetric");
                if (!eq[i][j]) continue;
                for (std::size_t k = 0; k < m; ++k)
                    if (eq[j][k]) c.expect(eq[i][k], "transitive");
            }
        }
    }
    return c;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Criterion (*run)();
    };
    const Entry all[] = {{"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
                         {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
    int failed = 0;
    for (const auto& e : all) {
        const auto start = Clock::now();
        Criterion c;
        try {
            c = e.run();
        } catch (const std::exception& ex) {
            c.ok = false;
            c.first_failure = std::string{"exception: "} + ex.what();
        }
        const std::int64_t ms = ms_since(start);
        if (c.ok) {
            std::printf("%s PASS checks=%d elapsed_ms=%lld\n", e.name, c.checks, static_cast<long long>(ms));
        } else {
            ++failed;
            std::printf("%s FAIL checks=%d elapsed_ms=%lld first_failure=%s\n", e.name, c.checks, static_cast<long long>(ms),
                        c.first_failure.c_str());
        }
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
