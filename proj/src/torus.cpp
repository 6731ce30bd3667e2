#include "gleib/torus.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace gleib {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

ResidueMatrix to_residues(const Matrix& m) {
    ResidueMatrix out;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.push_back(m(r, c).residue());
    return out;
}

// tuples over [lo, p) of the given length, first entry slowest
template <class Visit>
void for_each_tuple(int length, std::int64_t lo, std::int64_t p, Visit visit) {
    std::vector<std::int64_t> t(static_cast<std::size_t>(length), lo);
    while (true) {
        visit(t);
        int c = length - 1;
        while (c >= 0 && ++t[c] == p) t[c--] = lo;
        if (c < 0) return;
    }
}

std::optional<Family> detect_family(const Algebra& a) {
    if (a.label() == Family::NF || a.label() == Family::F1) return a.label();
    if (a.label() != Family::Custom) return std::nullopt;
    if (a.dim() >= 2 && a.same_structure(make_family(Family::NF, a.dim(), a.field()))) return Family::NF;
    if (a.dim() >= 3 && a.same_structure(make_family(Family::F1, a.dim(), a.field()))) return Family::F1;
    return std::nullopt;
}

WeightSystem weights_for(Family f, int n) {
    if (f == Family::NF) return WeightSystem::nf(n);
    if (f == Family::F1) return WeightSystem::f1(n);
    throw UnsupportedFamily("no torus weights for " + std::string{family_name(f)});
}

}  // namespace

Matrix aut_matrix_nf(int n, const AutParamsNF& params) {
    if (static_cast<int>(params.betas.size()) != n - 1) throw DimensionMismatch("NF automorphism needs n-1 betas");
    if (params.alpha.is_zero()) throw ZeroParameter("alpha must be nonzero");
    const FieldSpec f = params.alpha.field();
    Matrix m{f, n, n};
    for (int i = 1; i <= n; ++i) {
        m(i - 1, i - 1) = params.alpha.pow(i);
        for (int j = i + 1; j <= n; ++j) {
            m(j - 1, i - 1) = params.betas[static_cast<std::size_t>(n + i - j - 1)] * params.alpha.pow(j - n);
        }
    }
    return m;
}

Matrix aut_matrix_f1(int n, const AutParamsF1& params) {
    if (static_cast<int>(params.b.size()) != n - 1) throw DimensionMismatch("F1 automorphism needs b_2..b_n");
    if (params.a1.is_zero()) throw ZeroParameter("a_1 must be nonzero");
    if (params.b.front().is_zero()) throw ZeroParameter("b_2 must be nonzero");
    const FieldSpec f = params.a1.field();
    auto b = [&](int k) { return params.b[static_cast<std::size_t>(k - 2)]; };
    Matrix m{f, n, n};
    m(0, 0) = params.a1;
    m(n - 1, 0) = m(n - 1, 0) + params.an;
    for (int k = 2; k <= n; ++k) m(k - 1, 1) = b(k);
    for (int i = 3; i <= n; ++i) {
        const Scalar scale = params.a1.pow(i - 2);
        for (int k = i; k <= n; ++k) m(k - 1, i - 1) = scale * b(k - i + 2);
    }
    return m;
}

bool is_automorphism(const Algebra& a, const Matrix& m) {
    const int n = a.dim();
    if (m.rows() != n || m.cols() != n || !(m.field() == a.field())) return false;
    if (rank(m) != n) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Vector lhs = zero_vector(a.field(), n);
            for (const auto& t : a.bracket(i, j)) {
                for (int r = 0; r < n; ++r) lhs[r] += t.c * m(r, t.k - 1);
            }
            if (!(lhs == product(a, m.column(i - 1), m.column(j - 1)))) return false;
        }
    return true;
}

WeightSystem WeightSystem::nf(int n) {
    WeightSystem w{1, {}};
    for (int i = 1; i <= n; ++i) w.weights.push_back({i});
    return w;
}

WeightSystem WeightSystem::f1(int n) {
    WeightSystem w{2, {{1, 0}, {0, 1}}};
    for (int i = 3; i <= n; ++i) w.weights.push_back({i - 2, 1});
    return w;
}

WeightSystem WeightSystem::f2(int n) {
    WeightSystem w{2, {}};
    for (int i = 1; i < n; ++i) w.weights.push_back({i, 0});
    w.weights.push_back({0, 1});
    return w;
}

std::optional<WeightSystem> WeightSystem::from_universal(const AlgebraPtr& a) {
    auto u = universal_grading(a, discrete_partition(a->dim()));
    if (!u || !u->group.torsion().empty()) return std::nullopt;
    WeightSystem w{u->group.free_rank(), {}};
    for (const auto& d : u->grading.degrees()) w.weights.push_back(d.coords());
    return w;
}

bool weights_additive(const Algebra& a, const WeightSystem& w) {
    for (const auto& [key, terms] : a.structure_constants()) {
        for (const auto& t : terms) {
            const auto& wi = w.weights[static_cast<std::size_t>(key.first - 1)];
            const auto& wj = w.weights[static_cast<std::size_t>(key.second - 1)];
            const auto& wk = w.weights[static_cast<std::size_t>(t.k - 1)];
            for (int s = 0; s < w.rank; ++s) {
                if (wi[s] + wj[s] != wk[s]) return false;
            }
        }
    }
    return true;
}

Matrix torus_element(const WeightSystem& w, FieldSpec field, const std::vector<Scalar>& lambdas) {
    if (static_cast<int>(lambdas.size()) != w.rank) throw DimensionMismatch("one parameter per torus coordinate");
    for (const auto& l : lambdas) {
        if (l.is_zero()) throw ZeroParameter("torus parameters must be nonzero");
    }
    const int n = static_cast<int>(w.weights.size());
    Matrix m{field, n, n};
    for (int i = 0; i < n; ++i) {
        Scalar d = Scalar::one(field);
        for (int s = 0; s < w.rank; ++s) d *= lambdas[s].pow(w.weights[i][s]);
        m(i, i) = d;
    }
    return m;
}

Grading weight_grading(const AlgebraPtr& a, const WeightSystem& w) {
    const AbelianGroup z = AbelianGroup::integers(w.rank);
    std::vector<GroupElem> degrees;
    for (const auto& wi : w.weights) degrees.emplace_back(z, wi);
    return Grading{a, z, std::move(degrees)};
}

Grading toral_grading(const AlgebraPtr& a, const WeightSystem& w, const Specialization& s) {
    if (static_cast<int>(s.images.size()) != w.rank) throw DimensionMismatch("one image per torus coordinate");
    return coarsen(weight_grading(a, w), Homomorphism{AbelianGroup::integers(w.rank), s.target, s.images});
}

std::vector<Grading> enumerate_toral_gradings(const AlgebraPtr& a, const WeightSystem& w,
                                              const std::vector<AbelianGroup>& menu) {
    return enumerate_coarsenings(weight_grading(a, w), menu, a->dim());
}

std::vector<ResidueMatrix> automorphism_family(Family family, int n, std::int64_t p) {
    const FieldSpec f = FieldSpec::prime(p);
    auto s = [&](std::int64_t v) { return Scalar::from_int(f, v); };
    std::vector<ResidueMatrix> out;
    if (family == Family::NF) {
        for (std::int64_t alpha = 1; alpha < p; ++alpha) {
            for_each_tuple(n - 1, 0, p, [&](const std::vector<std::int64_t>& t) {
                AutParamsNF params{s(alpha), {}};
                for (auto v : t) params.betas.push_back(s(v));
                out.push_back(to_residues(aut_matrix_nf(n, params)));
            });
        }
    } else if (family == Family::F1) {
        for (std::int64_t a1 = 1; a1 < p; ++a1)
            for (std::int64_t an = 0; an < p; ++an)
                for (std::int64_t b2 = 1; b2 < p; ++b2) {
                    for_each_tuple(n - 2, 0, p, [&](const std::vector<std::int64_t>& t) {
                        AutParamsF1 params{s(a1), s(an), {s(b2)}};
                        for (auto v : t) params.b.push_back(s(v));
                        out.push_back(to_residues(aut_matrix_f1(n, params)));
                    });
                }
    } else {
        throw UnsupportedFamily("no automorphism parametrization for " + std::string{family_name(family)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ResidueMatrix> torus_points(const WeightSystem& w, int n, std::int64_t p) {
    std::vector<ResidueMatrix> out;
    for_each_tuple(w.rank, 1, p, [&](const std::vector<std::int64_t>& lambdas) {
        ResidueMatrix m(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) {
            std::int64_t d = 1;
            for (int s = 0; s < w.rank; ++s) {
                const std::int64_t e = w.weights[i][s];
                const std::int64_t base = e < 0 ? mod_inv(lambdas[s], p) : lambdas[s];
                d = mod_mul(d, mod_pow(base, e < 0 ? -e : e, p), p);
            }
            m[i * n + i] = d;
        }
        out.push_back(std::move(m));
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BruteForceReport brute_force_aut(const Algebra& a, const BruteForceOptions& options) {
    const auto start = Clock::now();
    const PrimeStructure s = PrimeStructure::from_algebra(a);
    const BigInt required = boost::multiprecision::pow(BigInt{s.p}, static_cast<unsigned>(s.n * s.n));
    if (required > options.budget) {
        throw BudgetExceeded("brute force needs " + required.str() + " matrices, budget is " + std::to_string(options.budget));
    }
    Deadline deadline;
    if (options.budget_ms) deadline = start + std::chrono::milliseconds(*options.budget_ms);
    BruteForceReport report;
    report.automorphisms = options.parallel ? automorphisms_parallel(s, deadline) : automorphisms_serial(s, deadline);
    report.count = report.automorphisms.size();
    if (auto family = detect_family(a)) {
        const auto expected = automorphism_family(*family, s.n, s.p);
        report.family_size = expected.size();
        report.all_in_family = expected == report.automorphisms;
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

namespace {

// Diagonal character chi_r of M T(lambda) M^-1, or nullopt when the
// conjugate is not diagonal with monomial entries of coefficient 1.
std::optional<std::vector<std::vector<std::int64_t>>> conjugate_characters(const ResidueMatrix& m, const ResidueMatrix& inv,
                                                                           const WeightSystem& w, int n, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> chi(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::map<std::vector<std::int64_t>, std::int64_t> poly;
            for (int i = 0; i < n; ++i) {
                const std::int64_t x = mod_mul(m[r * n + i], inv[i * n + c], p);
                if (x != 0) poly[w.weights[i]] = mod_reduce(poly[w.weights[i]] + x, p);
            }
            std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
            if (r != c) {
                if (!poly.empty()) return std::nullopt;
            } else {
                if (poly.size() != 1 || poly.begin()->second != 1) return std::nullopt;
                chi[r] = poly.begin()->first;
            }
        }
    return chi;
}

bool formal_normalizes(const ResidueMatrix& m, const WeightSystem& w, const std::vector<int>& unit_index, int n,
                       std::int64_t p) {
    auto inv = inverse_mod_p(m, n, p);
    if (!inv) return false;
    auto chi = conjugate_characters(m, *inv, w, n, p);
    if (!chi) return false;
    // chi must be a linear function of the weights
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < w.rank; ++s) {
            std::int64_t expect = 0;
            for (int t = 0; t < w.rank; ++t) expect += w.weights[r][t] * (*chi)[unit_index[t]][s];
            if ((*chi)[r][s] != expect) return false;
        }
    return true;
}

bool field_points_normalize(const ResidueMatrix& m, const std::vector<ResidueMatrix>& torus, int n, std::int64_t p) {
    auto inv = inverse_mod_p(m, n, p);
    if (!inv) return false;
    for (const auto& t : torus) {
        const ResidueMatrix c = multiply_mod_p(multiply_mod_p(m, t, n, p), *inv, n, p);
        if (!std::binary_search(torus.begin(), torus.end(), c)) return false;
    }
    return true;
}

}  // namespace

NormalizerReport normalizer_equals_torus(const Algebra& a, NormalizerMode mode, const BruteForceOptions& options) {
    const auto start = Clock::now();
    if (!a.field().is_prime_field()) throw FieldMismatch("normalizer check needs a prime field");
    auto family = detect_family(a);
    if (!family) throw UnsupportedFamily("normalizer check supports NF and F1 only");
    const int n = a.dim();
    const std::int64_t p = a.field().characteristic();
    const WeightSystem w = weights_for(*family, n);

    NormalizerReport report;
    std::vector<ResidueMatrix> candidates;
    if (n <= 3) {
        candidates = brute_force_aut(a, options).automorphisms;
        report.source = "brute-force";
    } else {
        candidates = automorphism_family(*family, n, p);
        report.source = "family";
    }
    const auto torus = torus_points(w, n, p);

    std::vector<int> unit_index(static_cast<std::size_t>(w.rank), -1);
    for (int s = 0; s < w.rank; ++s) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(w.rank), 0);
        e[s] = 1;
        for (int i = 0; i < n; ++i) {
            if (w.weights[i] == e) unit_index[s] = i;
        }
        if (unit_index[s] < 0) throw UnsupportedFamily("torus weights lack a unit vector");
    }

    std::vector<ResidueMatrix> normalizer;
    for (const auto& m : candidates) {
        const bool keep = mode == NormalizerMode::Formal ? formal_normalizes(m, w, unit_index, n, p)
                                                         : field_points_normalize(m, torus, n, p);
        if (keep) normalizer.push_back(m);
    }
    report.candidates = candidates.size();
    report.normalizer_size = normalizer.size();
    report.torus_size = torus.size();
    report.equals_torus = normalizer == torus;
    report.elapsed_ms = ms_since(start);
    return report;
}

namespace {

GroupElem el(const AbelianGroup& g, std::vector<std::int64_t> coords) { return GroupElem{g, std::move(coords)}; }

struct Expected {
    AbelianGroup group;
    std::vector<std::optional<GroupElem>> slots;

    Expected(AbelianGroup g, int n) : group{std::move(g)}, slots(static_cast<std::size_t>(n)) {}

    void put(int index, std::vector<std::int64_t> coords) {
        auto& s = slots[static_cast<std::size_t>(index - 1)];
        if (s) throw InvalidGrading("case table lists e_" + std::to_string(index) + " twice");
        s = el(group, std::move(coords));
    }
    // <e_first, e_{first+step}, ..., e_last>_label
    void progression(int first, int last, int step, std::vector<std::int64_t> label) {
        for (int j = first; j <= last && j <= static_cast<int>(slots.size()); j += step) put(j, label);
    }
    std::vector<GroupElem> done() const {
        std::vector<GroupElem> out;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (!slots[i]) throw InvalidGrading("case table misses e_" + std::to_string(i + 1));
            out.push_back(*slots[i]);
        }
        return out;
    }
};

std::vector<ToralCase> nf_cases(int n) {
    std::vector<ToralCase> out;
    const AbelianGroup z = AbelianGroup::integers();
    {
        Expected e{z, n};
        for (int j = 1; j <= n; ++j) e.put(j, {j});
        out.push_back({"alpha generic", {z, {el(z, {1})}}, e.done()});
    }
    {
        const AbelianGroup t = AbelianGroup::trivial();
        Expected e{t, n};
        e.progression(1, n, 1, {});
        out.push_back({"alpha=1", {t, {el(t, {})}}, e.done()});
    }
    {
        const AbelianGroup z2 = AbelianGroup::cyclic(2);
        Expected e{z2, n};
        if (n % 2 == 0) {
            e.progression(1, n - 1, 2, {1});
            e.progression(2, n, 2, {0});
        } else {
            e.progression(1, n, 2, {1});
            e.progression(2, n - 1, 2, {0});
        }
        out.push_back({n % 2 == 0 ? "alpha=-1, n even" : "alpha=-1, n odd", {z2, {el(z2, {1})}}, e.done()});
    }
    {
        const AbelianGroup z3 = AbelianGroup::cyclic(3);
        Expected e{z3, n};
        std::string label;
        if (n % 3 == 0) {
            e.progression(1, n - 2, 3, {1});
            e.progression(2, n - 1, 3, {2});
            e.progression(3, n, 3, {0});
            label = "alpha=xi, n=3m";
        } else if (n % 3 == 2) {
            e.progression(1, n - 1, 3, {1});
            e.progression(2, n, 3, {2});
            e.progression(3, n - 2, 3, {0});
            label = "alpha=xi, n=3m-1";
        } else {
            e.progression(1, n, 3, {1});
            e.progression(2, n - 2, 3, {2});
            e.progression(3, n - 1, 3, {0});
            label = "alpha=xi, n=3m-2";
        }
        out.push_back({label, {z3, {el(z3, {1})}}, e.done()});
    }
    for (int i = 2; i < n; ++i) {
        const AbelianGroup zi = AbelianGroup::cyclic(i);
        Expected e{zi, n};
        for (int r = 1; r < i; ++r) e.progression(r, n, i, {r});
        e.progression(i, n, i, {0});
        out.push_back({"alpha of order " + std::to_string(i), {zi, {el(zi, {1})}}, e.done()});
    }
    return out;
}

std::vector<ToralCase> f1_cases(int n) {
    std::vector<ToralCase> out;
    const AbelianGroup z = AbelianGroup::integers();
    const AbelianGroup z2 = AbelianGroup::cyclic(2);
    const AbelianGroup triv = AbelianGroup::trivial();
    auto spec = [](const AbelianGroup& g, std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
        return Specialization{g, {el(g, std::move(a)), el(g, std::move(b))}};
    };
    {
        Expected e{triv, n};
        e.progression(1, n, 1, {});
        out.push_back({"(1.1)", spec(triv, {}, {}), e.done()});
    }
    for (int i = 2; i < n; ++i) {
        const AbelianGroup zi = AbelianGroup::cyclic(i);
        Expected e{zi, n};
        e.put(1, {1});
        for (int r = 2; r <= i + 1; ++r) e.progression(r, n, i, {r - 1});
        out.push_back({"(1.2) i=" + std::to_string(i), spec(zi, {1}, {1}), e.done()});
    }
    {
        Expected e{z, n};
        e.put(1, {1});
        e.put(2, {1});
        for (int j = 3; j <= n; ++j) e.put(j, {j - 1});
        out.push_back({"(1.3)", spec(z, {1}, {1}), e.done()});
    }
    {
        Expected e{z2, n};
        e.put(1, {0});
        e.progression(2, n, 1, {1});
        out.push_back({"(2.1)", spec(z2, {0}, {1}), e.done()});
    }
    {
        Expected e{z2, n};
        e.progression(2, n, 2, {0});
        e.put(1, {1});
        e.progression(3, n, 2, {1});
        out.push_back({"(2.2)", spec(z2, {1}, {0}), e.done()});
    }
    {
        const AbelianGroup zz2 = AbelianGroup::integers_times_cyclic(2);
        Expected e{zz2, n};
        e.put(1, {0, 1});
        e.progression(2, n, 2, {1, 0});
        e.progression(3, n, 2, {1, 1});
        out.push_back({"(2.3)", spec(zz2, {0, 1}, {1, 0}), e.done()});
    }
    for (int i = 3; i <= n - 2; ++i) {
        const AbelianGroup zi = AbelianGroup::cyclic(i);
        Expected e{zi, n};
        e.put(1, {1});
        for (int r = 2; r <= i + 1; ++r) e.progression(r, n, i, {r - 2});
        out.push_back({"(2.4.1)(a) i=" + std::to_string(i), spec(zi, {1}, {0}), e.done()});
    }
    {
        Expected e{z, n};
        e.put(2, {0});
        e.put(1, {1});
        e.put(3, {1});
        for (int j = 4; j <= n; ++j) e.put(j, {j - 2});
        out.push_back({"(2.4.1)(b)", spec(z, {1}, {0}), e.done()});
    }
    for (int k : {2 - n, 2, n}) {
        Expected e{z, n};
        e.put(1, {1});
        for (int j = 2; j <= n; ++j) e.put(j, {k + j - 2});
        out.push_back({"(2.4.2)(A) k=" + std::to_string(k), spec(z, {1}, {k}), e.done()});
    }
    for (int i = 3; i <= n - 3; ++i) {
        const AbelianGroup zzi = AbelianGroup::integers_times_cyclic(i);
        Expected e{zzi, n};
        e.put(1, {0, 1});
        for (int r = 2; r <= i + 1; ++r) e.progression(r, n, i, {1, r - 2});
        out.push_back({"(2.4.2)(B) i=" + std::to_string(i), spec(zzi, {0, 1}, {1, 0}), e.done()});
    }
    for (int i = 4; i <= n; ++i) {
        // e_3 sits in degree 4-i; the listed 2-i does not fit the progression
        Expected e{z, n};
        e.put(2, {3 - i});
        e.put(1, {1});
        for (int j = 3; j <= n; ++j) e.put(j, {j + 1 - i});
        out.push_back({"(2.4.2)(C) i=" + std::to_string(i), spec(z, {1}, {3 - i}), e.done()});
    }
    for (int i = 3; i <= n; ++i)
        for (int l = 3; l + i <= n; ++l) {
            if ((l - 3) % i == 0) continue;
            const int k = l + i;
            const AbelianGroup zi = AbelianGroup::cyclic(i);
            Expected e{zi, n};
            e.put(1, {1});
            for (int j = 2; j <= n; ++j) e.put(j, {j - k + 1});
            out.push_back({"(2.4.2)(D) i=" + std::to_string(i) + " l=" + std::to_string(l), spec(zi, {1}, {3 - l}), e.done()});
        }
    return out;
}

}  // namespace

std::vector<ToralCase> toral_case_table(Family family, int n) {
    if (family == Family::NF && n >= 3) return nf_cases(n);
    if (family == Family::F1 && n >= 4) return f1_cases(n);
    throw UnsupportedFamily("no toral case table for " + std::string{family_name(family)} + " at n=" + std::to_string(n));
}

}  // namespace gleib
