#include "gleib/enumerator.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gleib {

std::vector<int> propagate_homogeneity(const Algebra& a, std::vector<int> generators) {
    std::set<int> h(generators.begin(), generators.end());
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [key, terms] : a.structure_constants()) {
            if (terms.size() == 1 && h.count(key.first) && h.count(key.second) && h.insert(terms.front().k).second) grew = true;
        }
    }
    return {h.begin(), h.end()};
}

std::vector<AbelianGroup> standard_menu(int n) {
    std::vector<AbelianGroup> menu{AbelianGroup::trivial(), AbelianGroup::integers()};
    for (int i = 2; i <= n; ++i) menu.push_back(AbelianGroup::cyclic(i));
    for (int i = 2; i <= n - 1; ++i) menu.push_back(AbelianGroup::integers_times_cyclic(i));
    return menu;
}

H1Enumeration enumerate_h1_gradings(const AlgebraPtr& a, Hypothesis hypothesis, const std::vector<AbelianGroup>& menu) {
    const int n = a->dim();
    H1Enumeration out;
    switch (hypothesis) {
        case Hypothesis::E1Homogeneous:
            out.generators = {1};
            break;
        case Hypothesis::E1E2Homogeneous:
            out.generators = {1, 2};
            break;
        case Hypothesis::FamilyDefault:
            switch (a->label()) {
                case Family::NF:
                    out.generators = {1};
                    break;
                case Family::F1:
                case Family::LieL:
                case Family::LieQ:
                    out.generators = {1, 2};
                    break;
                case Family::F2:
                    out.generators = {1, n};
                    out.assumed_homogeneous = {n};
                    break;
                case Family::Custom:
                    throw UnsupportedFamily("custom algebras need an explicit homogeneity hypothesis");
            }
            break;
    }
    for (int g : out.generators) {
        if (g < 1 || g > n) throw UnsupportedFamily("hypothesis names e_" + std::to_string(g) + " outside the basis");
    }
    const auto homogeneous = propagate_homogeneity(*a, out.generators);
    if (static_cast<int>(homogeneous.size()) != n) {
        throw UnsupportedFamily("hypothesis does not make every basis vector homogeneous");
    }
    auto universal = universal_grading(a, discrete_partition(n));
    if (!universal) throw InvalidGrading("discrete partition has no universal grading");
    out.gradings = enumerate_coarsenings(universal->grading, menu, n);
    return out;
}

namespace {

GroupElem el(const AbelianGroup& g, std::vector<std::int64_t> coords) { return GroupElem{g, std::move(coords)}; }

struct Builder {
    Family family;
    int n;
    AlgebraPtr algebra;
    std::vector<CatalogEntry> out;

    template <class Degree>
    void add(std::string item, std::string params, const AbelianGroup& g, Degree degree, std::string note = {}) {
        std::vector<GroupElem> d;
        for (int j = 1; j <= n; ++j) d.push_back(el(g, degree(j)));
        out.push_back({family, n, std::move(item), std::move(params), std::move(note), Grading{algebra, g, std::move(d)}});
    }
};

using Coords = std::vector<std::int64_t>;

void nf_catalog(Builder& b) {
    const int n = b.n;
    b.add("(1)", "", AbelianGroup::trivial(), [](int) { return Coords{}; });
    b.add("(2)", "", AbelianGroup::integers(), [](int j) { return Coords{j}; });
    for (int i = 2; i < n; ++i) {
        b.add("(3)", "i=" + std::to_string(i), AbelianGroup::cyclic(i), [i](int j) { return Coords{j % i}; });
    }
}

void f1_catalog(Builder& b) {
    const int n = b.n;
    b.add("(1)", "", AbelianGroup::trivial(), [](int) { return Coords{}; });
    b.add("(2)", "", AbelianGroup::cyclic(2), [](int j) { return Coords{j == 1 ? 0 : 1}; });
    for (int k = 3 - n; k <= 2; ++k) {
        b.add("(3)", "k=" + std::to_string(k), AbelianGroup::integers(),
              [k](int j) { return Coords{j == 1 ? 1 : k + j - 2}; });
    }
    for (int i = 2; i < n; ++i)
        for (int k = 2; k <= i + 1; ++k) {
            b.add("(4)", "i=" + std::to_string(i) + " k=" + std::to_string(k), AbelianGroup::cyclic(i),
                  [k](int j) { return Coords{j == 1 ? 1 : j - k + 1}; });
        }
    for (int i = 2; i < n; ++i) {
        b.add("(5)", "i=" + std::to_string(i), AbelianGroup::integers_times_cyclic(i),
              [](int j) { return j == 1 ? Coords{0, 1} : Coords{1, j - 2}; });
    }
}

void f2_catalog(Builder& b) {
    const int n = b.n;
    b.add("(1)", "", AbelianGroup::trivial(), [](int) { return Coords{}; });
    b.add("(2)", "", AbelianGroup::integers(), [](int j) { return Coords{j}; });
    for (int k = 1; k < n; ++k) {
        b.add("(3)", "k=" + std::to_string(k), AbelianGroup::integers(), [n, k](int j) { return Coords{j == n ? k : j}; });
    }
    for (int i = 2; i < n; ++i)
        for (int k = 0; k < i; ++k) {
            b.add("(4)", "i=" + std::to_string(i) + " k=" + std::to_string(k), AbelianGroup::cyclic(i),
                  [n, k, i](int j) { return Coords{j == n ? k : j % i}; });
        }
    b.add("(5)", "i=1", AbelianGroup::integers(), [n](int j) { return Coords{j == n ? 1 : 0}; },
          "Z x Z_1 = Z: e_n alone in degree 1, the rest in 0; needed for rule (2) applied to the trivial grading");
    for (int i = 2; i < n; ++i) {
        b.add("(5)", "i=" + std::to_string(i), AbelianGroup::integers_times_cyclic(i),
              [n, i](int j) { return j == n ? Coords{1, 0} : Coords{0, j % i}; });
    }
}

}  // namespace

std::vector<CatalogEntry> catalog(Family family, int n) {
    const int min_dim = family == Family::NF ? 2 : 3;
    if (family != Family::NF && family != Family::F1 && family != Family::F2) {
        throw UnsupportedFamily("no grading catalog for " + std::string{family_name(family)});
    }
    if (n < min_dim) throw BadDimension("catalog needs n >= " + std::to_string(min_dim));
    Builder b{family, n, std::make_shared<const Algebra>(make_family(family, n, FieldSpec::rationals())), {}};
    if (family == Family::NF) nf_catalog(b);
    if (family == Family::F1) f1_catalog(b);
    if (family == Family::F2) f2_catalog(b);
    return std::move(b.out);
}

EnumerationReport compare(const std::vector<Grading>& found, const std::vector<Grading>& expected,
                          const std::vector<std::string>& expected_labels) {
    EnumerationReport r;
    std::set<CanonicalGrading> f, e;
    for (const auto& g : found) f.insert(canonical_form(g));
    std::map<CanonicalGrading, std::string> first_label;
    for (std::size_t t = 0; t < expected.size(); ++t) {
        const std::string label = t < expected_labels.size() ? expected_labels[t] : "#" + std::to_string(t);
        auto c = canonical_form(expected[t]);
        auto [it, fresh] = first_label.emplace(c, label);
        if (!fresh) r.collapsed.emplace_back(it->second, label);
        e.insert(std::move(c));
    }
    r.found.assign(f.begin(), f.end());
    r.expected.assign(e.begin(), e.end());
    std::set_difference(e.begin(), e.end(), f.begin(), f.end(), std::back_inserter(r.missing));
    std::set_difference(f.begin(), f.end(), e.begin(), e.end(), std::back_inserter(r.extra));
    return r;
}

EnumerationReport compare(const std::vector<Grading>& found, const std::vector<CatalogEntry>& expected) {
    std::vector<Grading> gradings;
    std::vector<std::string> labels;
    for (const auto& c : expected) {
        gradings.push_back(c.grading);
        labels.push_back(c.item + (c.params.empty() ? "" : " " + c.params));
    }
    return compare(found, gradings, labels);
}

std::vector<LiftedGrading> lift_direct_sum_gradings(const Grading& g) {
    const Algebra& a = g.algebra();
    const int m = a.dim();
    auto sum = std::make_shared<const Algebra>(direct_sum(a, abelian(1, a.field())));
    std::vector<LiftedGrading> out;

    auto with_new = [&](const GroupElem& h) {
        std::vector<GroupElem> d = g.degrees();
        d.push_back(h);
        return Grading{sum, g.group(), std::move(d)};
    };
    const auto support = g.support();
    for (const auto& h : support) out.push_back({1, with_new(h)});
    std::optional<GroupElem> fresh;
    for_each_element(g.group(), m + 1, [&](const GroupElem& h) {
        if (!fresh && !std::binary_search(support.begin(), support.end(), h)) fresh = h;
    });
    if (fresh) out.push_back({1, with_new(*fresh)});

    const AbelianGroup& base = g.group();
    const AbelianGroup zg{base.free_rank() + 1, base.torsion()};
    std::vector<GroupElem> d;
    for (const auto& x : g.degrees()) {
        std::vector<std::int64_t> c{0};
        c.insert(c.end(), x.coords().begin(), x.coords().end());
        d.emplace_back(zg, std::move(c));
    }
    std::vector<std::int64_t> e(static_cast<std::size_t>(zg.arity()), 0);
    e[0] = 1;
    d.emplace_back(zg, std::move(e));
    out.push_back({2, Grading{sum, zg, std::move(d)}});
    return out;
}

}  // namespace gleib
