#include "gleib/json_io.hpp"

namespace gleib {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string{"missing key '"} + key + "'");
    return j.at(key);
}

template <class T>
T get(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(std::string{"bad value for "} + what);
    }
}

}  // namespace

Json field_to_json(const FieldSpec& f) {
    if (f.is_prime_field()) return {{"kind", "Fp"}, {"p", f.characteristic()}};
    return {{"kind", "Q"}};
}

FieldSpec field_from_json(const Json& j) {
    if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
    const auto kind = get<std::string>(need(j, "kind"), "field kind");
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "Fp") return FieldSpec::prime(get<std::int64_t>(need(j, "p"), "field p"));
    throw ParseError("unknown field kind '" + kind + "'");
}

Json scalar_to_json(const Scalar& s) {
    if (s.field().is_prime_field()) return s.residue();
    return s.to_string();
}

Scalar scalar_from_json(const FieldSpec& f, const Json& j) {
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<std::int64_t>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw ParseError("scalar must be an integer or a \"num/den\" string");
}

Json algebra_to_json(const Algebra& a) {
    Json sc = Json::array();
    for (const auto& [key, terms] : a.structure_constants()) {
        Json ts = Json::array();
        for (const auto& t : terms) ts.push_back({{"k", t.k}, {"c", scalar_to_json(t.c)}});
        sc.push_back({{"i", key.first}, {"j", key.second}, {"terms", ts}});
    }
    Json out{{"dim", a.dim()}, {"field", field_to_json(a.field())}, {"sc", sc}};
    if (a.label() != Family::Custom) out["label"] = std::string{family_name(a.label())};
    return out;
}

Algebra algebra_from_json(const Json& j) {
    const int n = get<int>(need(j, "dim"), "dim");
    const FieldSpec f = field_from_json(need(j, "field"));
    StructureConstants sc;
    const Json& entries = need(j, "sc");
    if (!entries.is_array()) throw ParseError("'sc' must be an array");
    for (const auto& e : entries) {
        const int i = get<int>(need(e, "i"), "i");
        const int jj = get<int>(need(e, "j"), "j");
        auto& slot = sc[{i, jj}];
        for (const auto& t : need(e, "terms")) {
            slot.push_back({get<int>(need(t, "k"), "k"), scalar_from_json(f, need(t, "c"))});
        }
    }
    Family label = Family::Custom;
    if (j.contains("label")) label = parse_family(get<std::string>(j.at("label"), "label"));
    return Algebra{n, f, std::move(sc), label};
}

Json group_to_json(const AbelianGroup& g) { return {{"rank", g.free_rank()}, {"torsion", g.torsion()}}; }

AbelianGroup group_from_json(const Json& j) {
    if (j.is_string()) return AbelianGroup::parse(j.get<std::string>());
    return AbelianGroup{get<int>(need(j, "rank"), "rank"), get<std::vector<std::int64_t>>(need(j, "torsion"), "torsion")};
}

Json grading_to_json(const Grading& g) {
    Json degrees = Json::array();
    for (const auto& d : g.degrees()) degrees.push_back(d.coords());
    Json comps = Json::array();
    for (const auto& [deg, basis] : g.components()) comps.push_back({{"degree", deg.coords()}, {"basis", basis}});
    return {{"group", group_to_json(g.group())}, {"degrees", degrees}, {"components", comps}};
}

Grading grading_from_json(const AlgebraPtr& a, const Json& j) {
    const AbelianGroup g = group_from_json(need(j, "group"));
    std::vector<GroupElem> degrees;
    for (const auto& d : need(j, "degrees")) degrees.emplace_back(g, get<std::vector<std::int64_t>>(d, "degree"));
    return Grading{a, g, std::move(degrees)};
}

Json canonical_to_json(const CanonicalGrading& c) {
    Json degrees = Json::array();
    for (const auto& d : c.degrees) degrees.push_back(d.coords());
    return {{"group", group_to_json(c.group)}, {"blocks", c.blocks}, {"degrees", degrees}};
}

Json catalog_entry_to_json(const CatalogEntry& e) {
    Json out{{"family", std::string{family_name(e.family)}},
             {"n", e.n},
             {"item", e.item},
             {"params", e.params},
             {"grading", grading_to_json(e.grading)}};
    if (!e.note.empty()) out["note"] = e.note;
    return out;
}

Json report_to_json(const EnumerationReport& r) {
    auto list = [](const std::vector<CanonicalGrading>& v) {
        Json a = Json::array();
        for (const auto& c : v) a.push_back(canonical_to_json(c));
        return a;
    };
    Json collapsed = Json::array();
    for (const auto& [x, y] : r.collapsed) collapsed.push_back({x, y});
    return {{"passed", r.passed()},
            {"found", r.found.size()},
            {"expected", r.expected.size()},
            {"missing", list(r.missing)},
            {"extra", list(r.extra)},
            {"collapsed", collapsed}};
}

Json matrix_to_json(const ResidueMatrix& m, int n) {
    Json rows = Json::array();
    for (int r = 0; r < n; ++r) rows.push_back(std::vector<std::int64_t>(m.begin() + r * n, m.begin() + (r + 1) * n));
    return rows;
}

}  // namespace gleib
