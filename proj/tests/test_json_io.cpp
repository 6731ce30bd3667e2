#include <doctest.h>

#include "gleib/json_io.hpp"

using namespace gleib;

TEST_CASE("fields and scalars") {
    for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(7)}) CHECK(field_from_json(field_to_json(f)) == f);
    CHECK(field_from_json(Json("F5")) == FieldSpec::prime(5));
    const auto Q = FieldSpec::rationals();
    const Scalar half = Scalar::parse(Q, "-3/4");
    CHECK(scalar_to_json(half) == Json("-3/4"));
    CHECK(scalar_from_json(Q, scalar_to_json(half)) == half);
    CHECK(scalar_from_json(Q, Json(2)) == Scalar::from_int(Q, 2));
    CHECK(scalar_to_json(Scalar::from_int(FieldSpec::prime(5), -1)) == Json(4));
    CHECK_THROWS_AS(scalar_from_json(Q, Json(true)), ParseError);
}

TEST_CASE("algebra round trip") {
    for (Family f : {Family::NF, Family::F1, Family::F2, Family::LieL, Family::LieQ}) {
        for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
            const Algebra a = make_family(f, 6, field);
            const Algebra b = algebra_from_json(algebra_to_json(a));
            CHECK(b.same_structure(a));
            CHECK(b.label() == a.label());
        }
    }
    const Algebra custom(2, FieldSpec::rationals(), {{{1, 1}, {{2, Scalar::parse(FieldSpec::rationals(), "1/3")}}}});
    const Json j = algebra_to_json(custom);
    CHECK_FALSE(j.contains("label"));
    CHECK(algebra_from_json(Json::parse(j.dump())).same_structure(custom));
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"field": "Q", "sc": []})")), ParseError);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim": "x", "field": "Q", "sc": []})")), ParseError);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim": 2, "field": "Q", "sc": [{"i": 1, "j": 1, "terms": [{"k": 3, "c": 1}]}]})")),
                    InvalidAlgebra);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim": 2, "field": {"kind": "R"}, "sc": []})")), ParseError);
}

TEST_CASE("groups and gradings") {
    for (const char* s : {"trivial", "Z", "Z3", "ZxZ2", "Z2xZ4"}) {
        const auto g = AbelianGroup::parse(s);
        CHECK(group_from_json(group_to_json(g)) == g);
    }
    const auto a = std::make_shared<const Algebra>(make_family(Family::NF, 4, FieldSpec::rationals()));
    const auto z2 = AbelianGroup::cyclic(2);
    const Grading g{a, z2, {GroupElem{z2, {1}}, GroupElem{z2, {0}}, GroupElem{z2, {1}}, GroupElem{z2, {0}}}};
    const Json j = grading_to_json(g);
    CHECK(j["components"].size() == 2);
    CHECK(grading_from_json(a, j).degrees() == g.degrees());
    CHECK(canonical_to_json(canonical_form(g))["blocks"].size() == 2);
}

TEST_CASE("matrices") {
    CHECK(matrix_to_json({1, 2, 3, 4}, 2) == Json::parse("[[1,2],[3,4]]"));
}
