#include <doctest.h>

#include <random>

#include "gleib/kernels.hpp"

using namespace gleib;

TEST_CASE("residue matrix helpers") {
    const ResidueMatrix m{1, 2, 3, 4};
    CHECK(determinant_mod_p(m, 2, 5) == 3);
    const auto inv = inverse_mod_p(m, 2, 5);
    REQUIRE(inv);
    CHECK(multiply_mod_p(m, *inv, 2, 5) == ResidueMatrix{1, 0, 0, 1});
    CHECK_FALSE(inverse_mod_p(ResidueMatrix{1, 2, 2, 4}, 2, 7));

    std::mt19937_64 rng{3};
    std::uniform_int_distribution<std::int64_t> r(0, 6);
    for (int t = 0; t < 100; ++t) {
        ResidueMatrix a(9), b(9);
        for (auto& x : a) x = r(rng);
        for (auto& x : b) x = r(rng);
        CHECK(determinant_mod_p(multiply_mod_p(a, b, 3, 7), 3, 7) ==
              mod_mul(determinant_mod_p(a, 3, 7), determinant_mod_p(b, 3, 7), 7));
    }
}

TEST_CASE("prime structure") {
    const auto s = PrimeStructure::from_algebra(make_family(Family::NF, 3, FieldSpec::prime(5)));
    CHECK(s.at(1, 0, 2) == 1);
    CHECK(s.at(0, 1, 2) == 0);
    CHECK_THROWS_AS(PrimeStructure::from_algebra(make_family(Family::NF, 3, FieldSpec::rationals())), FieldMismatch);
    CHECK(preserves_products(s, ResidueMatrix{1, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK_FALSE(preserves_products(s, ResidueMatrix{1, 0, 0, 0, 1, 0, 0, 0, 2}));
}

TEST_CASE("serial and parallel searches agree") {
    struct Case {
        Family f;
        int n;
        std::int64_t p;
        std::size_t count;
    };
    for (const Case c : {Case{Family::NF, 2, 2, 2}, Case{Family::NF, 2, 5, 20}, Case{Family::NF, 3, 2, 4},
                         Case{Family::NF, 3, 3, 18}, Case{Family::F1, 3, 3, 36}, Case{Family::LieL, 3, 2, 0}}) {
        const auto s = PrimeStructure::from_algebra(make_family(c.f, c.n, FieldSpec::prime(c.p)));
        const auto serial = automorphisms_serial(s);
        const auto parallel = automorphisms_parallel(s);
        CHECK(serial == parallel);
        if (c.count) CHECK(serial.size() == c.count);
        for (const auto& m : serial) {
            CHECK(preserves_products(s, m));
            CHECK(determinant_mod_p(m, c.n, c.p) != 0);
        }
    }
}

TEST_CASE("deadline in the past") {
    const auto s = PrimeStructure::from_algebra(make_family(Family::NF, 3, FieldSpec::prime(5)));
    const auto past = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(automorphisms_serial(s, past), BudgetExceeded);
    CHECK_THROWS_AS(automorphisms_parallel(s, past), BudgetExceeded);
}
