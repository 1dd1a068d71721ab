#include <catch2/catch_amalgamated.hpp>

#include "hurwitz/enumerate.hpp"
#include "hurwitz/monodromy.hpp"

using namespace hurwitz;
using monodromy::MonodromyDatum;

TEST_CASE("monodromy datum invariants") {
    const CyclicOrder four(4);
    CHECK_NOTHROW(MonodromyDatum(four, 0, {2, 2}));
    CHECK_NOTHROW(MonodromyDatum(four, 1, {2, 2}, {1, 0}));
    CHECK_THROWS_AS(MonodromyDatum(four, 0, {2, 1}), InvalidDatum);      // sum 3 mod 4
    CHECK_THROWS_AS(MonodromyDatum(four, 0, {4, 4}), InvalidDatum);      // zero classes
    CHECK_THROWS_AS(MonodromyDatum(four, 1, {2, 2}), InvalidDatum);      // missing handles
    CHECK_THROWS_AS(MonodromyDatum(four, 0, {2, 2}, {1, 0}), InvalidDatum);
}

TEST_CASE("rotations and cycle counting") {
    CHECK(monodromy::rotation_permutation(4, 2) == std::vector<Int>{2, 3, 0, 1});
    CHECK(monodromy::cycle_count(monodromy::rotation_permutation(4, 2)) == 2);
    CHECK(monodromy::cycle_count(monodromy::rotation_permutation(6, 1)) == 1);
    CHECK(monodromy::cycle_count(monodromy::rotation_permutation(6, 0)) == 6);
    // Number of cycles of a rotation equals gcd(n, amount).
    for (Int n = 2; n <= 12; ++n)
        for (Int a = 0; a < n; ++a)
            CHECK(monodromy::cycle_count(monodromy::rotation_permutation(n, a)) ==
                  std::gcd(n, a));
}

TEST_CASE("connectivity, both routes") {
    const CyclicOrder four(4);
    CHECK_FALSE(monodromy::is_connected(MonodromyDatum(four, 0, {2, 2})));
    CHECK(monodromy::is_connected(MonodromyDatum(four, 1, {2, 2}, {1, 0})));
    CHECK(monodromy::is_connected(MonodromyDatum(CyclicOrder(2), 0, {1, 1})));

    SECTION("routes agree on an exhaustive small family") {
        for (Int n = 2; n <= 6; ++n) {
            const CyclicOrder order(n);
            std::vector<std::vector<Int>> tuples{{}};
            for (Int a = 1; a < n; ++a)
                for (Int b = a; b < n; ++b)
                    if ((a + b) % n == 0) tuples.push_back({a, b});
            for (const auto& tuple : tuples) {
                CHECK(monodromy::connected_by_orbit(MonodromyDatum(order, 0, tuple)) ==
                      monodromy::connected_by_gcd(MonodromyDatum(order, 0, tuple)));
                for (Int a1 = 0; a1 < n; ++a1) {
                    const MonodromyDatum with_handles(order, 1, tuple, {a1, 0});
                    CHECK(monodromy::connected_by_orbit(with_handles) ==
                          monodromy::connected_by_gcd(with_handles));
                }
            }
        }
    }
}

TEST_CASE("oracle genus from explicit sheets") {
    SECTION("worked order-7 cover") {
        const auto result = monodromy::oracle_genus(MonodromyDatum(CyclicOrder(7), 0, {3, 2, 2}));
        CHECK(result.chi == -4);
        CHECK(result.genus == 3);
        CHECK(result.connected);
        CHECK(result.components == 1);
    }

    SECTION("hyperelliptic genus 2") {
        const auto result =
            monodromy::oracle_genus(MonodromyDatum(CyclicOrder(2), 0, std::vector<Int>(6, 1)));
        CHECK(result.chi == -2);
        CHECK(result.genus == 2);
        CHECK(result.connected);
    }

    SECTION("a disconnected cover: two spheres") {
        const auto result = monodromy::oracle_genus(MonodromyDatum(CyclicOrder(4), 0, {2, 2}));
        CHECK(result.chi == 4);
        CHECK_FALSE(result.connected);
        CHECK(result.components == 2);
    }

    SECTION("agrees with Riemann-Hurwitz on connected data") {
        for (Int n = 2; n <= 8; ++n) {
            const CyclicOrder order(n);
            for (Int g = 0; g <= 3; ++g)
                for (const auto& [gp, k] : enumerate_hurwitz_data(g, order)) {
                    std::vector<Int> handles(static_cast<std::size_t>(2 * gp), 0);
                    if (gp >= 1) handles[0] = 1;
                    const MonodromyDatum datum(order, gp, k.exponents(), handles);
                    REQUIRE(monodromy::is_connected(datum));
                    CHECK(monodromy::oracle_genus(datum).genus == g);
                }
        }
    }
}

TEST_CASE("twisting a datum preserves genus and connectivity") {
    const MonodromyDatum base(CyclicOrder(7), 0, {3, 2, 2});
    const MonodromyDatum twisted = monodromy::twist_datum(base, 4);
    CHECK(twisted.branch_images() == std::vector<Int>{5, 1, 1});
    CHECK(monodromy::oracle_genus(twisted).genus == 3);

    const MonodromyDatum handled(CyclicOrder(4), 1, {2, 2}, {1, 0});
    const MonodromyDatum handled_twist = monodromy::twist_datum(handled, 3);
    CHECK(handled_twist.branch_images() == std::vector<Int>{2, 2});
    CHECK(handled_twist.handle_images() == std::vector<Int>{3, 0});
    CHECK(monodromy::is_connected(handled_twist));

    CHECK(monodromy::twist_datum(base, 1).branch_images() == base.branch_images());
    CHECK_THROWS_AS(monodromy::twist_datum(handled, 2), NotAUnit);
}

TEST_CASE("oracle enumeration of component labels") {
    SECTION("genus 2, unmarked, order 2") {
        const auto labels = monodromy::oracle_enumerate(2, 0, CyclicOrder(2));
        REQUIRE(labels.size() == 2);
        CHECK(labels[0].g_prime == 0);
        CHECK(labels[0].canonical_kr.k().exponents() == std::vector<Int>(6, 1));
        CHECK(labels[1].g_prime == 1);
        CHECK(labels[1].canonical_kr.k().exponents() == std::vector<Int>{1, 1});
    }

    SECTION("genus 0 with 4 marked points, order 2") {
        const auto labels = monodromy::oracle_enumerate(0, 4, CyclicOrder(2));
        REQUIRE(labels.size() == 2);
        for (const auto& label : labels)
            CHECK(label.canonical_kr.k().exponents() == std::vector<Int>{1, 1});
        CHECK(labels[0].canonical_kr.r().counts() == std::vector<Int>{1, 2});
        CHECK(labels[1].canonical_kr.r().counts() == std::vector<Int>{2, 0});
    }

    SECTION("genus 1 with one marked point, order 2") {
        // The unramified double cover of an elliptic curve admits no
        // equivariant degree-1 marking: every free orbit has size 2.
        const auto labels = monodromy::oracle_enumerate(1, 1, CyclicOrder(2));
        REQUIRE(labels.size() == 1);
        CHECK(labels[0].g_prime == 0);
        CHECK(labels[0].canonical_kr.k().exponents() == std::vector<Int>(4, 1));
        CHECK(labels[0].canonical_kr.r().counts() == std::vector<Int>{0, 1});
        CHECK(labels[0].psi_degree == 4);
    }

    SECTION("non-hyperbolic inputs are refused") {
        CHECK_THROWS_AS(monodromy::oracle_enumerate(0, 2, CyclicOrder(2)), NotHyperbolic);
        CHECK_THROWS_AS(monodromy::oracle_enumerate(1, 0, CyclicOrder(3)), NotHyperbolic);
    }
}
