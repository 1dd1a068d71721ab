#include <catch2/catch_amalgamated.hpp>

#include "hurwitz/core.hpp"

using namespace hurwitz;

namespace {

BranchingDatum seven_cover_datum() {
    // The order-7 cover branched at three points with exponents (3, 2, -5),
    // marked at the full fibre over one unbranched point and at the single
    // ramification point of class 3.
    const CyclicOrder n(7);
    std::vector<Int> r(7, 0);
    r[0] = 1;
    r[3] = 1;
    return BranchingDatum(HurwitzDatum(n, {3, 2, -5}), MarkingVector(n, r));
}

} // namespace

TEST_CASE("cyclic order rejects degenerate groups") {
    CHECK_THROWS_AS(CyclicOrder(1), InvalidDatum);
    CHECK_THROWS_AS(CyclicOrder(0), InvalidDatum);
    CHECK_THROWS_AS(CyclicOrder(-3), InvalidDatum);
    CHECK(CyclicOrder(2).value() == 2);
}

TEST_CASE("hurwitz datum normalizes, sorts and validates") {
    const HurwitzDatum k(CyclicOrder(7), {3, 2, -5});
    CHECK(k.exponents() == std::vector<Int>{2, 2, 3});
    CHECK(k.nu() == 3);

    CHECK_NOTHROW(HurwitzDatum(CyclicOrder(5), {}));
    CHECK_THROWS_AS(HurwitzDatum(CyclicOrder(7), {7, 7}), InvalidDatum);   // zero classes
    CHECK_THROWS_AS(HurwitzDatum(CyclicOrder(3), {1}), InvalidDatum);      // sum 1 mod 3
    CHECK_THROWS_AS(HurwitzDatum(CyclicOrder(4), {1, 1, 1}), InvalidDatum);
}

TEST_CASE("exponent counts") {
    const HurwitzDatum k(CyclicOrder(7), {2, 2, 3});
    CHECK(exponent_count(k, 2) == 2);
    CHECK(exponent_count(k, 3) == 1);
    CHECK(exponent_count(k, -5) == 2); // -5 = 2 mod 7
    CHECK(exponent_count(k, 0) == 0);
    CHECK(exponent_count(k, 5) == 0);

    const HurwitzDatum hyperelliptic(CyclicOrder(2), std::vector<Int>(6, 1));
    CHECK(exponent_count(hyperelliptic, 1) == 6);
    CHECK(exponent_count(HurwitzDatum(CyclicOrder(5), {}), 1) == 0);
}

TEST_CASE("riemann-hurwitz genus") {
    CHECK(rh_genus(CyclicOrder(7), 0, HurwitzDatum(CyclicOrder(7), {2, 2, 3})) == 3);
    CHECK(rh_genus(CyclicOrder(3), 1, HurwitzDatum(CyclicOrder(3), {})) == 1);
    CHECK(rh_genus(CyclicOrder(2), 0, HurwitzDatum(CyclicOrder(2), std::vector<Int>(6, 1))) == 2);
    CHECK(rh_genus(CyclicOrder(2), 1, HurwitzDatum(CyclicOrder(2), {1, 1})) == 2);

    // An unramified order-7 cover of the line would be 7 spheres.
    CHECK_THROWS_AS(rh_genus(CyclicOrder(7), 0, HurwitzDatum(CyclicOrder(7), {})), NegativeGenus);
    // Exponents (2, 2) over n = 4 force genus -1 at quotient genus 0.
    CHECK_THROWS_AS(rh_genus(CyclicOrder(4), 0, HurwitzDatum(CyclicOrder(4), {2, 2})),
                    NegativeGenus);

    // Only raw exponent spans can reach the parity guard: zero-sum data
    // always have an even right-hand side.
    const std::vector<Int> lone{1};
    CHECK_THROWS_AS(rh_genus_from_exponents(CyclicOrder(2), 0, lone), NonIntegralGenus);

    CHECK_THROWS_AS(rh_genus(CyclicOrder(7), -1, HurwitzDatum(CyclicOrder(7), {2, 2, 3})),
                    InvalidDatum);
}

TEST_CASE("marked degree adds orbit sizes") {
    const CyclicOrder n(7);
    std::vector<Int> r(7, 0);
    r[0] = 1;
    r[3] = 1;
    CHECK(marked_degree(n, MarkingVector(n, r)) == 8); // 7 + gcd(7,3)

    CHECK(marked_degree(n, MarkingVector(n)) == 0);

    const CyclicOrder four(4);
    std::vector<Int> r4(4, 0);
    r4[2] = 1;
    CHECK(marked_degree(four, MarkingVector(four, r4)) == 2); // gcd(4,2)
}

TEST_CASE("marking vector shape is enforced") {
    CHECK_THROWS_AS(MarkingVector(CyclicOrder(3), {1, 0}), InvalidDatum);
    CHECK_THROWS_AS(MarkingVector(CyclicOrder(3), {1, 0, -1}), InvalidDatum);
    CHECK(MarkingVector(CyclicOrder(3)).total_orbits() == 0);
    CHECK(MarkingVector(CyclicOrder(3), {2, 0, 0}).free_support_only());
    CHECK_FALSE(MarkingVector(CyclicOrder(3), {0, 1, 2}).free_support_only());
}

TEST_CASE("branching datum enforces the marking bound") {
    const CyclicOrder two(2);
    const HurwitzDatum k(two, std::vector<Int>(4, 1));
    CHECK_NOTHROW(BranchingDatum(k, MarkingVector(two, {0, 4})));
    CHECK_THROWS_AS(BranchingDatum(k, MarkingVector(two, {0, 5})), InvalidMarking);

    const CyclicOrder seven(7);
    const HurwitzDatum k7(seven, {2, 2, 3});
    std::vector<Int> r(7, 0);
    r[1] = 1; // no branch point of class 1 exists
    CHECK_THROWS_AS(BranchingDatum(k7, MarkingVector(seven, r)), InvalidMarking);
}

TEST_CASE("unit twist scales exponents and reindexes markings") {
    const BranchingDatum kr = seven_cover_datum();

    SECTION("identity unit") {
        CHECK(unit_twist(kr, 1) == kr);
    }

    SECTION("worked order-7 example at u = 4") {
        const BranchingDatum twisted = unit_twist(kr, 4);
        CHECK(twisted.k().exponents() == std::vector<Int>{1, 1, 5});
        CHECK(twisted.r().at(0) == 1);
        CHECK(twisted.r().at(5) == 1); // index 3 moved to 3*4 = 5 mod 7
        CHECK(twisted.r().total_orbits() == 2);
    }

    SECTION("a full residue system is permuted onto itself") {
        const HurwitzDatum k(CyclicOrder(5), {1, 2, 3, 4});
        CHECK(unit_twist(k, 2).exponents() == k.exponents());
        CHECK(unit_twist(k, 3).exponents() == k.exponents());
    }

    SECTION("non-units are refused") {
        const HurwitzDatum k(CyclicOrder(4), {2, 2});
        CHECK_THROWS_AS(unit_twist(k, 2), NotAUnit);
        CHECK_THROWS_AS(unit_twist(kr, 7), NotAUnit); // 7 = 0 mod 7
    }

    SECTION("group action law on a small exhaustive domain") {
        const CyclicOrder twelve(12);
        const HurwitzDatum k(twelve, {4, 6, 6, 8});
        const BranchingDatum base(k, MarkingVector(twelve));
        for (Int u : units_mod(12))
            for (Int v : units_mod(12))
                CHECK(unit_twist(unit_twist(base, u), v) ==
                      unit_twist(base, mod_norm(u * v, 12)));
    }
}

TEST_CASE("canonicalize picks the least twist") {
    const BranchingDatum kr = seven_cover_datum();
    const BranchingDatum canonical = canonicalize(kr);

    CHECK(canonical.k().exponents() == std::vector<Int>{1, 1, 5});
    CHECK(canonical.r().at(0) == 1);
    CHECK(canonical.r().at(5) == 1);
    CHECK(canonical == unit_twist(kr, 4));

    SECTION("idempotent") {
        CHECK(canonicalize(canonical) == canonical);
    }

    SECTION("constant on the orbit") {
        for (Int u : units_mod(7)) CHECK(canonicalize(unit_twist(kr, u)) == canonical);
    }

    SECTION("orbit size divides the unit group order") {
        CHECK(unit_orbit(kr).size() == 6); // phi(7), trivial stabilizer
        const CyclicOrder five(5);
        const BranchingDatum symmetric(HurwitzDatum(five, {1, 2, 3, 4}), MarkingVector(five));
        CHECK(unit_orbit(symmetric).size() == 1); // fixed by every unit
    }
}

TEST_CASE("etale part") {
    CHECK(etale_part(CyclicOrder(7), HurwitzDatum(CyclicOrder(7), {2, 2, 3})) == 1);
    CHECK(etale_part(CyclicOrder(4), HurwitzDatum(CyclicOrder(4), {2, 2})) == 2);
    CHECK(etale_part(CyclicOrder(5), HurwitzDatum(CyclicOrder(5), {})) == 5);
}

TEST_CASE("psi degree multiplies per-class binomials") {
    CHECK(psi_degree(seven_cover_datum()) == 1); // C(1,1) * C(2,0)

    const CyclicOrder two(2);
    const HurwitzDatum k(two, std::vector<Int>(4, 1));
    CHECK(psi_degree(BranchingDatum(k, MarkingVector(two, {0, 2}))) == 6); // C(4,2)
    CHECK(psi_degree(BranchingDatum(k, MarkingVector(two, {3, 0}))) == 1); // free marking only
}

TEST_CASE("validate branching reports every violated rule") {
    SECTION("the worked order-7 datum is admissible") {
        const auto report = validate_branching(3, 8, CyclicOrder(7), 0, seven_cover_datum());
        CHECK(report.ok());
    }

    SECTION("non-hyperbolic strata are rejected") {
        const CyclicOrder two(2);
        const BranchingDatum kr(HurwitzDatum(two, {}), MarkingVector(two));
        const auto report = validate_branching(1, 0, two, 1, kr);
        CHECK_FALSE(report.ok());
        CHECK(report.violated(Rule::Hyperbolicity));
        CHECK_FALSE(report.violated(Rule::GenusMatch));
    }

    SECTION("disconnecting exponents over genus 0 are rejected") {
        const CyclicOrder four(4);
        const BranchingDatum kr(HurwitzDatum(four, {2, 2}), MarkingVector(four));
        const auto report = validate_branching(1, 0, four, 0, kr);
        CHECK_FALSE(report.ok());
        CHECK(report.violated(Rule::Connectivity));
        // The same datum also misses the requested genus and hyperbolicity;
        // the report lists everything.
        CHECK(report.violated(Rule::GenusMatch));
        CHECK(report.violated(Rule::Hyperbolicity));
    }

    SECTION("raw data can violate the type-level rules too") {
        const std::vector<Int> bad_exponents{2, 2}; // sum 4 = 1 mod 3
        const std::vector<Int> zero_exponents{3, 3};
        const std::vector<Int> marking{0, 0, 0};
        auto report = validate_branching(1, 0, CyclicOrder(3), 1, bad_exponents, marking);
        CHECK(report.violated(Rule::SumZero));

        report = validate_branching(1, 0, CyclicOrder(3), 1, zero_exponents, marking);
        CHECK(report.violated(Rule::NonzeroExponents));

        const std::vector<Int> short_marking{0, 0};
        report = validate_branching(1, 0, CyclicOrder(3), 1, std::vector<Int>{}, short_marking);
        CHECK(report.violated(Rule::MarkingShape));

        const std::vector<Int> greedy{0, 2, 0};
        report = validate_branching(2, 2, CyclicOrder(3), 1, std::vector<Int>{1, 2}, greedy);
        CHECK(report.violated(Rule::MarkingBound));
    }
}

TEST_CASE("component labels carry recomputed metadata") {
    SECTION("worked order-7 example") {
        const ComponentLabel label = make_component_label(0, seven_cover_datum());
        CHECK(label.g == 3);
        CHECK(label.m == 8);
        CHECK(label.n.value() == 7);
        CHECK(label.g_prime == 0);
        CHECK(label.canonical_kr.k().exponents() == std::vector<Int>{1, 1, 5});
        CHECK(label.aut_orbit_size == 6);
        CHECK(label.psi_degree == 1);
        CHECK(label.etale_part == 1);
        CHECK(label.exponent_modulus == 7);
    }

    SECTION("hyperelliptic genus-2 locus") {
        const CyclicOrder two(2);
        const BranchingDatum kr(HurwitzDatum(two, std::vector<Int>(6, 1)), MarkingVector(two));
        const ComponentLabel label = make_component_label(0, kr);
        CHECK(label.g == 2);
        CHECK(label.m == 0);
        CHECK(label.aut_orbit_size == 1);
        CHECK(label.psi_degree == 1);
        CHECK(label.etale_part == 1);
        CHECK(label.exponent_modulus == 2);
    }

    SECTION("unramified strata keep the identity product n") {
        const CyclicOrder two(2);
        const BranchingDatum kr(HurwitzDatum(two, {}), MarkingVector(two));
        const ComponentLabel label = make_component_label(2, kr); // genus 3 etale double cover
        CHECK(label.g == 3);
        CHECK(label.etale_part == 2);
        CHECK(label.exponent_modulus == 1);
    }

    SECTION("non-hyperbolic strata are refused") {
        const CyclicOrder two(2);
        const BranchingDatum kr(HurwitzDatum(two, {}), MarkingVector(two));
        CHECK_THROWS_AS(make_component_label(1, kr), NotHyperbolic); // g = 1, m = 0
    }
}
