#pragma once

// Cross-checking sweeps.  Every law the library relies on is re-verified here
// over bounded exhaustive families, with two styles of redundancy: closed
// forms against brute-force permutation counts, and direct enumeration
// against the monodromy oracle.  The sweep stops at the first broken law and
// reports a minimal counterexample.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hurwitz/enumerate.hpp"
#include "hurwitz/galois.hpp"
#include "hurwitz/kummer.hpp"
#include "hurwitz/monodromy.hpp"

namespace hurwitz::check {

enum Property : int {
    kChiAgreement = 0,        // closed-form chi vs cycle-counted chi
    kConnectivityRoutes,      // orbit closure vs gcd
    kGenusAgreement,          // Riemann-Hurwitz vs oracle genus
    kEulerParity,             // chi is always even
    kTwistInvariance,         // chi and connectivity survive unit twists
    kDivisorRoundTrip,        // branch_data . realize_hurwitz = identity
    kDivisorReduction,        // multiples of n never reach the branch locus
    kDivisorScaling,          // scaling a divisor = twisting its branch data
    kUnitActionLaw,           // group law and identity of the unit action
    kCanonicalStability,      // canonical form is constant on orbits
    kTwistGeometry,           // twists preserve genus and marked degree
    kCanonicalIdempotent,     // canonicalize . canonicalize = canonicalize
    kPsiNormalization,        // psi >= 1, and = 1 on free markings
    kPsiFiberAgreement,       // binomial formula vs explicit fibre count
    kComponentSetEquivalence, // enumeration vs oracle, as ordered sets
    kLabelValidation,         // every stratum and label passes the gatekeeper
    kEtaleFilter,             // the filtered atlas is exactly the etale-free part
    kDeterministicOutput,     // repeated enumeration is bit-identical
    kStrataOrbitCount,        // #strata = sum of orbit sizes
    kTwistOrbitConsistency,   // twist_orbit_report raises nothing
    kModulusEtale,            // determined modulus times etale part = n
    kCongruenceCoset,         // solution sets are the predicted cosets
    kPropertyCount
};

inline const char* property_name(int property) {
    switch (property) {
        case kChiAgreement: return "chi: closed form vs cycle count";
        case kConnectivityRoutes: return "connectivity: orbit closure vs gcd";
        case kGenusAgreement: return "genus: Riemann-Hurwitz vs oracle";
        case kEulerParity: return "Euler characteristic parity";
        case kTwistInvariance: return "twist invariance of chi and connectivity";
        case kDivisorRoundTrip: return "divisor round-trip recovers the datum";
        case kDivisorReduction: return "divisor reduction soundness";
        case kDivisorScaling: return "divisor scaling matches unit twist";
        case kUnitActionLaw: return "unit action: group law and identity";
        case kCanonicalStability: return "canonical form is twist-stable";
        case kTwistGeometry: return "twist preserves genus and marked degree";
        case kCanonicalIdempotent: return "canonicalize is idempotent, orbit divides phi(n)";
        case kPsiNormalization: return "psi degree: positive, 1 on free markings";
        case kPsiFiberAgreement: return "psi degree equals explicit fibre count";
        case kComponentSetEquivalence: return "component sets: enumeration vs oracle";
        case kLabelValidation: return "strata and labels validate with consistent metadata";
        case kEtaleFilter: return "etale filter keeps exactly the etale-free labels";
        case kDeterministicOutput: return "enumeration output is deterministic";
        case kStrataOrbitCount: return "strata count equals sum of orbit sizes";
        case kTwistOrbitConsistency: return "twist orbit report is consistent";
        case kModulusEtale: return "exponent modulus times etale part is n";
        case kCongruenceCoset: return "congruence solutions form the expected coset";
    }
    return "unknown property";
}

struct CheckOptions {
    Int max_genus = 4;
    Int max_marks = 4;
    Int max_order = 8;
    unsigned threads = 0; // 0 = available parallelism
    // Test fixture: adds 1 to every gcd in the closed-form Euler
    // characteristic of the chi-agreement sweep.  The sweep must then fail.
    bool corrupt_gcd = false;
};

struct Failure {
    std::string property;
    std::string counterexample;
};

struct CheckResult {
    std::array<std::uint64_t, kPropertyCount> cases{};
    std::optional<Failure> failure;

    bool passed() const noexcept { return !failure.has_value(); }
    std::uint64_t total_cases() const noexcept {
        std::uint64_t total = 0;
        for (auto c : cases) total += c;
        return total;
    }
};

namespace detail {

// Fixed bounds of the datum-level and congruence-level sweeps.
inline constexpr Int kDatumMaxGPrime = 2;
inline constexpr Int kDatumMaxNu = 6;
inline constexpr Int kCongruenceMaxOrder = 24;
inline constexpr Int kCongruenceMaxLen = 4;

using Tally = std::array<std::uint64_t, kPropertyCount>;

struct Abort {
    Failure failure;
};

[[noreturn]] inline void fail(int property, std::string counterexample) {
    throw Abort{{property_name(property), std::move(counterexample)}};
}

inline std::string list_str(const std::vector<Int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + "]";
}

inline std::string datum_str(Int n, Int g_prime, const std::vector<Int>& tuple,
                             const std::vector<Int>& handles) {
    return "n=" + std::to_string(n) + " g'=" + std::to_string(g_prime) + " c=" +
           list_str(tuple) + " handles=" + list_str(handles);
}

inline std::string stratum_str(Int g, Int m, Int n, Int g_prime, const BranchingDatum& kr) {
    return "g=" + std::to_string(g) + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
           " g'=" + std::to_string(g_prime) + " k=" + list_str(kr.k().exponents()) +
           " r=" + list_str(kr.r().counts());
}

// Datum-level sweep: every zero-sum multiset with nu <= 6 over every n up to
// the bound, at quotient genus 0..2, with and without a connecting handle.
inline void datum_sweep(const CheckOptions& opts, Tally& tally) {
    for (Int n = 2; n <= opts.max_order; ++n) {
        const CyclicOrder order(n);
        const auto units = units_mod(n);
        monodromy::detail::for_each_multiset(n, kDatumMaxNu, [&](const std::vector<Int>& tuple) {
            Int sum = 0;
            for (Int c : tuple) sum += c;
            if (mod_norm(sum, n) != 0) return;
            const HurwitzDatum k(order, tuple);

            // Divisor-level laws.
            const auto realized = kummer::realize_hurwitz(order, k);
            const auto [points, back] = kummer::branch_data(realized);
            ++tally[kDivisorRoundTrip];
            if (back != k)
                fail(kDivisorRoundTrip, "k=" + list_str(tuple) + " over n=" + std::to_string(n) +
                                            " came back as " + list_str(back.exponents()));

            auto padded = realized.support();
            padded.push_back({"z1", 2 * n});
            padded.push_back({"z2", -2 * n});
            const auto [padded_points, padded_k] =
                kummer::branch_data(kummer::KummerDivisor(order, padded));
            ++tally[kDivisorReduction];
            bool sound = padded_k == k && padded_points.size() == points.size();
            for (const auto& p : padded_points)
                if (p.exponent < 1 || p.exponent >= n) sound = false;
            if (!sound)
                fail(kDivisorReduction, "padding k=" + list_str(tuple) + " over n=" +
                                            std::to_string(n) + " with multiples of n changed it");

            for (Int u : units) {
                ++tally[kDivisorScaling];
                if (kummer::branch_data(kummer::unit_scale(realized, u)).second !=
                    unit_twist(k, u))
                    fail(kDivisorScaling, "k=" + list_str(tuple) + " over n=" + std::to_string(n) +
                                              " at u=" + std::to_string(u));
            }

            // Sheet-level laws.
            for (Int gp = 0; gp <= kDatumMaxGPrime; ++gp) {
                std::vector<std::vector<Int>> handle_choices;
                if (gp == 0) {
                    handle_choices.push_back({});
                } else {
                    std::vector<Int> zero(static_cast<std::size_t>(2 * gp), 0);
                    handle_choices.push_back(zero);
                    zero[0] = 1;
                    handle_choices.push_back(zero);
                }
                for (const auto& handles : handle_choices) {
                    const monodromy::MonodromyDatum d(order, gp, tuple, handles);
                    const auto where = [&] { return datum_str(n, gp, tuple, handles); };

                    Int chi_formula = n * (2 - 2 * gp - static_cast<Int>(tuple.size()));
                    for (Int c : tuple)
                        chi_formula += std::gcd(n, c) + (opts.corrupt_gcd ? 1 : 0);
                    const Int chi_cycles = monodromy::chi_by_cycle_count(d);
                    ++tally[kChiAgreement];
                    if (chi_formula != chi_cycles)
                        fail(kChiAgreement, where() + ": closed form " +
                                                std::to_string(chi_formula) + ", cycle count " +
                                                std::to_string(chi_cycles));

                    ++tally[kConnectivityRoutes];
                    if (monodromy::connected_by_orbit(d) != monodromy::connected_by_gcd(d))
                        fail(kConnectivityRoutes, where());

                    ++tally[kEulerParity];
                    if (mod_norm(chi_cycles, 2) != 0)
                        fail(kEulerParity, where() + ": chi = " + std::to_string(chi_cycles));

                    if (monodromy::is_connected(d)) {
                        ++tally[kGenusAgreement];
                        if (monodromy::oracle_genus(d).genus != rh_genus(order, gp, k))
                            fail(kGenusAgreement, where());
                    }

                    for (Int u : units) {
                        ++tally[kTwistInvariance];
                        const auto twisted = monodromy::twist_datum(d, u);
                        if (monodromy::chi_by_cycle_count(twisted) != chi_cycles ||
                            monodromy::is_connected(twisted) != monodromy::is_connected(d))
                            fail(kTwistInvariance, where() + " at u=" + std::to_string(u));
                    }
                }
            }
        });
    }
}

struct PointResult {
    Tally tally{};
    std::optional<Failure> failure;
};

// All laws attached to one sweep point (g, m, n).
inline PointResult component_point(Int g, Int m, Int n) {
    PointResult result;
    Tally& tally = result.tally;
    const CyclicOrder order(n);
    const auto point = [&] {
        return "g=" + std::to_string(g) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
    };
    try {
        const auto atlas = enumerate_components(g, m, order);

        ++tally[kDeterministicOutput];
        if (enumerate_components(g, m, order) != atlas) fail(kDeterministicOutput, point());

        const auto oracle = monodromy::oracle_enumerate(g, m, order);
        ++tally[kComponentSetEquivalence];
        if (atlas != oracle)
            fail(kComponentSetEquivalence,
                 point() + ": enumeration finds " + std::to_string(atlas.size()) +
                     " labels, oracle finds " + std::to_string(oracle.size()));

        const auto filtered = enumerate_components(g, m, order, true);
        std::vector<ComponentLabel> expected;
        for (const auto& label : atlas)
            if (label.etale_part == 1) expected.push_back(label);
        ++tally[kEtaleFilter];
        if (filtered != expected) fail(kEtaleFilter, point());

        const auto report = galois::twist_orbit_report(atlas);
        ++tally[kTwistOrbitConsistency];
        if (report.entries.size() != atlas.size()) fail(kTwistOrbitConsistency, point());

        for (const auto& label : atlas) {
            ++tally[kLabelValidation];
            if (!validate_branching(label.g, label.m, order, label.g_prime, label.canonical_kr)
                     .ok() ||
                label.exponent_modulus * label.etale_part != n ||
                label.psi_degree != psi_degree(label.canonical_kr) ||
                totient(n) % label.aut_orbit_size != 0)
                fail(kLabelValidation,
                     point() + ": label " + stratum_str(g, m, n, label.g_prime, label.canonical_kr));
        }

        const auto units = units_mod(n);
        Int strata = 0;
        for (const auto& [gp, k] : enumerate_hurwitz_data(g, order)) {
            for (const MarkingVector& marks : enumerate_markings(k, m)) {
                const BranchingDatum kr(k, marks);
                const auto where = [&] { return stratum_str(g, m, n, gp, kr); };
                ++strata;

                ++tally[kLabelValidation];
                if (!validate_branching(g, m, order, gp, kr).ok()) fail(kLabelValidation, where());

                const BranchingDatum canonical = canonicalize(kr);
                ++tally[kCanonicalIdempotent];
                if (canonicalize(canonical) != canonical ||
                    totient(n) % static_cast<Int>(unit_orbit(kr).size()) != 0)
                    fail(kCanonicalIdempotent, where());

                ++tally[kPsiNormalization];
                const std::uint64_t psi = psi_degree(kr);
                if (psi < 1 || (kr.r().free_support_only() && psi != 1))
                    fail(kPsiNormalization, where());

                ++tally[kPsiFiberAgreement];
                if (kummer::stratum_fiber_count(kr) != psi) fail(kPsiFiberAgreement, where());

                ++tally[kUnitActionLaw];
                if (unit_twist(kr, 1) != kr) fail(kUnitActionLaw, where() + " at u=1");

                for (Int u : units) {
                    const BranchingDatum twisted = unit_twist(kr, u);

                    ++tally[kCanonicalStability];
                    if (canonicalize(twisted) != canonical)
                        fail(kCanonicalStability, where() + " at u=" + std::to_string(u));

                    ++tally[kTwistGeometry];
                    if (rh_genus(order, gp, twisted.k()) != g ||
                        marked_degree(order, twisted.r()) != m)
                        fail(kTwistGeometry, where() + " at u=" + std::to_string(u));

                    for (Int v : units) {
                        ++tally[kUnitActionLaw];
                        if (unit_twist(twisted, v) != unit_twist(kr, mod_norm(u * v, n)))
                            fail(kUnitActionLaw, where() + " at u=" + std::to_string(u) +
                                                     ", v=" + std::to_string(v));
                    }
                }
            }
        }

        Int orbit_total = 0;
        for (const auto& label : atlas) orbit_total += label.aut_orbit_size;
        ++tally[kStrataOrbitCount];
        if (strata != orbit_total)
            fail(kStrataOrbitCount, point() + ": " + std::to_string(strata) + " strata vs " +
                                        std::to_string(orbit_total) + " orbit members");
    } catch (const Abort& abort) {
        result.failure = abort.failure;
    } catch (const std::exception& e) {
        result.failure = Failure{"internal error", point() + ": " + e.what()};
    }
    return result;
}

// Congruence-level sweep, independent of the component bounds: every
// exponent list of length <= 4 over every order <= 24.
inline void congruence_sweep(Tally& tally) {
    for (Int n = 2; n <= kCongruenceMaxOrder; ++n) {
        const CyclicOrder order(n);
        const auto units = units_mod(n);
        monodromy::detail::for_each_multiset(
            n, kCongruenceMaxLen, [&](const std::vector<Int>& exps) {
                if (exps.empty()) return;
                Int d = n;
                for (Int e : exps) d = std::gcd(d, e);
                const Int modulus = galois::determined_exponent_modulus(order, exps);

                ++tally[kModulusEtale];
                if (modulus * d != n)
                    fail(kModulusEtale, "n=" + std::to_string(n) + " k=" + list_str(exps) +
                                            ": modulus " + std::to_string(modulus) +
                                            " times etale part " + std::to_string(d));

                for (Int u : units) {
                    const auto solutions = galois::inertia_exponent_solutions(order, exps, u);
                    ++tally[kCongruenceCoset];
                    std::vector<Int> coset;
                    for (Int t = 0; t < d; ++t) coset.push_back(mod_norm(u + t * modulus, n));
                    std::sort(coset.begin(), coset.end());
                    bool ok = static_cast<Int>(solutions.size()) == d && solutions == coset &&
                              std::count(solutions.begin(), solutions.end(), mod_norm(u, n)) == 1;
                    if (d == 1) ok = ok && solutions == std::vector<Int>{mod_norm(u, n)};
                    if (!ok)
                        fail(kCongruenceCoset, "n=" + std::to_string(n) + " k=" + list_str(exps) +
                                                   " u=" + std::to_string(u) + ": got " +
                                                   list_str(solutions));
                }
            });
    }
}

} // namespace detail

/// Runs every sweep.  Counts are accumulated per property; the first broken
/// law (in deterministic sweep order) aborts with its counterexample.
inline CheckResult run_checks(const CheckOptions& opts = {}) {
    CheckResult result;
    try {
        detail::datum_sweep(opts, result.cases);

        std::vector<std::array<Int, 3>> points;
        for (Int n = 2; n <= opts.max_order; ++n)
            for (Int g = 0; g <= opts.max_genus; ++g)
                for (Int m = 0; m <= opts.max_marks; ++m)
                    if (2 * g - 2 + m > 0) points.push_back({g, m, n});

        unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
        if (!points.empty()) {
            std::vector<detail::PointResult> outcomes(points.size());
            if (threads <= 1 || points.size() <= 1) {
                for (std::size_t i = 0; i < points.size(); ++i)
                    outcomes[i] = detail::component_point(points[i][0], points[i][1], points[i][2]);
            } else {
                std::atomic<std::size_t> next{0};
                std::vector<std::thread> pool;
                const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));
                pool.reserve(workers);
                for (unsigned t = 0; t < workers; ++t)
                    pool.emplace_back([&points, &outcomes, &next] {
                        std::size_t i;
                        while ((i = next.fetch_add(1)) < points.size())
                            outcomes[i] =
                                detail::component_point(points[i][0], points[i][1], points[i][2]);
                    });
                for (auto& worker : pool) worker.join();
            }
            // Deterministic fold: sweep order decides which failure is "first"
            // regardless of scheduling.
            for (const auto& outcome : outcomes) {
                for (int p = 0; p < kPropertyCount; ++p) result.cases[p] += outcome.tally[p];
                if (outcome.failure && !result.failure) result.failure = outcome.failure;
            }
            if (result.failure) return result;
        }

        detail::congruence_sweep(result.cases);
    } catch (const detail::Abort& abort) {
        result.failure = abort.failure;
    } catch (const std::exception& e) {
        result.failure = Failure{"internal error", e.what()};
    }
    return result;
}

} // namespace hurwitz::check
