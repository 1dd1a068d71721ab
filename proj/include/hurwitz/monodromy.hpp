#pragma once

// Brute-force oracle for cyclic covers.  A degree-n cover of a genus-g'
// surface is realized on n explicit sheets: the deck transformations are the
// rotations s -> s + c mod n, one generator image per branch point plus one
// per handle loop.  Genus and connectivity are then read off the permutation
// action (cycle counting, orbit closure) and cross-checked against the
// closed-form expressions used elsewhere in the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hurwitz/core.hpp"

namespace hurwitz::monodromy {

/// Images in Z/nZ of the standard generators of the fundamental group of a
/// genus-g' surface minus nu points: one nonzero class per branch point,
/// summing to zero (the target is abelian, so the commutators vanish from
/// the surface relation), and 2g' unconstrained handle images.
class MonodromyDatum {
public:
    MonodromyDatum(CyclicOrder order, Int g_prime, std::vector<Int> branch_images,
                   std::vector<Int> handle_images = {})
        : n_(order), g_prime_(g_prime) {
        const Int n = n_.value();
        if (g_prime < 0)
            throw InvalidDatum("quotient genus must be non-negative");
        if (static_cast<Int>(handle_images.size()) != 2 * g_prime)
            throw InvalidDatum("expected " + std::to_string(2 * g_prime) +
                               " handle images, got " + std::to_string(handle_images.size()));
        Int sum = 0;
        branch_images_.reserve(branch_images.size());
        for (Int c : branch_images) {
            const Int v = mod_norm(c, n);
            if (v == 0)
                throw InvalidDatum("branch image is divisible by " + std::to_string(n));
            branch_images_.push_back(v);
            sum = mod_norm(sum + v, n);
        }
        if (sum != 0)
            throw InvalidDatum("branch images sum to " + std::to_string(sum) + " mod " +
                               std::to_string(n));
        handle_images_.reserve(handle_images.size());
        for (Int a : handle_images) handle_images_.push_back(mod_norm(a, n));
    }

    CyclicOrder order() const noexcept { return n_; }
    Int quotient_genus() const noexcept { return g_prime_; }
    Int nu() const noexcept { return static_cast<Int>(branch_images_.size()); }
    const std::vector<Int>& branch_images() const noexcept { return branch_images_; }
    const std::vector<Int>& handle_images() const noexcept { return handle_images_; }

    HurwitzDatum branch_multiset() const { return HurwitzDatum(n_, branch_images_); }

private:
    CyclicOrder n_;
    Int g_prime_;
    std::vector<Int> branch_images_;
    std::vector<Int> handle_images_;
};

/// The rotation s -> s + amount mod n as an explicit permutation of the
/// sheets 0..n-1.
inline std::vector<Int> rotation_permutation(Int n, Int amount) {
    std::vector<Int> images(static_cast<std::size_t>(n));
    for (Int s = 0; s < n; ++s) images[static_cast<std::size_t>(s)] = mod_norm(s + amount, n);
    return images;
}

/// Number of cycles of a permutation, by walking each cycle once.
inline Int cycle_count(const std::vector<Int>& perm) {
    std::vector<bool> visited(perm.size(), false);
    Int cycles = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (visited[s]) continue;
        ++cycles;
        std::size_t t = s;
        while (!visited[t]) {
            visited[t] = true;
            t = static_cast<std::size_t>(perm[t]);
        }
    }
    return cycles;
}

/// Connectivity by orbit closure: repeatedly applies every generator
/// rotation starting from sheet 0 and asks whether all n sheets are reached.
inline bool connected_by_orbit(const MonodromyDatum& d) {
    const Int n = d.order().value();
    std::vector<Int> generators = d.branch_images();
    generators.insert(generators.end(), d.handle_images().begin(), d.handle_images().end());

    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    std::vector<Int> queue{0};
    reached[0] = true;
    Int count = 1;
    while (!queue.empty()) {
        const Int s = queue.back();
        queue.pop_back();
        for (Int gen : generators) {
            const Int t = mod_norm(s + gen, n);
            if (!reached[static_cast<std::size_t>(t)]) {
                reached[static_cast<std::size_t>(t)] = true;
                ++count;
                queue.push_back(t);
            }
        }
    }
    return count == n;
}

/// Connectivity by arithmetic: the generator images generate Z/nZ exactly
/// when their gcd with n is 1.
inline bool connected_by_gcd(const MonodromyDatum& d) {
    Int g = d.order().value();
    for (Int c : d.branch_images()) g = std::gcd(g, c);
    for (Int a : d.handle_images()) g = std::gcd(g, a);
    return g == 1;
}

/// Both connectivity routes, compared.  They can only disagree if one of the
/// implementations is broken.
inline bool is_connected(const MonodromyDatum& d) {
    const bool by_orbit = connected_by_orbit(d);
    const bool by_gcd = connected_by_gcd(d);
    if (by_orbit != by_gcd)
        throw ConsistencyFailure("orbit closure and gcd disagree about connectivity");
    return by_orbit;
}

/// Euler characteristic from the closed form: the punctured base contributes
/// n(2 - 2g' - nu) and each branch point is covered by gcd(n, c) points.
inline Int chi_by_formula(const MonodromyDatum& d) {
    const Int n = d.order().value();
    Int chi = n * (2 - 2 * d.quotient_genus() - d.nu());
    for (Int c : d.branch_images()) chi += std::gcd(n, c);
    return chi;
}

/// Euler characteristic with the branch fibres counted as cycles of the
/// explicit rotation permutations instead of gcds.
inline Int chi_by_cycle_count(const MonodromyDatum& d) {
    const Int n = d.order().value();
    Int chi = n * (2 - 2 * d.quotient_genus() - d.nu());
    for (Int c : d.branch_images()) chi += cycle_count(rotation_permutation(n, c));
    return chi;
}

struct GenusResult {
    Int chi;
    Int genus; // 1 - chi/2; the surface genus when the cover is connected
    bool connected;
    Int components; // number of connected components of the cover
};

/// Computes chi along both routes, insists they agree and are even, and
/// reports genus via chi = 2 - 2g.  For disconnected covers chi is the sum
/// over components and the genus field is the same affine rescaling of it.
inline GenusResult oracle_genus(const MonodromyDatum& d) {
    const Int chi_formula = chi_by_formula(d);
    const Int chi_cycles = chi_by_cycle_count(d);
    if (chi_formula != chi_cycles)
        throw ConsistencyFailure("Euler characteristic mismatch: formula " +
                                 std::to_string(chi_formula) + ", cycle count " +
                                 std::to_string(chi_cycles));
    if (mod_norm(chi_formula, 2) != 0)
        throw OddEulerCharacteristic("chi = " + std::to_string(chi_formula));

    Int subgroup_gcd = d.order().value();
    for (Int c : d.branch_images()) subgroup_gcd = std::gcd(subgroup_gcd, c);
    for (Int a : d.handle_images()) subgroup_gcd = std::gcd(subgroup_gcd, a);

    return {chi_formula, 1 - chi_formula / 2, is_connected(d), subgroup_gcd};
}

/// Post-composition with the automorphism x -> ux of Z/nZ.
inline MonodromyDatum twist_datum(const MonodromyDatum& d, Int u) {
    const Int n = d.order().value();
    if (!is_unit_mod(u, n))
        throw NotAUnit(std::to_string(u) + " is not a unit mod " + std::to_string(n));
    std::vector<Int> branch;
    branch.reserve(d.branch_images().size());
    for (Int c : d.branch_images()) branch.push_back(mod_norm(c * u, n));
    std::vector<Int> handles;
    handles.reserve(d.handle_images().size());
    for (Int a : d.handle_images()) handles.push_back(mod_norm(a * u, n));
    return MonodromyDatum(d.order(), d.quotient_genus(), std::move(branch), std::move(handles));
}

namespace detail {

// Every multiset (non-decreasing vector) over 1..n-1 of size <= max_size.
template <typename Visit>
void for_each_multiset(Int n, Int max_size, Visit&& visit) {
    std::vector<Int> current;
    auto rec = [&](auto&& self, Int min_value) -> void {
        visit(static_cast<const std::vector<Int>&>(current));
        if (static_cast<Int>(current.size()) == max_size) return;
        for (Int v = min_value; v < n; ++v) {
            current.push_back(v);
            self(self, v);
            current.pop_back();
        }
    };
    rec(rec, 1);
}

} // namespace detail

/// Exhaustive classification by brute force.  Iterates quotient genus and
/// branch count within the Riemann-Hurwitz bounds (each branch point eats at
/// least n - n/p of the Euler budget, p the least prime of n, so
/// nu <= 2(2g - 2 - n(2g' - 2)) / n), realizes every zero-sum tuple as
/// permutations, certifies connectivity on the sheets, keeps the data whose
/// cycle-counted genus is g, and attaches every marking whose orbit sizes,
/// also read off the permutation action, sum to m.  Covers over a genus-0
/// base need no handles; for g' >= 1 connectivity is certified with the
/// first handle mapping to a full rotation.
inline std::vector<ComponentLabel> oracle_enumerate(Int g, Int m, CyclicOrder order) {
    if (g < 0 || m < 0)
        throw InvalidDatum("g and m must be non-negative");
    if (2 * g - 2 + m <= 0)
        throw NotHyperbolic("2g - 2 + m = " + std::to_string(2 * g - 2 + m) +
                            " is not positive");
    const Int n = order.value();
    std::set<ComponentLabel> labels;

    for (Int gp = 0; gp <= g; ++gp) {
        const Int chi_budget = 2 * g - 2 - n * (2 * gp - 2);
        if (chi_budget < 0) continue;
        const Int nu_max = 2 * chi_budget / n;

        std::vector<Int> handles;
        if (gp >= 1) {
            handles.assign(static_cast<std::size_t>(2 * gp), 0);
            handles[0] = 1; // one full-rotation handle keeps the cover connected
        }

        detail::for_each_multiset(n, nu_max, [&](const std::vector<Int>& tuple) {
            Int sum = 0;
            for (Int c : tuple) sum += c;
            if (mod_norm(sum, n) != 0) return;

            const MonodromyDatum datum(order, gp, tuple, handles);
            if (!is_connected(datum)) return;
            const GenusResult result = oracle_genus(datum);
            if (result.genus != g) return;

            // Fibre sizes per class, from the cycle structure of the sheets.
            std::map<Int, Int> multiplicity;
            for (Int c : tuple) ++multiplicity[c];
            std::vector<Int> classes;
            std::vector<Int> class_count;
            std::vector<Int> orbit_size;
            for (const auto& [residue, count] : multiplicity) {
                classes.push_back(residue);
                class_count.push_back(count);
                orbit_size.push_back(cycle_count(rotation_permutation(n, residue)));
            }

            const HurwitzDatum k(order, tuple);
            std::vector<Int> r(static_cast<std::size_t>(n), 0);
            auto assign = [&](auto&& self, std::size_t idx, Int remaining) -> void {
                if (idx == classes.size()) {
                    if (remaining % n != 0) return;
                    r[0] = remaining / n;
                    labels.insert(
                        make_component_label(gp, BranchingDatum(k, MarkingVector(order, r))));
                    r[0] = 0;
                    return;
                }
                const Int size = orbit_size[idx];
                const Int cap = std::min(class_count[idx], remaining / size);
                for (Int count = 0; count <= cap; ++count) {
                    r[static_cast<std::size_t>(classes[idx])] = count;
                    self(self, idx + 1, remaining - count * size);
                }
                r[static_cast<std::size_t>(classes[idx])] = 0;
            };
            assign(assign, 0, m);
        });
    }
    return std::vector<ComponentLabel>(labels.begin(), labels.end());
}

} // namespace hurwitz::monodromy
