#pragma once

// Mod-n arithmetic of Galois descent for cyclic covers.  A field automorphism
// conjugates the deck group through some exponent l, and each branch point of
// class k_i pins l modulo the inertia order a_i = n / gcd(n, k_i).  The
// system l = u (mod a_i) therefore determines l modulo lcm(a_i), which
// equals n / etale_part: the exponent is pinned exactly when the cover
// admits no intermediate etale factorization.

#include <algorithm>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "hurwitz/core.hpp"

namespace hurwitz::galois {

/// Inertia orders a_i = n / gcd(n, k_i) of the branch exponents.  Every a_i
/// is a divisor of n with a_i >= 2 because the exponents are nonzero mod n.
inline std::vector<Int> inertia_orders(CyclicOrder order, std::span<const Int> exponents) {
    const Int n = order.value();
    std::vector<Int> moduli;
    moduli.reserve(exponents.size());
    for (Int e : exponents) {
        const Int c = mod_norm(e, n);
        if (c == 0)
            throw InvalidDatum("branch exponent " + std::to_string(e) + " is divisible by " +
                               std::to_string(n));
        moduli.push_back(n / std::gcd(n, c));
    }
    return moduli;
}

/// lcm of the inertia orders: the modulus to which the branch exponents pin
/// the descent exponent.  An empty list pins nothing and is refused, so a
/// caller can never silently conclude "exponent determined" for an etale
/// cover.
inline Int determined_exponent_modulus(CyclicOrder order, std::span<const Int> exponents) {
    if (exponents.empty())
        throw EmptyInertia("no branch exponents: the cover is etale and pins nothing");
    Int modulus = 1;
    for (Int a : inertia_orders(order, exponents)) modulus = std::lcm(modulus, a);
    return modulus;
}

inline Int determined_exponent_modulus(CyclicOrder order, const HurwitzDatum& k) {
    return determined_exponent_modulus(order, std::span<const Int>(k.exponents()));
}

/// All residues l mod n with l = u (mod a_i) for every inertia order a_i,
/// sorted ascending.  u must be a unit mod n.  The solution set is the coset
/// u + M Z/nZ for M the determined modulus, hence has exactly
/// n / M = etale_part elements; it degenerates to {u} exactly when the cover
/// has no etale factorization.  The members need not all be units: for
/// n = 6 and exponents (3, 3) the set for u = 1 is {1, 3, 5}, and 3 is not
/// a unit mod 6.
inline std::vector<Int> inertia_exponent_solutions(CyclicOrder order,
                                                   std::span<const Int> exponents, Int u) {
    const Int n = order.value();
    if (!is_unit_mod(u, n))
        throw NotAUnit(std::to_string(u) + " is not a unit mod " + std::to_string(n));
    if (exponents.empty())
        throw EmptyInertia("no branch exponents: every exponent solves the empty system");
    const std::vector<Int> moduli = inertia_orders(order, exponents);
    const Int base = mod_norm(u, n);

    std::vector<Int> solutions;
    for (Int l = 0; l < n; ++l) {
        bool all = true;
        for (Int a : moduli)
            if (mod_norm(l - base, a) != 0) {
                all = false;
                break;
            }
        if (all) solutions.push_back(l);
    }
    return solutions;
}

inline std::vector<Int> inertia_exponent_solutions(CyclicOrder order, const HurwitzDatum& k,
                                                   Int u) {
    return inertia_exponent_solutions(order, std::span<const Int>(k.exponents()), u);
}

/// The congruence system l = u (mod a_i) bundled with its derived data.
class ExponentConstraintSystem {
public:
    ExponentConstraintSystem(CyclicOrder order, std::vector<Int> exponents, Int u)
        : n_(order), exponents_(std::move(exponents)), unit_(mod_norm(u, order.value())) {
        if (!is_unit_mod(unit_, n_.value()))
            throw NotAUnit(std::to_string(u) + " is not a unit mod " +
                           std::to_string(n_.value()));
        moduli_ = inertia_orders(n_, exponents_);
    }

    CyclicOrder order() const noexcept { return n_; }
    const std::vector<Int>& exponents() const noexcept { return exponents_; }
    Int unit() const noexcept { return unit_; }
    const std::vector<Int>& moduli() const noexcept { return moduli_; }

    Int modulus() const { return determined_exponent_modulus(n_, exponents_); }
    std::vector<Int> solutions() const {
        return inertia_exponent_solutions(n_, std::span<const Int>(exponents_), unit_);
    }
    Int etale_part() const {
        Int d = n_.value();
        for (Int e : exponents_) d = std::gcd(d, mod_norm(e, n_.value()));
        return d;
    }

private:
    CyclicOrder n_;
    std::vector<Int> exponents_;
    Int unit_;
    std::vector<Int> moduli_;
};

// ---------------------------------------------------------------------------
// Orbit bookkeeping for a whole atlas.

struct TwistOrbitEntry {
    ComponentLabel label;
    std::vector<BranchingDatum> strata; // the unit orbit, ascending
    Int stabilizer_size;
    // For each unit u, the permutation it induces on the strata: entry j is
    // the index of unit_twist(strata[j], u).
    std::vector<std::pair<Int, std::vector<std::size_t>>> unit_actions;
};

struct TwistOrbitReport {
    std::vector<TwistOrbitEntry> entries;
};

/// For every label, lists its strata and the permutation each unit induces
/// on them.  Raises ConsistencyFailure if a twist ever leaves an orbit,
/// changes a canonical form, or breaks the orbit-stabilizer count.
inline TwistOrbitReport twist_orbit_report(const std::vector<ComponentLabel>& atlas) {
    TwistOrbitReport report;
    for (const ComponentLabel& label : atlas) {
        const Int n = label.n.value();
        const std::vector<Int> units = units_mod(n);
        TwistOrbitEntry entry{label, unit_orbit(label.canonical_kr), 0, {}};

        if (entry.strata.front() != label.canonical_kr)
            throw ConsistencyFailure("label representative is not canonical");
        if (static_cast<Int>(entry.strata.size()) != label.aut_orbit_size)
            throw ConsistencyFailure("orbit size disagrees with the label metadata");

        for (Int u : units) {
            std::vector<std::size_t> images;
            images.reserve(entry.strata.size());
            for (const BranchingDatum& stratum : entry.strata) {
                const BranchingDatum twisted = unit_twist(stratum, u);
                if (canonicalize(twisted) != label.canonical_kr)
                    throw ConsistencyFailure("unit twist changed the canonical form");
                const auto it = std::lower_bound(entry.strata.begin(), entry.strata.end(), twisted);
                if (it == entry.strata.end() || *it != twisted)
                    throw ConsistencyFailure("unit twist left the orbit");
                images.push_back(static_cast<std::size_t>(it - entry.strata.begin()));
            }
            // The canonical representative sits at index 0; u stabilizes it
            // exactly when the induced permutation fixes that index.
            if (images[0] == 0) ++entry.stabilizer_size;
            entry.unit_actions.emplace_back(u, std::move(images));
        }

        if (entry.stabilizer_size * static_cast<Int>(entry.strata.size()) != totient(n))
            throw ConsistencyFailure("orbit-stabilizer count fails for a label");
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace hurwitz::galois
