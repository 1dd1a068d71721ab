#pragma once

// Exact combinatorics of branching data for cyclic covers of curves.
//
// A cover with deck group Z/nZ is described away from the marked fibres by a
// Hurwitz datum: the multiset of its branch exponents mod n, which are all
// nonzero and sum to zero.  A marking vector r counts marked deck-group
// orbits by their branching class; index 0 counts freely permuted orbits.
// The unit group (Z/nZ)^* acts diagonally on both, and its orbits label the
// irreducible components of the corresponding special loci in moduli space.

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/numeric.hpp"

namespace hurwitz {

// Order n >= 2 of the cyclic deck group.
class CyclicOrder {
public:
    explicit CyclicOrder(Int n) : n_(n) {
        if (n < 2)
            throw InvalidDatum("cyclic order must be at least 2, got " + std::to_string(n));
    }
    Int value() const noexcept { return n_; }
    auto operator<=>(const CyclicOrder&) const = default;

private:
    Int n_;
};

/// Multiset of branch exponents mod n: every class nonzero, total zero mod n.
/// Stored sorted ascending with values in 1..n-1; arbitrary integer
/// representatives are accepted and reduced.
class HurwitzDatum {
public:
    HurwitzDatum(CyclicOrder order, std::vector<Int> exponents) : n_(order) {
        const Int n = n_.value();
        exponents_.reserve(exponents.size());
        Int sum = 0;
        for (Int e : exponents) {
            const Int c = mod_norm(e, n);
            if (c == 0)
                throw InvalidDatum("branch exponent " + std::to_string(e) +
                                   " is divisible by " + std::to_string(n));
            exponents_.push_back(c);
            sum = mod_norm(sum + c, n);
        }
        if (sum != 0)
            throw InvalidDatum("branch exponents sum to " + std::to_string(sum) +
                               " mod " + std::to_string(n) + ", expected 0");
        std::sort(exponents_.begin(), exponents_.end());
    }

    CyclicOrder order() const noexcept { return n_; }
    const std::vector<Int>& exponents() const noexcept { return exponents_; }
    Int nu() const noexcept { return static_cast<Int>(exponents_.size()); }

    auto operator<=>(const HurwitzDatum&) const = default;

private:
    CyclicOrder n_;
    std::vector<Int> exponents_; // sorted, each in 1..n-1
};

/// Number of branch exponents congruent to the given residue.  Residue 0
/// never occurs in a datum, so its count is 0.
inline Int exponent_count(const HurwitzDatum& k, Int residue) {
    const Int c = mod_norm(residue, k.order().value());
    if (c == 0) return 0;
    const auto [lo, hi] = std::equal_range(k.exponents().begin(), k.exponents().end(), c);
    return static_cast<Int>(hi - lo);
}

/// Marked-orbit counts indexed by branching class 0..n-1.  Entry 0 counts
/// freely permuted marked orbits (full deck orbits of size n); entry i != 0
/// counts marked orbits lying over branch points of class i.
class MarkingVector {
public:
    explicit MarkingVector(CyclicOrder order)
        : n_(order), counts_(static_cast<std::size_t>(order.value()), 0) {}

    MarkingVector(CyclicOrder order, std::vector<Int> counts)
        : n_(order), counts_(std::move(counts)) {
        if (static_cast<Int>(counts_.size()) != n_.value())
            throw InvalidDatum("marking vector has length " + std::to_string(counts_.size()) +
                               ", expected " + std::to_string(n_.value()));
        for (Int c : counts_)
            if (c < 0) throw InvalidDatum("marking count is negative");
    }

    CyclicOrder order() const noexcept { return n_; }
    const std::vector<Int>& counts() const noexcept { return counts_; }
    Int at(Int residue) const { return counts_[static_cast<std::size_t>(mod_norm(residue, n_.value()))]; }
    Int total_orbits() const { return std::accumulate(counts_.begin(), counts_.end(), Int{0}); }

    // True when every marked orbit is freely permuted.
    bool free_support_only() const {
        for (std::size_t i = 1; i < counts_.size(); ++i)
            if (counts_[i] != 0) return false;
        return true;
    }

    auto operator<=>(const MarkingVector&) const = default;

private:
    CyclicOrder n_;
    std::vector<Int> counts_;
};

/// A Hurwitz datum together with a compatible marking vector.  Compatibility
/// means r[i] <= exponent_count(k, i) for every i != 0: marked branch orbits
/// sit over distinct branch points of the matching class.
class BranchingDatum {
public:
    BranchingDatum(HurwitzDatum k, MarkingVector r) : k_(std::move(k)), r_(std::move(r)) {
        if (k_.order() != r_.order())
            throw InvalidDatum("branching datum mixes cyclic orders");
        const Int n = k_.order().value();
        for (Int i = 1; i < n; ++i) {
            const Int avail = exponent_count(k_, i);
            if (r_.at(i) > avail)
                throw InvalidMarking("r[" + std::to_string(i) + "] = " + std::to_string(r_.at(i)) +
                                     " exceeds the " + std::to_string(avail) +
                                     " branch points of class " + std::to_string(i));
        }
    }

    const HurwitzDatum& k() const noexcept { return k_; }
    const MarkingVector& r() const noexcept { return r_; }
    CyclicOrder order() const noexcept { return k_.order(); }

    auto operator<=>(const BranchingDatum&) const = default;

private:
    HurwitzDatum k_;
    MarkingVector r_;
};

/// Riemann-Hurwitz over raw exponent representatives.  Solves
///   2g - 2 = n(2g' - 2) + sum_i (n - gcd(n, k_i))
/// for g.  The zero-sum condition is not assumed here; entries must still be
/// nonzero mod n.  Raises NonIntegralGenus when the right-hand side is odd
/// and NegativeGenus when no curve can carry the datum.
inline Int rh_genus_from_exponents(CyclicOrder order, Int g_prime, std::span<const Int> exponents) {
    if (g_prime < 0)
        throw InvalidDatum("quotient genus must be non-negative, got " + std::to_string(g_prime));
    const Int n = order.value();
    Int rhs = n * (2 * g_prime - 2);
    for (Int e : exponents) {
        const Int c = mod_norm(e, n);
        if (c == 0)
            throw InvalidDatum("branch exponent " + std::to_string(e) +
                               " is divisible by " + std::to_string(n));
        rhs += n - std::gcd(n, c);
    }
    if (rhs % 2 != 0)
        throw NonIntegralGenus("2g - 2 = " + std::to_string(rhs) + " is odd");
    const Int g = rhs / 2 + 1;
    if (g < 0)
        throw NegativeGenus("datum forces genus " + std::to_string(g) +
                            "; no connected curve carries it");
    return g;
}

inline Int rh_genus(CyclicOrder order, Int g_prime, const HurwitzDatum& k) {
    return rh_genus_from_exponents(order, g_prime, k.exponents());
}

/// Total number of marked points upstairs: a free orbit has size n, a marked
/// orbit of class i != 0 has size gcd(n, i) (its stabiliser is the inertia
/// subgroup of order n / gcd(n, i)).
inline Int marked_degree(CyclicOrder order, const MarkingVector& r) {
    if (r.order() != order)
        throw InvalidDatum("marking vector order mismatch");
    const Int n = order.value();
    Int m = n * r.at(0);
    for (Int i = 1; i < n; ++i) m += std::gcd(n, i) * r.at(i);
    return m;
}

/// Diagonal action of u in (Z/nZ)^*: exponents are scaled by u and the
/// marking vector is reindexed by r'[u i mod n] = r[i].  Index 0 is fixed.
inline HurwitzDatum unit_twist(const HurwitzDatum& k, Int u) {
    const Int n = k.order().value();
    if (!is_unit_mod(u, n))
        throw NotAUnit(std::to_string(u) + " is not a unit mod " + std::to_string(n));
    std::vector<Int> scaled;
    scaled.reserve(k.exponents().size());
    for (Int e : k.exponents()) scaled.push_back(mod_norm(e * u, n));
    return HurwitzDatum(k.order(), std::move(scaled));
}

inline MarkingVector unit_twist(const MarkingVector& r, Int u) {
    const Int n = r.order().value();
    if (!is_unit_mod(u, n))
        throw NotAUnit(std::to_string(u) + " is not a unit mod " + std::to_string(n));
    std::vector<Int> moved(static_cast<std::size_t>(n), 0);
    for (Int i = 0; i < n; ++i)
        moved[static_cast<std::size_t>(mod_norm(i * u, n))] = r.at(i);
    return MarkingVector(r.order(), std::move(moved));
}

inline BranchingDatum unit_twist(const BranchingDatum& kr, Int u) {
    return BranchingDatum(unit_twist(kr.k(), u), unit_twist(kr.r(), u));
}

/// Orbit of kr under all units mod n, sorted ascending and deduplicated.
/// The order compares the sorted exponent list first, then the marking
/// vector from index 0 upward.
inline std::vector<BranchingDatum> unit_orbit(const BranchingDatum& kr) {
    std::vector<BranchingDatum> orbit;
    for (Int u : units_mod(kr.order().value())) orbit.push_back(unit_twist(kr, u));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

/// Lexicographically least representative of the unit orbit of kr.  Two
/// branching data are canonically equal exactly when they label the same
/// irreducible component.
inline BranchingDatum canonicalize(const BranchingDatum& kr) {
    return unit_orbit(kr).front();
}

/// gcd of n and all branch exponents; the subgroup of Z/nZ they generate has
/// index etale_part, so the cover factors through an etale cover of that
/// degree.  An empty datum yields n: a completely unramified cover.
inline Int etale_part(CyclicOrder order, const HurwitzDatum& k) {
    Int d = order.value();
    for (Int e : k.exponents()) d = std::gcd(d, e);
    return d;
}

/// Degree of the forgetful map down the stratum with the marked branch
/// points forgotten: one binomial factor per branching class,
///   prod_{i != 0} C(exponent_count(k, i), r[i]).
inline std::uint64_t psi_degree(const BranchingDatum& kr) {
    const Int n = kr.order().value();
    std::uint64_t degree = 1;
    for (Int i = 1; i < n; ++i) {
        const Int avail = exponent_count(kr.k(), i);
        const Int want = kr.r().at(i);
        if (want > avail)
            throw InvalidMarking("r[" + std::to_string(i) + "] exceeds branch count");
        if (want > 0) degree = checked_mul(degree, binomial(avail, want));
    }
    return degree;
}

// ---------------------------------------------------------------------------
// Admissibility of a branching datum for given (g, m, n, g').

enum class Rule {
    Parameters,       // g, m, g' all non-negative
    NonzeroExponents, // no branch exponent divisible by n
    SumZero,          // exponents sum to 0 mod n
    MarkingShape,     // r has length n with non-negative entries
    GenusMatch,       // Riemann-Hurwitz reproduces g exactly
    MarkedDegree,     // marked point count reproduces m exactly
    MarkingBound,     // r[i] <= exponent_count(k, i) for i != 0
    Connectivity,     // over genus 0 the exponents must generate Z/nZ
    Hyperbolicity,    // 2g - 2 + m > 0
};

inline const char* rule_name(Rule rule) {
    switch (rule) {
        case Rule::Parameters: return "parameters";
        case Rule::NonzeroExponents: return "nonzero-exponents";
        case Rule::SumZero: return "sum-zero";
        case Rule::MarkingShape: return "marking-shape";
        case Rule::GenusMatch: return "genus-match";
        case Rule::MarkedDegree: return "marked-degree";
        case Rule::MarkingBound: return "marking-bound";
        case Rule::Connectivity: return "connectivity";
        case Rule::Hyperbolicity: return "hyperbolicity";
    }
    return "unknown";
}

struct Violation {
    Rule rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool violated(Rule rule) const {
        for (const auto& v : violations)
            if (v.rule == rule) return true;
        return false;
    }
};

/// Gatekeeper over raw integer data: checks every admissibility rule
/// independently and reports all violations, not just the first.
inline ValidationReport validate_branching(Int g, Int m, CyclicOrder order, Int g_prime,
                                           std::span<const Int> exponents,
                                           std::span<const Int> marking) {
    const Int n = order.value();
    ValidationReport report;
    auto flag = [&report](Rule rule, std::string detail) {
        report.violations.push_back({rule, std::move(detail)});
    };

    if (g < 0 || m < 0 || g_prime < 0)
        flag(Rule::Parameters, "g, m and g' must be non-negative");

    bool exponents_ok = true;
    Int sum = 0;
    std::vector<Int> residues;
    residues.reserve(exponents.size());
    for (Int e : exponents) {
        const Int c = mod_norm(e, n);
        residues.push_back(c);
        sum = mod_norm(sum + c, n);
        if (c == 0) exponents_ok = false;
    }
    if (!exponents_ok)
        flag(Rule::NonzeroExponents, "some branch exponent is divisible by n");
    if (sum != 0)
        flag(Rule::SumZero, "branch exponents sum to " + std::to_string(sum) + " mod " +
                                std::to_string(n));

    bool shape_ok = static_cast<Int>(marking.size()) == n;
    if (shape_ok)
        for (Int c : marking)
            if (c < 0) shape_ok = false;
    if (!shape_ok)
        flag(Rule::MarkingShape, "marking vector must have length n with entries >= 0");

    if (exponents_ok) {
        try {
            const Int computed = rh_genus_from_exponents(order, std::max<Int>(g_prime, 0), exponents);
            if (computed != g)
                flag(Rule::GenusMatch, "Riemann-Hurwitz gives genus " + std::to_string(computed) +
                                           ", expected " + std::to_string(g));
        } catch (const Error& e) {
            flag(Rule::GenusMatch, e.what());
        }
    }

    if (shape_ok) {
        Int degree = n * marking[0];
        for (Int i = 1; i < n; ++i) degree += std::gcd(n, i) * marking[static_cast<std::size_t>(i)];
        if (degree != m)
            flag(Rule::MarkedDegree, "marking accounts for " + std::to_string(degree) +
                                         " points, expected " + std::to_string(m));

        if (exponents_ok) {
            std::vector<Int> counts(static_cast<std::size_t>(n), 0);
            for (Int c : residues) ++counts[static_cast<std::size_t>(c)];
            for (Int i = 1; i < n; ++i)
                if (marking[static_cast<std::size_t>(i)] > counts[static_cast<std::size_t>(i)]) {
                    flag(Rule::MarkingBound, "r[" + std::to_string(i) + "] exceeds the " +
                                                 std::to_string(counts[static_cast<std::size_t>(i)]) +
                                                 " branch points of class " + std::to_string(i));
                    break;
                }
        }
    }

    if (g_prime == 0) {
        Int d = n;
        for (Int c : residues) d = std::gcd(d, c);
        if (d != 1)
            flag(Rule::Connectivity, "over genus 0 the exponents generate a subgroup of index " +
                                         std::to_string(d) + "; the cover disconnects");
    }

    if (2 * g - 2 + m <= 0)
        flag(Rule::Hyperbolicity, "2g - 2 + m = " + std::to_string(2 * g - 2 + m) +
                                      " is not positive");

    return report;
}

inline ValidationReport validate_branching(Int g, Int m, CyclicOrder order, Int g_prime,
                                           const BranchingDatum& kr) {
    return validate_branching(g, m, order, g_prime, kr.k().exponents(), kr.r().counts());
}

// ---------------------------------------------------------------------------
// Component labels.

/// Canonical label of one irreducible component of the special locus for
/// (g, m, n): quotient genus, the canonical representative of the unit orbit
/// of its branching datum, and derived metadata.
struct ComponentLabel {
    Int g;
    Int m;
    CyclicOrder n;
    Int g_prime;
    BranchingDatum canonical_kr;
    Int aut_orbit_size;
    std::uint64_t psi_degree;
    Int etale_part;
    Int exponent_modulus; // n / etale_part; 1 means the inertia pins nothing

    friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;

    // Atlas order: quotient genus first, then canonical exponents, then the
    // canonical marking vector.
    friend bool operator<(const ComponentLabel& a, const ComponentLabel& b) {
        const auto ta = std::tie(a.n, a.g, a.m, a.g_prime, a.canonical_kr);
        const auto tb = std::tie(b.n, b.g, b.m, b.g_prime, b.canonical_kr);
        return ta < tb;
    }
};

/// Builds the label of the component containing the stratum (g', kr).  The
/// ambient (g, m) are derived from the datum itself; inadmissible strata are
/// rejected with the full violation list.
inline ComponentLabel make_component_label(Int g_prime, const BranchingDatum& kr) {
    const CyclicOrder order = kr.order();
    const Int g = rh_genus(order, g_prime, kr.k());
    const Int m = marked_degree(order, kr.r());
    if (2 * g - 2 + m <= 0)
        throw NotHyperbolic("2g - 2 + m = " + std::to_string(2 * g - 2 + m) +
                            " is not positive for g = " + std::to_string(g) + ", m = " +
                            std::to_string(m));
    const auto report = validate_branching(g, m, order, g_prime, kr);
    if (!report.ok()) {
        std::string what = "stratum is inadmissible:";
        for (const auto& v : report.violations)
            what += std::string(" [") + rule_name(v.rule) + "] " + v.detail;
        throw InvalidDatum(what);
    }

    const auto orbit = unit_orbit(kr);
    const Int d = etale_part(order, kr.k());
    ComponentLabel label{g,
                         m,
                         order,
                         g_prime,
                         orbit.front(),
                         static_cast<Int>(orbit.size()),
                         psi_degree(orbit.front()),
                         d,
                         order.value() / d};

    // Cheap internal invariants; violations would mean the action code is broken.
    if (totient(order.value()) % label.aut_orbit_size != 0)
        throw ConsistencyFailure("orbit size does not divide the unit group order");
    if (label.exponent_modulus * label.etale_part != order.value())
        throw ConsistencyFailure("exponent modulus times etale part misses n");
    if (canonicalize(label.canonical_kr) != label.canonical_kr)
        throw ConsistencyFailure("canonical representative is not canonical");
    return label;
}

} // namespace hurwitz
