#pragma once

// Direct enumeration of branching data and component labels, driven by the
// closed-form genus and degree expressions.  The monodromy oracle re-derives
// the same sets by brute force; the two must agree.

#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "hurwitz/core.hpp"

namespace hurwitz {

/// All pairs (g', k) with rh_genus(n, g', k) = g that are admissible for a
/// connected cover (over genus 0 the exponents must generate Z/nZ).  Ordered
/// by g' ascending, then by the exponent multiset lexicographically.
inline std::vector<std::pair<Int, HurwitzDatum>> enumerate_hurwitz_data(Int g, CyclicOrder order) {
    if (g < 0) throw InvalidDatum("genus must be non-negative");
    const Int n = order.value();
    std::vector<std::pair<Int, HurwitzDatum>> out;

    for (Int gp = 0; gp <= g; ++gp) {
        // Remaining Euler defect sum_i (n - gcd(n, k_i)) once g' is fixed.
        const Int target = 2 * g - 2 - n * (2 * gp - 2);
        if (target < 0) continue;

        std::vector<Int> current;
        Int sum = 0;
        auto rec = [&](auto&& self, Int min_value, Int remaining) -> void {
            if (remaining == 0) {
                if (mod_norm(sum, n) != 0) return;
                Int d = n;
                for (Int e : current) d = std::gcd(d, e);
                if (gp == 0 && d != 1) return; // disconnects over genus 0
                out.emplace_back(gp, HurwitzDatum(order, current));
                return;
            }
            for (Int v = min_value; v < n; ++v) {
                const Int defect = n - std::gcd(n, v);
                if (defect > remaining) continue;
                current.push_back(v);
                sum += v;
                self(self, v, remaining - defect);
                sum -= v;
                current.pop_back();
            }
        };
        rec(rec, 1, target);
    }
    return out;
}

/// All marking vectors r with marked degree m compatible with k, in
/// lexicographic order of the vector (r[0], r[1], ..., r[n-1]).
inline std::vector<MarkingVector> enumerate_markings(const HurwitzDatum& k, Int m) {
    if (m < 0) throw InvalidDatum("marked degree must be non-negative");
    const CyclicOrder order = k.order();
    const Int n = order.value();
    std::vector<MarkingVector> out;

    std::vector<Int> r(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, Int i, Int remaining) -> void {
        if (i == n) {
            if (remaining == 0) out.emplace_back(order, r);
            return;
        }
        const Int avail = exponent_count(k, i);
        const Int weight = std::gcd(n, i);
        const Int cap = std::min(avail, remaining / weight);
        for (Int count = 0; count <= cap; ++count) {
            r[static_cast<std::size_t>(i)] = count;
            self(self, i + 1, remaining - count * weight);
        }
        r[static_cast<std::size_t>(i)] = 0;
    };

    for (Int r0 = 0; r0 <= m / n; ++r0) {
        r[0] = r0;
        rec(rec, 1, m - n * r0);
    }
    return out;
}

/// Canonical labels of the irreducible components of the special locus for
/// (g, m, n): every admissible stratum is enumerated, canonicalized under the
/// unit action and deduplicated.  With no_etale_only set, components whose
/// cover factors through a nontrivial etale cover are dropped.  Output is
/// sorted by (g', canonical exponents, canonical marking).
inline std::vector<ComponentLabel> enumerate_components(Int g, Int m, CyclicOrder order,
                                                        bool no_etale_only = false) {
    if (g < 0 || m < 0)
        throw InvalidDatum("g and m must be non-negative");
    if (2 * g - 2 + m <= 0)
        throw NotHyperbolic("2g - 2 + m = " + std::to_string(2 * g - 2 + m) +
                            " is not positive");

    std::set<ComponentLabel> labels;
    for (const auto& [gp, k] : enumerate_hurwitz_data(g, order)) {
        for (const MarkingVector& r : enumerate_markings(k, m)) {
            const BranchingDatum kr(k, r);
            const auto report = validate_branching(g, m, order, gp, kr);
            if (!report.ok())
                throw ConsistencyFailure("enumerated stratum fails validation: " +
                                         report.violations.front().detail);
            labels.insert(make_component_label(gp, kr));
        }
    }

    std::vector<ComponentLabel> out;
    for (const ComponentLabel& label : labels)
        if (!no_etale_only || label.etale_part == 1) out.push_back(label);
    return out;
}

} // namespace hurwitz
