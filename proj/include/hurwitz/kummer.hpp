#pragma once

// Divisor-level model for cyclic covers of the projective line.  A cover of
// order n cut out by w^n = f is encoded by div(f), a degree-zero divisor with
// labelled support.  Only the points whose multiplicity is nonzero mod n
// ramify, and the branch exponent at such a point is the multiplicity mod n,
// so the ramification locus can be strictly smaller than the support.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/core.hpp"

namespace hurwitz::kummer {

inline constexpr const char* kInfinityLabel = "inf";

struct DivisorEntry {
    std::string point;
    Int multiplicity;

    auto operator<=>(const DivisorEntry&) const = default;
};

/// Divisor of a rational function: distinct labelled points with nonzero
/// integer multiplicities whose total is exactly zero.
class KummerDivisor {
public:
    KummerDivisor(CyclicOrder order, std::vector<DivisorEntry> support)
        : n_(order), support_(std::move(support)) {
        Int total = 0;
        std::set<std::string> seen;
        for (const auto& entry : support_) {
            if (entry.multiplicity == 0)
                throw InvalidDatum("point " + entry.point + " has multiplicity 0");
            if (!seen.insert(entry.point).second)
                throw InvalidDatum("point " + entry.point + " appears twice");
            total += entry.multiplicity;
        }
        if (total != 0)
            throw InvalidDatum("divisor has total multiplicity " + std::to_string(total) +
                               ", expected 0");
    }

    CyclicOrder order() const noexcept { return n_; }
    const std::vector<DivisorEntry>& support() const noexcept { return support_; }

private:
    CyclicOrder n_;
    std::vector<DivisorEntry> support_;
};

struct BranchPoint {
    std::string point;
    Int exponent; // in 1..n-1

    auto operator<=>(const BranchPoint&) const = default;
};

/// Reads the branch locus off a divisor: keeps the points with multiplicity
/// nonzero mod n and reduces their multiplicities to branch exponents.  The
/// exponents of the surviving points always form a valid Hurwitz datum since
/// the divisor has exact degree zero.
inline std::pair<std::vector<BranchPoint>, HurwitzDatum> branch_data(const KummerDivisor& divisor) {
    const Int n = divisor.order().value();
    std::vector<BranchPoint> points;
    std::vector<Int> exponents;
    for (const auto& entry : divisor.support()) {
        const Int c = mod_norm(entry.multiplicity, n);
        if (c == 0) continue;
        points.push_back({entry.point, c});
        exponents.push_back(c);
    }
    return {std::move(points), HurwitzDatum(divisor.order(), std::move(exponents))};
}

/// Produces a divisor realizing the given Hurwitz datum: one fresh affine
/// point per exponent, using the canonical lift in 1..n-1, balanced by a pole
/// at infinity.  The pole order is divisible by n, so infinity stays
/// unramified and branch_data returns exactly the input datum.
inline KummerDivisor realize_hurwitz(CyclicOrder order, const HurwitzDatum& k) {
    std::vector<DivisorEntry> support;
    support.reserve(k.exponents().size() + 1);
    Int total = 0;
    Int index = 1;
    for (Int e : k.exponents()) {
        support.push_back({"q" + std::to_string(index++), e});
        total += e;
    }
    if (total != 0) support.push_back({kInfinityLabel, -total});
    return KummerDivisor(order, std::move(support));
}

/// Scales every multiplicity by a unit mod n.  Matches the unit twist of the
/// extracted branch data.
inline KummerDivisor unit_scale(const KummerDivisor& divisor, Int u) {
    const Int n = divisor.order().value();
    if (!is_unit_mod(u, n))
        throw NotAUnit(std::to_string(u) + " is not a unit mod " + std::to_string(n));
    std::vector<DivisorEntry> support = divisor.support();
    for (auto& entry : support) entry.multiplicity *= u;
    return KummerDivisor(divisor.order(), std::move(support));
}

/// Order of the Galois group of a generic stratum: the marked branch points
/// of each class are freely interchangeable, so the group is the product of
/// symmetric groups on the classes, of order prod_i (exponent_count(k, i))!.
inline std::uint64_t generic_galois_group_order(const HurwitzDatum& k) {
    std::uint64_t order = 1;
    const auto& exps = k.exponents();
    for (std::size_t i = 0; i < exps.size();) {
        std::size_t j = i;
        while (j < exps.size() && exps[j] == exps[i]) ++j;
        order = checked_mul(order, factorial(static_cast<Int>(j - i)));
        i = j;
    }
    return order;
}

/// Branch points of a datum grouped into deck-orbit blocks by branching
/// class.  Point ids are global indices 0..nu-1; blocks are disjoint and
/// block sizes match the exponent counts by construction.
class GenericOrbitModel {
public:
    struct Block {
        Int residue;
        std::vector<Int> points;
    };

    explicit GenericOrbitModel(HurwitzDatum k) : k_(std::move(k)) {
        const auto& exps = k_.exponents();
        Int id = 0;
        for (std::size_t i = 0; i < exps.size();) {
            std::size_t j = i;
            Block block{exps[i], {}};
            while (j < exps.size() && exps[j] == exps[i]) {
                block.points.push_back(id++);
                ++j;
            }
            blocks_.push_back(std::move(block));
            i = j;
        }
    }

    const HurwitzDatum& hurwitz() const noexcept { return k_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }

private:
    HurwitzDatum k_;
    std::vector<Block> blocks_;
};

namespace detail {

// Explicitly enumerates the r-element subsets of block, invoking next() once
// per subset.
template <typename Next>
void for_each_subset(const std::vector<Int>& block, Int r, Next&& next) {
    std::vector<Int> chosen;
    chosen.reserve(static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<Int>(chosen.size()) == r) {
            next();
            return;
        }
        const Int missing = r - static_cast<Int>(chosen.size());
        for (std::size_t p = from; p + static_cast<std::size_t>(missing) <= block.size(); ++p) {
            chosen.push_back(block[p]);
            self(self, p + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace detail

/// Counts the fibre of the forgetful map over a generic point by listing,
/// block by block, every way of selecting which branch points are marked.
/// No binomial formula is used; the combined choices are enumerated one by
/// one, which keeps this an independent check of psi_degree.
inline std::uint64_t stratum_fiber_count(const BranchingDatum& kr) {
    const GenericOrbitModel model(kr.k());
    std::vector<std::pair<const std::vector<Int>*, Int>> wanted;
    for (const auto& block : model.blocks()) {
        const Int want = kr.r().at(block.residue);
        if (want > static_cast<Int>(block.points.size()))
            throw InvalidMarking("r[" + std::to_string(block.residue) + "] exceeds block size");
        wanted.emplace_back(&block.points, want);
    }
    // Residues absent from k must carry no marked branch orbits.
    const Int n = kr.order().value();
    for (Int i = 1; i < n; ++i)
        if (kr.r().at(i) > 0 && exponent_count(kr.k(), i) == 0)
            throw InvalidMarking("r[" + std::to_string(i) + "] marks a class with no branch points");

    std::uint64_t combined = 0;
    auto rec = [&](auto&& self, std::size_t block_index) -> void {
        if (block_index == wanted.size()) {
            ++combined;
            return;
        }
        const auto& [points, want] = wanted[block_index];
        detail::for_each_subset(*points, want, [&] { self(self, block_index + 1); });
    };
    rec(rec, 0);
    return combined;
}

} // namespace hurwitz::kummer
