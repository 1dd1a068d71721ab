#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hurwitz {

using Int = std::int64_t;

// Least non-negative residue of x mod n.
inline Int mod_norm(Int x, Int n) {
    Int r = x % n;
    return r < 0 ? r + n : r;
}

inline bool is_unit_mod(Int u, Int n) {
    return std::gcd(mod_norm(u, n), n) == 1;
}

// Units of Z/nZ as residues in 1..n-1, ascending.
inline std::vector<Int> units_mod(Int n) {
    std::vector<Int> us;
    for (Int u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) us.push_back(u);
    return us;
}

inline Int totient(Int n) {
    Int count = 0;
    for (Int u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) ++count;
    return count;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        throw std::overflow_error("product exceeds 64-bit range");
    return a * b;
}

inline std::uint64_t factorial(Int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    std::uint64_t f = 1;
    for (Int i = 2; i <= n; ++i) f = checked_mul(f, static_cast<std::uint64_t>(i));
    return f;
}

// Exact binomial coefficient. Keeps intermediate products small by dividing
// out common factors after every step.
inline std::uint64_t binomial(Int n, Int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t num = 1, den = 1;
    for (Int i = 1; i <= k; ++i) {
        num = checked_mul(num, static_cast<std::uint64_t>(n - k + i));
        den *= static_cast<std::uint64_t>(i);
        const std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

} // namespace hurwitz
