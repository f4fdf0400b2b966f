#ifndef PGRAPH_EXTREMAL_HPP
#define PGRAPH_EXTREMAL_HPP

#include <cstdint>

#include "pgraph/degree.hpp"
#include "pgraph/partition.hpp"

namespace pgraph {

/// Position of n in its triangular interval and the maximal degree there.
/// Invariants: T(rho) <= n < T(rho + 1), nu <= rho,
/// delta = rho (rho - 1) + beta(rho, nu).
struct ExtremalContext {
    mass_t n = 0;
    std::uint64_t rho = 0;
    std::uint64_t nu = 0;
    degree_t delta = 0;

    friend bool operator==(ExtremalContext const &, ExtremalContext const &) = default;
};

/// floor(sqrt(x)), exact.
std::uint64_t isqrt(std::uint64_t x) noexcept;

constexpr std::uint64_t triangular(std::uint64_t r) noexcept { return r * (r + 1) / 2; }

/// Largest r with triangular(r) <= n. Throws std::domain_error for n = 0.
std::uint64_t rho(mass_t n);

/// Total weight of the k lightest items of {1,1,2,2,3,3,...}.
std::uint64_t min_weight(std::uint64_t k) noexcept;

/// Most items of {1,1,2,2,...,r,r} fitting under weight s, via the
/// square/pronic threshold rule. Throws std::domain_error for r = 0.
std::uint64_t beta(std::uint64_t r, std::uint64_t s);

/// Delta_n with its interval coordinates. Throws std::domain_error for n = 0.
ExtremalContext max_degree(mass_t n);

/// Whether Delta rises from T_t + nu to T_t + nu + 1, i.e. nu + 1 is a
/// square or a pronic number. Requires t >= 1 and nu < t.
bool delta_increment_is_jump(std::uint64_t t, std::uint64_t nu);

/// 2 floor(sqrt(nu)) - 1 <= beta <= 2 floor(sqrt(nu)) (lower bound 0 at
/// nu = 0) and 2 rho <= 2n - Delta_n <= 4 rho.
bool surplus_bounds_hold(mass_t n);

} // namespace pgraph

#endif
