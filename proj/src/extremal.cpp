#include "pgraph/extremal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pgraph {

std::uint64_t isqrt(std::uint64_t x) noexcept
{
    using u128 = unsigned __int128;
    auto q = std::uint64_t(std::sqrt(double(x)));
    while (u128(q) * q > x)
        --q;
    while (u128(q + 1) * (q + 1) <= x)
        ++q;
    return q;
}

std::uint64_t rho(mass_t n)
{
    if (n == 0)
        throw std::domain_error("rho(n) requires n >= 1");
    // floor((sqrt(8n + 1) - 1) / 2), evaluated without overflowing 8n + 1
    using u128 = unsigned __int128;
    auto tri = [](std::uint64_t r) { return u128(r) * (r + 1) / 2; };
    std::uint64_t r;
    if (n < (std::uint64_t(1) << 60))
        r = (isqrt(8 * n + 1) - 1) / 2;
    else
        r = std::uint64_t(std::sqrt(2.0L * (long double)n));
    while (tri(r) > n)
        --r;
    while (tri(r + 1) <= n)
        ++r;
    return r;
}

std::uint64_t min_weight(std::uint64_t k) noexcept
{
    if (k == 0)
        return 0;
    std::uint64_t q = (k + 1) / 2;
    return k % 2 ? q * q : q * (q + 1);
}

std::uint64_t beta(std::uint64_t r, std::uint64_t s)
{
    if (r == 0)
        throw std::domain_error("beta(r, s) requires r >= 1");
    if (s >= r * (r + 1))
        return 2 * r;
    if (s == 0)
        return 0;
    std::uint64_t q = isqrt(s);
    return s < q * (q + 1) ? 2 * q - 1 : 2 * q;
}

ExtremalContext max_degree(mass_t n)
{
    ExtremalContext ctx;
    ctx.n = n;
    ctx.rho = rho(n);
    ctx.nu = n - triangular(ctx.rho);
    ctx.delta = ctx.rho * (ctx.rho - 1) + beta(ctx.rho, ctx.nu);
    return ctx;
}

bool delta_increment_is_jump(std::uint64_t t, std::uint64_t nu)
{
    if (t == 0 || nu >= t)
        throw std::domain_error("delta_increment_is_jump requires 0 <= nu < t, got t=" +
                                std::to_string(t) + ", nu=" + std::to_string(nu));
    std::uint64_t m = nu + 1;
    std::uint64_t q = isqrt(m);
    return q * q == m || q * (q + 1) == m;
}

bool surplus_bounds_hold(mass_t n)
{
    auto ctx = max_degree(n);
    std::uint64_t q = isqrt(ctx.nu);
    std::uint64_t b = beta(ctx.rho, ctx.nu);
    std::uint64_t lower = q > 0 ? 2 * q - 1 : 0;
    if (b < lower || b > 2 * q)
        return false;
    std::uint64_t slack = 2 * n - ctx.delta;
    return 2 * ctx.rho <= slack && slack <= 4 * ctx.rho;
}

} // namespace pgraph
