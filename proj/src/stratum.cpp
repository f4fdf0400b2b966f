#include "pgraph/stratum.hpp"

#include <algorithm>
#include <stdexcept>

#include "pgraph/extremal.hpp"

namespace pgraph {

namespace {

std::vector<part_t> sizes_from_alpha(std::span<const part_t> alpha)
{
    std::size_t t = alpha.size();
    std::vector<part_t> sizes(t);
    part_t excess = 0;
    for (std::size_t i = t; i-- > 0;) {
        excess += alpha[i];
        sizes[i] = part_t(t - i) + excess;
    }
    return sizes;
}

} // namespace

mass_t SurplusData::budget() const
{
    auto sizes = sizes_from_alpha(alpha);
    mass_t total = 0;
    for (std::size_t j = 0; j < t; ++j)
        total += mass_t(j + 1) * alpha[j] + mass_t(mu[j]) * sizes[j];
    return total;
}

Partition decode_surplus(SurplusData const & d)
{
    if (d.alpha.size() != d.t || d.mu.size() != d.t)
        throw std::invalid_argument("surplus vectors must have length t");
    auto sizes = sizes_from_alpha(d.alpha);
    std::vector<Block> blocks(d.t);
    for (std::size_t i = 0; i < d.t; ++i)
        blocks[i] = {sizes[i], d.mu[i] + 1};
    return Partition::from_blocks(std::move(blocks));
}

SurplusData encode_surplus(Partition const & p)
{
    auto prof = support_profile(p);
    SurplusData d;
    d.t = prof.r;
    d.alpha.resize(d.t);
    d.mu.resize(d.t);
    for (std::size_t i = 0; i < d.t; ++i) {
        d.alpha[i] = prof.gaps[i] - 1;
        d.mu[i] = prof.mults[i] - 1;
    }
    return d;
}

Partition staircase(std::uint64_t t)
{
    if (t == 0)
        throw std::domain_error("staircase requires t >= 1");
    std::vector<Block> blocks;
    blocks.reserve(t);
    for (std::uint64_t v = t; v > 0; --v)
        blocks.push_back({part_t(v), 1});
    return Partition::from_blocks(std::move(blocks));
}

StaircasePerturbations staircase_perturbations(std::uint64_t t)
{
    if (t < 2)
        throw std::domain_error("staircase perturbations require t >= 2");
    auto base = staircase(t);
    std::vector<Block> top(base.blocks().begin(), base.blocks().end());
    top.front().size += 1;
    std::vector<Block> bottom(base.blocks().begin(), base.blocks().end());
    bottom.back().mult += 1;
    std::vector<Block> both = top;
    both.back().mult += 1;
    return {Partition::from_blocks(std::move(top)), Partition::from_blocks(std::move(bottom)),
            Partition::from_blocks(std::move(both))};
}

Partition mixed_perturbation(PerturbationParams const & p)
{
    if (p.t == 0 || p.a + p.b > p.t || (p.a == 0 && p.c != 0))
        throw std::domain_error("invalid perturbation parameters");
    std::vector<Block> blocks(p.t);
    for (std::uint64_t i = 1; i <= p.t; ++i) {
        std::uint64_t size = p.t + 1 - i + (p.a + 1 > i ? p.a + 1 - i : 0) + (i == 1 ? p.c : 0);
        blocks[i - 1] = {part_t(size), part_t(i > p.t - p.b ? 2 : 1)};
    }
    return Partition::from_blocks(std::move(blocks));
}

PerturbationParams extremal_witness_params(mass_t n)
{
    auto ctx = max_degree(n);
    PerturbationParams params{ctx.rho, 0, 0, 0};
    if (ctx.nu == 0)
        return params;
    std::uint64_t q = isqrt(ctx.nu);
    if (ctx.nu < q * (q + 1)) {
        params.a = q;
        params.b = q - 1;
        params.c = ctx.nu - q * q;
    } else {
        params.a = q;
        params.b = q;
        params.c = ctx.nu - q * (q + 1);
    }
    return params;
}

Partition extremal_witness(mass_t n)
{
    return mixed_perturbation(extremal_witness_params(n));
}

void for_each_surplus_partition(std::uint64_t t, mass_t budget,
                                std::function<void(Partition const &)> const & visit,
                                std::uint64_t min_bonus)
{
    if (t == 0)
        throw std::domain_error("stratum requires t >= 1");
    std::vector<part_t> alpha(t, 0);
    std::vector<part_t> mu(t, 0);
    std::vector<part_t> sizes;
    std::uint64_t active = 0;

    // Most entries that can still turn nonzero in the alpha phase at index
    // j: undecided alpha weights are j+1..t, every mu_i weighs at least
    // t+1-i, so take the cheapest of {j+1..t} merged with {1..t}.
    auto alpha_room = [&](std::size_t j, mass_t left) {
        std::uint64_t count = 0;
        mass_t a = j + 1, m = 1;
        while (true) {
            bool use_a = a <= t && (m > t || a <= m);
            if (!use_a && m > t)
                break;
            mass_t w = use_a ? a++ : m++;
            if (w > left)
                break;
            left -= w;
            ++count;
        }
        return count;
    };
    // Same in the mu phase at level i: remaining weights are sizes[i..t-1].
    auto mu_room = [&](std::size_t i, mass_t left) {
        std::uint64_t count = 0;
        for (std::size_t k = t; k-- > i;) {
            if (sizes[k] > left)
                break;
            left -= sizes[k];
            ++count;
        }
        return count;
    };

    // mu_i over levels i..t-1 with sum mu_i L_i == left
    std::function<void(std::size_t, mass_t)> fill_mu = [&](std::size_t i, mass_t left) {
        if (i == t) {
            if (left == 0 && active >= min_bonus)
                visit(decode_surplus({t, alpha, mu}));
            return;
        }
        if (min_bonus > 0 && active + mu_room(i, left) < min_bonus)
            return;
        for (part_t k = 0; mass_t(k) * sizes[i] <= left; ++k) {
            mu[i] = k;
            active += k == 1;
            fill_mu(i + 1, left - mass_t(k) * sizes[i]);
        }
        active -= mu[i] > 0;
        mu[i] = 0;
    };

    // alpha_j over indices j..t-1 with weight (j+1)
    std::function<void(std::size_t, mass_t)> fill_alpha = [&](std::size_t j, mass_t left) {
        if (j == t) {
            sizes = sizes_from_alpha(alpha);
            fill_mu(0, left);
            return;
        }
        if (min_bonus > 0 && active + alpha_room(j, left) < min_bonus)
            return;
        for (part_t k = 0; mass_t(k) * (j + 1) <= left; ++k) {
            alpha[j] = k;
            active += k == 1;
            fill_alpha(j + 1, left - mass_t(k) * (j + 1));
        }
        active -= alpha[j] > 0;
        alpha[j] = 0;
    };

    fill_alpha(0, budget);
}

std::vector<Partition> enumerate_surplus_stratum(std::uint64_t t, mass_t budget)
{
    std::vector<Partition> out;
    for_each_surplus_partition(t, budget, [&](Partition const & p) { out.push_back(p); });
    std::sort(out.begin(), out.end(), LexDescending{});
    return out;
}

std::vector<Partition> enumerate_max_support_stratum(mass_t n)
{
    auto ctx = max_degree(n);
    return enumerate_surplus_stratum(ctx.rho, ctx.nu);
}

} // namespace pgraph
