#include "pgraph/landscape.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "pgraph/stratum.hpp"

namespace pgraph {

namespace {

int team_size(int jobs)
{
    return jobs > 0 ? jobs : omp_get_max_threads();
}

// Degrees never exceed r(r+1) <= 2n.
std::size_t degree_bound(mass_t n)
{
    return std::size_t(2 * n + 2);
}

DegreeHistogram from_dense(mass_t n, std::vector<std::uint64_t> const & dense)
{
    DegreeHistogram h;
    h.n = n;
    for (std::size_t d = 0; d < dense.size(); ++d)
        if (dense[d])
            h.counts.emplace_hint(h.counts.end(), d, dense[d]);
    return h;
}

} // namespace

std::uint64_t DegreeHistogram::total() const noexcept
{
    std::uint64_t sum = 0;
    for (auto const & [d, c] : counts)
        sum += c;
    return sum;
}

DegreeHistogram degree_histogram(mass_t n, int jobs)
{
    if (n == 0)
        throw std::domain_error("degree histogram requires n >= 1");
    std::vector<std::uint64_t> dense(degree_bound(n), 0);
#pragma omp parallel num_threads(team_size(jobs))
    {
        std::vector<std::uint64_t> local(dense.size(), 0);
#pragma omp for schedule(dynamic)
        for (long first = 1; first <= long(n); ++first) {
            auto stream = PartitionStream::with_largest_part(n, part_t(first));
            Partition p;
            while (stream.next(p))
                ++local[degree(p)];
        }
#pragma omp critical
        for (std::size_t d = 0; d < dense.size(); ++d)
            dense[d] += local[d];
    }
    return from_dense(n, dense);
}

DegreeHistogram degree_histogram_serial(mass_t n)
{
    if (n == 0)
        throw std::domain_error("degree histogram requires n >= 1");
    std::vector<std::uint64_t> dense(degree_bound(n), 0);
    PartitionStream stream(n);
    Partition p;
    while (stream.next(p))
        ++dense[degree(p)];
    return from_dense(n, dense);
}

std::vector<degree_t> spectrum(mass_t n, int jobs)
{
    auto h = degree_histogram(n, jobs);
    std::vector<degree_t> out;
    out.reserve(h.counts.size());
    for (auto const & [d, c] : h.counts)
        out.push_back(d);
    return out;
}

std::vector<Partition> max_degree_set(mass_t n)
{
    auto ctx = max_degree(n);
    std::vector<Partition> out;
    auto bonuses = ctx.delta - ctx.rho * (ctx.rho - 1);
    for_each_surplus_partition(ctx.rho, ctx.nu, [&](Partition const & p) {
        if (degree(p) == ctx.delta)
            out.push_back(p);
    }, bonuses);
    std::sort(out.begin(), out.end(), LexDescending{});
    return out;
}

std::vector<Partition> max_degree_set_by_enumeration(mass_t n, int jobs)
{
    if (n == 0)
        throw std::domain_error("extremal set requires n >= 1");
    degree_t best = 0;
    std::vector<Partition> out;
#pragma omp parallel num_threads(team_size(jobs))
    {
        degree_t local_best = 0;
        std::vector<Partition> local;
#pragma omp for schedule(dynamic)
        for (long first = 1; first <= long(n); ++first) {
            auto stream = PartitionStream::with_largest_part(n, part_t(first));
            Partition p;
            while (stream.next(p)) {
                degree_t d = degree(p);
                if (d > local_best || local.empty()) {
                    local_best = d;
                    local.clear();
                }
                if (d == local_best)
                    local.push_back(p);
            }
        }
#pragma omp critical
        if (!local.empty()) {
            if (out.empty() || local_best > best) {
                best = local_best;
                out = std::move(local);
            } else if (local_best == best) {
                out.insert(out.end(), local.begin(), local.end());
            }
        }
    }
    std::sort(out.begin(), out.end(), LexDescending{});
    return out;
}

char const * to_string(OrbitKind kind) noexcept
{
    return kind == OrbitKind::self_conjugate ? "self-conjugate" : "conjugate-pair";
}

std::vector<ExtremalOrbit> conjugation_orbits(std::vector<Partition> set)
{
    std::sort(set.begin(), set.end(), LexDescending{});
    auto contains = [&](Partition const & p) {
        return std::binary_search(set.begin(), set.end(), p, LexDescending{});
    };
    std::vector<ExtremalOrbit> orbits;
    for (auto const & p : set) {
        auto c = conjugate(p);
        auto order = lex_compare(p, c);
        if (order == 0) {
            orbits.push_back({p, OrbitKind::self_conjugate, 1});
            continue;
        }
        if (!contains(c))
            throw std::invalid_argument("set is not closed under conjugation: missing " +
                                        to_string(c));
        if (order > 0)
            orbits.push_back({p, OrbitKind::conjugate_pair, 2});
    }
    return orbits;
}

std::vector<ExtremalOrbit> extremal_orbits(mass_t n)
{
    return conjugation_orbits(max_degree_set(n));
}

LandscapeRow landscape_row(mass_t n, int jobs)
{
    auto ctx = max_degree(n);
    auto hist = degree_histogram(n, jobs);
    if (hist.max_degree() != ctx.delta)
        throw std::logic_error("closed-form Delta_" + std::to_string(n) + " = " +
                               std::to_string(ctx.delta) + " but observed maximum is " +
                               std::to_string(hist.max_degree()));
    auto extremal = max_degree_set(n);
    LandscapeRow row;
    row.n = n;
    row.rho = ctx.rho;
    row.nu = ctx.nu;
    row.delta = ctx.delta;
    row.m_delta = extremal.size();
    row.m_delta_sc = std::count_if(extremal.begin(), extremal.end(),
                                   [](Partition const & p) { return is_self_conjugate(p); });
    row.s = hist.counts.size();
    if (hist.counts.rbegin()->second != row.m_delta)
        throw std::logic_error("stratum extremal count differs from histogram top layer at n = " +
                               std::to_string(n));
    return row;
}

std::vector<LandscapeRow> landscape_rows(mass_t n_from, mass_t n_to, int jobs)
{
    std::vector<LandscapeRow> rows;
    for (mass_t n = n_from; n <= n_to; ++n)
        rows.push_back(landscape_row(n, jobs));
    return rows;
}

std::uint64_t upper_tail(mass_t n, degree_t c, int jobs)
{
    auto ctx = max_degree(n);
    auto hist = degree_histogram(n, jobs);
    degree_t floor = ctx.delta > c ? ctx.delta - c : 0;
    std::uint64_t count = 0;
    for (auto it = hist.counts.lower_bound(floor); it != hist.counts.end(); ++it)
        count += it->second;
    return count;
}

} // namespace pgraph
