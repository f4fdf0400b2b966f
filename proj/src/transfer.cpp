#include "pgraph/transfer.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include <omp.h>

namespace pgraph {

namespace {

using Multiset = std::map<part_t, part_t, std::greater<>>;

Partition from_multiset(Multiset const & ms)
{
    std::vector<Block> blocks;
    blocks.reserve(ms.size());
    for (auto [size, mult] : ms)
        if (mult > 0)
            blocks.push_back({size, mult});
    return Partition::from_blocks(std::move(blocks));
}

void take(Multiset & ms, part_t size)
{
    if (size == 0)
        return;
    auto it = ms.find(size);
    if (--it->second == 0)
        ms.erase(it);
}

void put(Multiset & ms, part_t size)
{
    if (size > 0)
        ++ms[size];
}

bool same_lex(Partition const & a, Partition const & b)
{
    return lex_compare(a, b) == 0;
}

} // namespace

bool NeighborSet::contains(Partition const & p) const
{
    return std::binary_search(neighbors.begin(), neighbors.end(), p, LexDescending{});
}

NeighborSet neighbors(Partition const & p)
{
    NeighborSet out{p, {}};
    Multiset base;
    for (part_t v : p.parts())
        ++base[v];

    // Receivers: each distinct size present (the donor's own size only if a
    // second copy exists) plus 0, standing for a new part.
    for (auto const & [donor, donor_count] : base) {
        std::vector<part_t> receivers;
        for (auto const & [recv, recv_count] : base)
            if (recv != donor || recv_count >= 2)
                receivers.push_back(recv);
        receivers.push_back(0);
        for (part_t recv : receivers) {
            Multiset ms = base;
            take(ms, donor);
            put(ms, donor - 1);
            take(ms, recv);
            put(ms, recv + 1);
            Partition q = from_multiset(ms);
            if (!same_lex(q, p))
                out.neighbors.push_back(std::move(q));
        }
    }
    std::sort(out.neighbors.begin(), out.neighbors.end(), LexDescending{});
    out.neighbors.erase(std::unique(out.neighbors.begin(), out.neighbors.end(), same_lex),
                        out.neighbors.end());
    return out;
}

degree_t brute_degree(Partition const & p)
{
    return neighbors(p).neighbors.size();
}

DegreeVerifyReport verify_degree_formula(mass_t n_max, int jobs, DegreeFn formula)
{
    if (!formula)
        formula = [](Partition const & p) { return degree(p); };
    if (jobs <= 0)
        jobs = omp_get_max_threads();

    DegreeVerifyReport report;
    report.n_max = n_max;
    for (mass_t n = 1; n <= n_max; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        std::uint64_t checked = 0;
        std::vector<DegreeMismatch> bad;

        // one independent stream per largest part
#pragma omp parallel num_threads(jobs) reduction(+ : checked)
        {
            std::vector<DegreeMismatch> local;
#pragma omp for schedule(dynamic)
            for (long first = 1; first <= long(n); ++first) {
                auto stream = PartitionStream::with_largest_part(n, part_t(first));
                Partition p;
                while (stream.next(p)) {
                    ++checked;
                    degree_t f = formula(p);
                    degree_t o = brute_degree(p);
                    if (f != o)
                        local.push_back({p, f, o});
                }
            }
#pragma omp critical
            bad.insert(bad.end(), local.begin(), local.end());
        }
        std::sort(bad.begin(), bad.end(), [](auto const & a, auto const & b) {
            return LexDescending{}(a.partition, b.partition);
        });
        report.mismatches.insert(report.mismatches.end(), bad.begin(), bad.end());
        report.checked += checked;
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        report.timings.push_back({n, checked, dt.count()});
    }
    return report;
}

} // namespace pgraph
