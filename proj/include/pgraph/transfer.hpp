#ifndef PGRAPH_TRANSFER_HPP
#define PGRAPH_TRANSFER_HPP

#include <functional>
#include <vector>

#include "pgraph/degree.hpp"
#include "pgraph/partition.hpp"

namespace pgraph {

/// Neighbors of `source` in G_n, deduplicated and sorted descending-lex.
struct NeighborSet {
    Partition source;
    std::vector<Partition> neighbors;

    bool contains(Partition const & p) const;
};

/// Brute-force adjacency: move one unit from a part to another part or to
/// a fresh part of size 1, re-sort, drop duplicates and the source itself.
NeighborSet neighbors(Partition const & p);

degree_t brute_degree(Partition const & p);

struct DegreeMismatch {
    Partition partition;
    degree_t formula = 0;
    degree_t oracle = 0;
};

struct VerifyTiming {
    mass_t n = 0;
    std::uint64_t partitions = 0;
    double seconds = 0.0;
};

struct DegreeVerifyReport {
    mass_t n_max = 0;
    std::uint64_t checked = 0;
    std::vector<DegreeMismatch> mismatches;  // sorted by n, then descending lex
    std::vector<VerifyTiming> timings;

    bool passed() const noexcept { return mismatches.empty(); }
};

using DegreeFn = std::function<degree_t(Partition const &)>;

/// Checks formula == oracle on every partition of every n in [1, n_max].
/// `formula` defaults to degree(); tests substitute a faulty one.
/// `jobs` = 0 uses the OpenMP default team size.
DegreeVerifyReport verify_degree_formula(mass_t n_max, int jobs = 0, DegreeFn formula = {});

} // namespace pgraph

#endif
