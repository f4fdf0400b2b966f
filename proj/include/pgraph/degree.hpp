#ifndef PGRAPH_DEGREE_HPP
#define PGRAPH_DEGREE_HPP

#include <cstdint>
#include <vector>

#include "pgraph/partition.hpp"

namespace pgraph {

using degree_t = std::uint64_t;

/// Itemized closed-form degree: support term r(r-1) plus one bonus per
/// repeated size and one per gap exceeding 1.
struct DegreeBreakdown {
    degree_t support_term = 0;
    std::vector<bool> mult_bonus_flags;
    std::vector<bool> gap_bonus_flags;
    degree_t degree = 0;
};

/// Vertex degree of p in G_n. The empty partition and (1) have degree 0.
degree_t degree(Partition const & p) noexcept;

/// Same value via r(r+1) minus the inactive indicators.
degree_t degree_subtractive(Partition const & p) noexcept;

DegreeBreakdown degree_breakdown(Partition const & p);

} // namespace pgraph

#endif
