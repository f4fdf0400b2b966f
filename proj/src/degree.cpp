#include "pgraph/degree.hpp"

namespace pgraph {

namespace {

part_t gap_at(std::span<const Block> blocks, std::size_t i) noexcept
{
    part_t below = i + 1 < blocks.size() ? blocks[i + 1].size : 0;
    return blocks[i].size - below;
}

} // namespace

degree_t degree(Partition const & p) noexcept
{
    auto blocks = p.blocks();
    degree_t r = blocks.size();
    degree_t d = r * (r > 0 ? r - 1 : 0);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        d += blocks[i].mult > 1;
        d += gap_at(blocks, i) > 1;
    }
    return d;
}

degree_t degree_subtractive(Partition const & p) noexcept
{
    auto blocks = p.blocks();
    degree_t r = blocks.size();
    degree_t d = r * (r + 1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        d -= blocks[i].mult == 1;
        d -= gap_at(blocks, i) == 1;
    }
    return d;
}

DegreeBreakdown degree_breakdown(Partition const & p)
{
    auto blocks = p.blocks();
    DegreeBreakdown out;
    degree_t r = blocks.size();
    out.support_term = r * (r > 0 ? r - 1 : 0);
    out.mult_bonus_flags.resize(r);
    out.gap_bonus_flags.resize(r);
    out.degree = out.support_term;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        out.mult_bonus_flags[i] = blocks[i].mult > 1;
        out.gap_bonus_flags[i] = gap_at(blocks, i) > 1;
        out.degree += out.mult_bonus_flags[i] + out.gap_bonus_flags[i];
    }
    return out;
}

} // namespace pgraph
