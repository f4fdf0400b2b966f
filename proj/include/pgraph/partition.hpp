#ifndef PGRAPH_PARTITION_HPP
#define PGRAPH_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pgraph {

using part_t = std::uint32_t;
using mass_t = std::uint64_t;

/// One run of equal parts: `mult` copies of `size`.
struct Block {
    part_t size = 0;
    part_t mult = 0;

    friend bool operator==(Block const &, Block const &) = default;
};

/// A partition of n in block form: distinct sizes strictly decreasing,
/// every multiplicity positive. The empty block list is the partition of 0.
class Partition {
  public:
    Partition() = default;

    /// Throws std::invalid_argument unless sizes strictly decrease and all
    /// sizes and multiplicities are positive.
    static Partition from_blocks(std::vector<Block> blocks);

    /// Builds from a weakly decreasing list of positive parts.
    static Partition from_parts(std::span<const part_t> parts);
    static Partition from_parts(std::initializer_list<part_t> parts)
    {
        return from_parts(std::span<const part_t>(parts.begin(), parts.size()));
    }

    mass_t n() const noexcept { return n_; }
    std::span<const Block> blocks() const noexcept { return blocks_; }
    std::size_t support_size() const noexcept { return blocks_.size(); }
    bool empty() const noexcept { return blocks_.empty(); }

    /// Number of parts counted with multiplicity.
    std::size_t length() const noexcept;
    part_t largest() const noexcept { return blocks_.empty() ? 0 : blocks_.front().size; }

    /// Flat weakly decreasing part list.
    std::vector<part_t> parts() const;

    friend bool operator==(Partition const &, Partition const &) = default;

  private:
    friend class PartitionStream;

    std::vector<Block> blocks_;
    mass_t n_ = 0;
};

/// Lexicographic order on flat part lists; a proper prefix compares less.
std::strong_ordering lex_compare(Partition const & a, Partition const & b) noexcept;

/// Strict weak order placing lexicographically larger partitions first.
struct LexDescending {
    bool operator()(Partition const & a, Partition const & b) const noexcept
    {
        return lex_compare(a, b) > 0;
    }
};

/// "(8,5,3,2,1,1)"; the empty partition prints as "()".
std::string to_string(Partition const & p);

/// Gap and multiplicity data of a nonempty partition, L_{r+1} = 0.
struct SupportProfile {
    std::size_t r = 0;
    std::vector<part_t> gaps;
    std::vector<part_t> mults;

    friend bool operator==(SupportProfile const &, SupportProfile const &) = default;
};

/// Throws std::domain_error on the empty partition.
SupportProfile support_profile(Partition const & p);

/// Inverse of support_profile; throws std::invalid_argument on a zero gap,
/// a zero multiplicity, or mismatched lengths.
Partition from_support_profile(SupportProfile const & profile);

/// Transpose of the Ferrers diagram, computed block-wise in O(r).
Partition conjugate(Partition const & p);

bool is_self_conjugate(Partition const & p);

/// Single-consumer stream over the partitions of n in descending
/// lexicographic order, optionally restricted to a fixed largest part.
/// Holds O(number of parts) state.
class PartitionStream {
  public:
    explicit PartitionStream(mass_t n);

    /// Partitions of n whose largest part is exactly `first`.
    static PartitionStream with_largest_part(mass_t n, part_t first);

    /// Writes the next partition into `out`, reusing its storage.
    /// Returns false once the stream is exhausted.
    bool next(Partition & out);

    std::optional<Partition> next();

  private:
    PartitionStream() = default;
    void load(Partition & out) const;

    // flat parts after the optional fixed head
    std::vector<part_t> tail_;
    std::size_t len_ = 0;
    part_t head_ = 0;
    mass_t n_ = 0;
    bool started_ = false;
    bool done_ = false;
};

/// Every partition of n, materialized. For tests and small n only.
std::vector<Partition> enumerate_partitions(mass_t n);

/// p(n) by Euler's pentagonal-number recurrence in exact arithmetic.
boost::multiprecision::cpp_int partition_count(mass_t n);

/// p(n) narrowed to 64 bits; throws std::overflow_error if it does not fit.
std::uint64_t partition_count_u64(mass_t n);

} // namespace pgraph

#endif
