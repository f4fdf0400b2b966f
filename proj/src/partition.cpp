#include "pgraph/partition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pgraph {

Partition Partition::from_blocks(std::vector<Block> blocks)
{
    Partition p;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].size == 0 || blocks[i].mult == 0)
            throw std::invalid_argument("partition block with zero size or multiplicity");
        if (i > 0 && blocks[i].size >= blocks[i - 1].size)
            throw std::invalid_argument("partition block sizes must strictly decrease");
        p.n_ += mass_t(blocks[i].size) * blocks[i].mult;
    }
    p.blocks_ = std::move(blocks);
    return p;
}

Partition Partition::from_parts(std::span<const part_t> parts)
{
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        if (!blocks.empty() && blocks.back().size == parts[i])
            ++blocks.back().mult;
        else
            blocks.push_back({parts[i], 1});
    }
    return from_blocks(std::move(blocks));
}

std::size_t Partition::length() const noexcept
{
    std::size_t len = 0;
    for (auto const & b : blocks_)
        len += b.mult;
    return len;
}

std::vector<part_t> Partition::parts() const
{
    std::vector<part_t> out;
    out.reserve(length());
    for (auto const & b : blocks_)
        out.insert(out.end(), b.mult, b.size);
    return out;
}

std::strong_ordering lex_compare(Partition const & a, Partition const & b) noexcept
{
    auto ab = a.blocks();
    auto bb = b.blocks();
    std::size_t i = 0, j = 0;
    part_t left_a = ab.empty() ? 0 : ab[0].mult;
    part_t left_b = bb.empty() ? 0 : bb[0].mult;
    // walk both flat lists run by run
    while (i < ab.size() && j < bb.size()) {
        if (ab[i].size != bb[j].size)
            return ab[i].size <=> bb[j].size;
        part_t step = std::min(left_a, left_b);
        left_a -= step;
        left_b -= step;
        if (left_a == 0 && ++i < ab.size())
            left_a = ab[i].mult;
        if (left_b == 0 && ++j < bb.size())
            left_b = bb[j].mult;
    }
    bool a_more = i < ab.size();
    bool b_more = j < bb.size();
    return a_more <=> b_more;
}

std::string to_string(Partition const & p)
{
    std::string s = "(";
    bool first = true;
    for (auto const & b : p.blocks()) {
        for (part_t k = 0; k < b.mult; ++k) {
            if (!first)
                s += ',';
            s += std::to_string(b.size);
            first = false;
        }
    }
    s += ')';
    return s;
}

SupportProfile support_profile(Partition const & p)
{
    if (p.empty())
        throw std::domain_error("support profile of the empty partition");
    auto blocks = p.blocks();
    SupportProfile prof;
    prof.r = blocks.size();
    prof.gaps.resize(prof.r);
    prof.mults.resize(prof.r);
    for (std::size_t i = 0; i < prof.r; ++i) {
        part_t below = i + 1 < prof.r ? blocks[i + 1].size : 0;
        prof.gaps[i] = blocks[i].size - below;
        prof.mults[i] = blocks[i].mult;
    }
    return prof;
}

Partition from_support_profile(SupportProfile const & profile)
{
    if (profile.gaps.size() != profile.r || profile.mults.size() != profile.r)
        throw std::invalid_argument("support profile length mismatch");
    std::vector<Block> blocks(profile.r);
    part_t size = 0;
    for (std::size_t i = profile.r; i-- > 0;) {
        if (profile.gaps[i] == 0)
            throw std::invalid_argument("support gaps must be positive");
        size += profile.gaps[i];
        blocks[i] = {size, profile.mults[i]};
    }
    return Partition::from_blocks(std::move(blocks));
}

Partition conjugate(Partition const & p)
{
    // Block i of p contributes columns of height M_i = m_1 + ... + m_i,
    // repeated g_i = L_i - L_{i+1} times.
    auto blocks = p.blocks();
    std::vector<Block> out(blocks.size());
    part_t height = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        height += blocks[i].mult;
        part_t below = i + 1 < blocks.size() ? blocks[i + 1].size : 0;
        out[blocks.size() - 1 - i] = {height, blocks[i].size - below};
    }
    return Partition::from_blocks(std::move(out));
}

bool is_self_conjugate(Partition const & p)
{
    return conjugate(p) == p;
}

PartitionStream::PartitionStream(mass_t n)
    : n_(n)
{
    tail_.reserve(n);
}

PartitionStream PartitionStream::with_largest_part(mass_t n, part_t first)
{
    PartitionStream s;
    s.n_ = n;
    s.head_ = first;
    if (first == 0 || first > n)
        s.done_ = true;
    else
        s.tail_.reserve(n - first);
    return s;
}

bool PartitionStream::next(Partition & out)
{
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        mass_t rest = n_ - head_;
        part_t bound = head_ ? head_ : part_t(n_);
        tail_.clear();
        while (rest > 0) {
            part_t v = part_t(std::min<mass_t>(bound, rest));
            tail_.push_back(v);
            rest -= v;
        }
        len_ = tail_.size();
        load(out);
        return true;
    }
    // rightmost part exceeding 1
    std::size_t i = len_;
    while (i > 0 && tail_[i - 1] == 1)
        --i;
    if (i == 0) {
        done_ = true;
        return false;
    }
    --i;
    part_t v = tail_[i] - 1;
    mass_t rest = mass_t(len_ - i - 1) + 1;
    tail_[i] = v;
    len_ = i + 1;
    tail_.resize(len_);
    while (rest > 0) {
        part_t w = part_t(std::min<mass_t>(v, rest));
        tail_.push_back(w);
        rest -= w;
    }
    len_ = tail_.size();
    load(out);
    return true;
}

std::optional<Partition> PartitionStream::next()
{
    Partition p;
    if (!next(p))
        return std::nullopt;
    return p;
}

void PartitionStream::load(Partition & out) const
{
    out.blocks_.clear();
    if (head_)
        out.blocks_.push_back({head_, 1});
    for (std::size_t k = 0; k < len_; ++k) {
        if (!out.blocks_.empty() && out.blocks_.back().size == tail_[k])
            ++out.blocks_.back().mult;
        else
            out.blocks_.push_back({tail_[k], 1});
    }
    out.n_ = n_;
}

std::vector<Partition> enumerate_partitions(mass_t n)
{
    std::vector<Partition> all;
    PartitionStream stream(n);
    Partition p;
    while (stream.next(p))
        all.push_back(p);
    return all;
}

boost::multiprecision::cpp_int partition_count(mass_t n)
{
    using boost::multiprecision::cpp_int;
    std::vector<cpp_int> p(n + 1);
    p[0] = 1;
    for (mass_t m = 1; m <= n; ++m) {
        cpp_int acc = 0;
        // generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2
        for (mass_t k = 1;; ++k) {
            mass_t g1 = k * (3 * k - 1) / 2;
            if (g1 > m)
                break;
            mass_t g2 = k * (3 * k + 1) / 2;
            bool plus = k % 2 == 1;
            cpp_int term = p[m - g1];
            if (g2 <= m)
                term += p[m - g2];
            if (plus)
                acc += term;
            else
                acc -= term;
        }
        p[m] = std::move(acc);
    }
    return p[n];
}

std::uint64_t partition_count_u64(mass_t n)
{
    auto count = partition_count(n);
    if (count > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("p(" + std::to_string(n) + ") does not fit in 64 bits");
    return count.convert_to<std::uint64_t>();
}

} // namespace pgraph
