#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "pgraph/partition.hpp"

using namespace pgraph;

namespace {

std::vector<std::vector<part_t>> flat(std::vector<Partition> const & ps)
{
    std::vector<std::vector<part_t>> out;
    for (auto const & p : ps)
        out.push_back(p.parts());
    return out;
}

} // namespace

TEST_CASE("block form validation")
{
    CHECK_THROWS_AS(Partition::from_blocks({{2, 1}, {3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_blocks({{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_parts({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_parts({2, 0}), std::invalid_argument);

    auto p = Partition::from_parts({8, 5, 3, 2, 1, 1});
    CHECK(p.n() == 20);
    CHECK(p.support_size() == 5);
    CHECK(p.length() == 6);
    CHECK(p.blocks().back() == Block{1, 2});
    CHECK(to_string(p) == "(8,5,3,2,1,1)");
    CHECK(to_string(Partition{}) == "()");
}

TEST_CASE("enumeration: small cases")
{
    auto zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
    CHECK(zero[0].n() == 0);

    std::vector<std::vector<part_t>> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(flat(enumerate_partitions(4)) == four);
}

TEST_CASE("enumeration matches the recursive oracle in order")
{
    for (part_t n = 1; n <= 22; ++n) {
        auto got = flat(enumerate_partitions(n));
        CHECK(got == oracle::partitions(n));
    }
}

TEST_CASE("enumeration is strictly descending and complete")
{
    for (mass_t n = 1; n <= 40; ++n) {
        PartitionStream s(n);
        Partition prev, p;
        std::uint64_t count = 0;
        while (s.next(p)) {
            CHECK(p.n() == n);
            if (count++ > 0)
                CHECK(lex_compare(prev, p) > 0);
            prev = p;
        }
        CHECK(count == partition_count_u64(n));
    }
    std::uint64_t count60 = 0;
    PartitionStream s(60);
    Partition p;
    while (s.next(p))
        ++count60;
    CHECK(count60 == 966467);
}

TEST_CASE("largest-part streams tile the full stream")
{
    for (mass_t n = 1; n <= 25; ++n) {
        std::vector<Partition> joined;
        for (part_t k = part_t(n); k >= 1; --k) {
            auto s = PartitionStream::with_largest_part(n, k);
            while (auto p = s.next()) {
                CHECK(p->largest() == k);
                joined.push_back(*p);
            }
        }
        CHECK(joined == enumerate_partitions(n));
    }
    CHECK_FALSE(PartitionStream::with_largest_part(5, 6).next());
    CHECK_FALSE(PartitionStream::with_largest_part(5, 0).next());
}

TEST_CASE("partition_count: pentagonal recurrence vs coin-change oracle")
{
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(4) == 5);
    CHECK(partition_count(60) == 966467);
    for (part_t n = 0; n <= 300; ++n)
        CHECK(partition_count(n) == oracle::partition_count(n));
    // p(1000) = 24061467864032622473692149727991
    CHECK(partition_count(1000) ==
          boost::multiprecision::cpp_int("24061467864032622473692149727991"));
    CHECK_THROWS_AS(partition_count_u64(1000), std::overflow_error);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(Partition::from_parts({7})) == Partition::from_parts({1, 1, 1, 1, 1, 1, 1}));
    CHECK(conjugate(Partition::from_parts({5, 4, 3, 2, 1})) == Partition::from_parts({5, 4, 3, 2, 1}));
    CHECK(conjugate(Partition::from_parts({6, 4, 3, 2, 1})) ==
          Partition::from_parts({5, 4, 3, 2, 1, 1}));
    CHECK(conjugate(Partition{}) == Partition{});

    CHECK(is_self_conjugate(Partition::from_parts({5, 4, 3, 2, 1})));
    CHECK_FALSE(is_self_conjugate(Partition::from_parts({6, 4, 3, 2, 1})));
    CHECK(is_self_conjugate(Partition::from_parts({6, 4, 3, 2, 1, 1})));
}

TEST_CASE("conjugate agrees with column counting and is an involution")
{
    for (mass_t n = 1; n <= 24; ++n) {
        for (auto const & p : enumerate_partitions(n)) {
            auto c = conjugate(p);
            CHECK(c.parts() == oracle::conjugate(p.parts()));
            CHECK(conjugate(c) == p);
        }
    }
}

TEST_CASE("self-conjugate count equals distinct-odd-part count")
{
    for (mass_t n = 1; n <= 40; ++n) {
        std::uint64_t sc = 0;
        PartitionStream s(n);
        Partition p;
        while (s.next(p))
            sc += is_self_conjugate(p);
        CHECK(sc == oracle::distinct_odd_count(part_t(n)));
    }
}

TEST_CASE("support profile")
{
    auto st = support_profile(Partition::from_parts({5, 4, 3, 2, 1}));
    CHECK(st.r == 5);
    CHECK(st.gaps == std::vector<part_t>{1, 1, 1, 1, 1});
    CHECK(st.mults == std::vector<part_t>{1, 1, 1, 1, 1});

    auto pr = support_profile(Partition::from_parts({8, 5, 3, 2, 1, 1}));
    CHECK(pr.r == 5);
    CHECK(pr.gaps == std::vector<part_t>{3, 2, 1, 1, 1});
    CHECK(pr.mults == std::vector<part_t>{1, 1, 1, 1, 2});

    auto single = support_profile(Partition::from_parts({9}));
    CHECK(single.r == 1);
    CHECK(single.gaps == std::vector<part_t>{9});
    CHECK(single.mults == std::vector<part_t>{1});

    CHECK_THROWS_AS(support_profile(Partition{}), std::domain_error);
    CHECK_THROWS_AS(from_support_profile({2, {1, 0}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(from_support_profile({2, {1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("support profile round trip and telescoping")
{
    for (mass_t n = 1; n <= 30; ++n) {
        for (auto const & p : enumerate_partitions(n)) {
            auto prof = support_profile(p);
            part_t sum = 0;
            for (auto g : prof.gaps)
                sum += g;
            CHECK(sum == p.largest());
            CHECK(from_support_profile(prof) == p);
        }
    }
}

TEST_CASE("lex order: prefix is smaller, agrees with flat vector order")
{
    auto a = Partition::from_parts({3, 2});
    auto b = Partition::from_parts({3, 2, 1});
    CHECK(lex_compare(a, b) < 0);
    CHECK(lex_compare(b, a) > 0);
    CHECK(lex_compare(b, b) == 0);

    std::mt19937 rng(7);
    auto all = enumerate_partitions(18);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 5000; ++i) {
        auto const & x = all[pick(rng)];
        auto const & y = all[pick(rng)];
        auto xs = x.parts();
        auto ys = y.parts();
        CHECK((lex_compare(x, y) < 0) == (xs < ys));
        CHECK((lex_compare(x, y) == 0) == (xs == ys));
    }
}
