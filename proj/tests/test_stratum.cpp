#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "pgraph/degree.hpp"
#include "pgraph/extremal.hpp"
#include "pgraph/stratum.hpp"

using namespace pgraph;

TEST_CASE("staircase")
{
    CHECK(staircase(1) == Partition::from_parts({1}));
    auto d5 = staircase(5);
    CHECK(d5 == Partition::from_parts({5, 4, 3, 2, 1}));
    CHECK(degree(d5) == 20);
    auto d10 = staircase(10);
    CHECK(d10.n() == 55);
    CHECK(degree(d10) == 90);
    CHECK_THROWS_AS(staircase(0), std::domain_error);
}

TEST_CASE("first staircase perturbations")
{
    auto p5 = staircase_perturbations(5);
    CHECK(p5.top == Partition::from_parts({6, 4, 3, 2, 1}));
    CHECK(degree(p5.top) == 21);
    CHECK(p5.both == Partition::from_parts({6, 4, 3, 2, 1, 1}));
    CHECK(degree(p5.both) == 22);
    CHECK(is_self_conjugate(p5.both));

    auto p2 = staircase_perturbations(2);
    CHECK(p2.top == Partition::from_parts({3, 1}));
    CHECK(p2.bottom == Partition::from_parts({2, 1, 1}));
    CHECK(p2.both == Partition::from_parts({3, 1, 1}));

    for (std::uint64_t t = 2; t <= 15; ++t) {
        auto p = staircase_perturbations(t);
        auto T = triangular(t);
        CHECK(p.top.n() == T + 1);
        CHECK(p.bottom.n() == T + 1);
        CHECK(p.both.n() == T + 2);
        CHECK(degree(p.top) == t * (t - 1) + 1);
        CHECK(degree(p.bottom) == t * (t - 1) + 1);
        CHECK(degree(p.both) == t * (t - 1) + 2);
        CHECK(conjugate(p.top) == p.bottom);
        CHECK(is_self_conjugate(p.both));
        CHECK(mixed_perturbation({t, 1, 0, 0}) == p.top);
        CHECK(mixed_perturbation({t, 0, 1, 0}) == p.bottom);
        CHECK(mixed_perturbation({t, 1, 1, 0}) == p.both);
    }
    CHECK_THROWS_AS(staircase_perturbations(1), std::domain_error);
}

TEST_CASE("mixed perturbation")
{
    CHECK(mixed_perturbation({5, 0, 0, 0}) == staircase(5));
    auto l = mixed_perturbation({5, 2, 1, 1});
    CHECK(l == Partition::from_parts({8, 5, 3, 2, 1, 1}));
    CHECK(l.n() == 20);
    CHECK(degree(l) == 23);

    CHECK_THROWS_AS(mixed_perturbation({3, 2, 2, 0}), std::domain_error);
    CHECK_THROWS_AS(mixed_perturbation({3, 0, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(mixed_perturbation({0, 0, 0, 0}), std::domain_error);

    for (std::uint64_t t = 1; t <= 12; ++t)
        for (std::uint64_t a = 0; a <= t; ++a)
            for (std::uint64_t b = 0; a + b <= t; ++b)
                for (std::uint64_t c = 0; c <= (a ? 4u : 0u); ++c) {
                    auto p = mixed_perturbation({t, a, b, c});
                    CHECK(p.support_size() == t);
                    CHECK(p.n() == triangular(t) + triangular(a) + triangular(b) + c);
                    CHECK(degree(p) == t * (t - 1) + a + b);
                }
}

TEST_CASE("extremal witness")
{
    CHECK(extremal_witness(15) == Partition::from_parts({5, 4, 3, 2, 1}));
    CHECK(extremal_witness(20) == Partition::from_parts({8, 5, 3, 2, 1, 1}));
    CHECK(extremal_witness(17) == Partition::from_parts({6, 4, 3, 2, 1, 1}));
    CHECK(extremal_witness(1) == Partition::from_parts({1}));
    CHECK(extremal_witness(2) == Partition::from_parts({2}));
    for (mass_t n = 1; n <= 2000; ++n) {
        auto w = extremal_witness(n);
        CHECK(w.n() == n);
        CHECK(degree(w) == max_degree(n).delta);
    }
}

TEST_CASE("surplus encoding examples")
{
    CHECK(decode_surplus({5, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}) == staircase(5));
    SurplusData top{5, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};
    CHECK(decode_surplus(top) == Partition::from_parts({6, 4, 3, 2, 1}));
    CHECK(top.budget() == 1);
    SurplusData bot{5, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 1}};
    CHECK(decode_surplus(bot) == Partition::from_parts({5, 4, 3, 2, 1, 1}));
    CHECK(bot.budget() == 1);

    auto e = encode_surplus(Partition::from_parts({8, 5, 3, 2, 1, 1}));
    CHECK(e.t == 5);
    CHECK(e.alpha == std::vector<part_t>{2, 1, 0, 0, 0});
    CHECK(e.mu == std::vector<part_t>{0, 0, 0, 0, 1});
    CHECK(e.budget() == 5);

    auto single = encode_surplus(Partition::from_parts({9}));
    CHECK(single.t == 1);
    CHECK(single.alpha == std::vector<part_t>{8});
    CHECK(single.mu == std::vector<part_t>{0});

    auto z = encode_surplus(staircase(7));
    CHECK(z.alpha == std::vector<part_t>(7, 0));
    CHECK(z.mu == std::vector<part_t>(7, 0));

    CHECK_THROWS_AS(decode_surplus({3, {0, 0}, {0, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(encode_surplus(Partition{}), std::domain_error);
}

TEST_CASE("surplus encoding is a bijection")
{
    for (mass_t n = 1; n <= 30; ++n) {
        PartitionStream s(n);
        Partition p;
        while (s.next(p)) {
            auto e = encode_surplus(p);
            CHECK(decode_surplus(e) == p);
            CHECK(triangular(e.t) + e.budget() == n);
        }
    }
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 4000; ++iter) {
        std::size_t t = 1 + rng() % 7;
        SurplusData d{t, std::vector<part_t>(t, 0), std::vector<part_t>(t, 0)};
        // random surplus with budget at most t
        while (true) {
            SurplusData trial = d;
            std::size_t i = rng() % t;
            (rng() % 2 ? trial.alpha : trial.mu)[i] += 1;
            if (trial.budget() > t || rng() % 4 == 0)
                break;
            d = trial;
        }
        auto p = decode_surplus(d);
        CHECK(p.support_size() == t);
        CHECK(p.n() == triangular(t) + d.budget());
        CHECK(encode_surplus(p) == d);
    }
}

TEST_CASE("maximal-support stratum")
{
    auto s15 = enumerate_max_support_stratum(15);
    REQUIRE(s15.size() == 1);
    CHECK(s15[0] == staircase(5));

    auto s16 = enumerate_max_support_stratum(16);
    REQUIRE(s16.size() == 2);
    CHECK(s16[0] == Partition::from_parts({6, 4, 3, 2, 1}));
    CHECK(s16[1] == Partition::from_parts({5, 4, 3, 2, 1, 1}));

    for (mass_t n = 1; n <= 30; ++n) {
        auto r = rho(n);
        std::vector<Partition> filtered;
        for (auto const & p : enumerate_partitions(n))
            if (p.support_size() == r)
                filtered.push_back(p);
        CHECK(enumerate_max_support_stratum(n) == filtered);
    }
}

TEST_CASE("lower strata via explicit t and budget")
{
    for (mass_t n = 1; n <= 22; ++n) {
        for (std::uint64_t t = 1; triangular(t) <= n; ++t) {
            std::vector<Partition> filtered;
            for (auto const & p : enumerate_partitions(n))
                if (p.support_size() == t)
                    filtered.push_back(p);
            CHECK(enumerate_surplus_stratum(t, n - triangular(t)) == filtered);
        }
    }
}

TEST_CASE("bonus-bounded stratum walk visits exactly the high-bonus members")
{
    auto bonuses = [](Partition const & p) {
        auto d = encode_surplus(p);
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < d.t; ++i)
            k += (d.alpha[i] > 0) + (d.mu[i] > 0);
        return k;
    };
    for (mass_t n = 1; n <= 120; ++n) {
        auto ctx = max_degree(n);
        auto full = enumerate_max_support_stratum(n);
        for (std::uint64_t need : {std::uint64_t(1), beta(ctx.rho, ctx.nu)}) {
            std::vector<Partition> expect, got;
            for (auto const & p : full)
                if (bonuses(p) >= need)
                    expect.push_back(p);
            for_each_surplus_partition(ctx.rho, ctx.nu, [&](Partition const & p) { got.push_back(p); },
                                       need);
            std::sort(got.begin(), got.end(), LexDescending{});
            CHECK(got == expect);
        }
    }
}
