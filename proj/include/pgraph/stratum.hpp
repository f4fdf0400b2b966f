#ifndef PGRAPH_STRATUM_HPP
#define PGRAPH_STRATUM_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "pgraph/partition.hpp"

namespace pgraph {

/// A support-t partition written relative to the staircase of T_t:
/// alpha[j-1] = g_j - 1 (gap excess), mu[i-1] = m_i - 1 (multiplicity
/// excess). Sizes are L_i = t + 1 - i + sum_{j >= i} alpha_j.
struct SurplusData {
    std::size_t t = 0;
    std::vector<part_t> alpha;
    std::vector<part_t> mu;

    /// sum_j j alpha_j + sum_i mu_i L_i, i.e. mass minus T_t.
    mass_t budget() const;

    friend bool operator==(SurplusData const &, SurplusData const &) = default;
};

/// Throws std::invalid_argument if alpha and mu do not both have length t.
Partition decode_surplus(SurplusData const & d);

/// Throws std::domain_error on the empty partition.
SurplusData encode_surplus(Partition const & p);

/// Parameters of the mixed perturbation Lambda_t(a, b; c).
struct PerturbationParams {
    std::uint64_t t = 1;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = 0;
};

/// (t, t-1, ..., 1). Throws std::domain_error for t = 0.
Partition staircase(std::uint64_t t);

struct StaircasePerturbations {
    Partition top;     // (t+1, t-1, ..., 1)
    Partition bottom;  // (t, ..., 1, 1)
    Partition both;    // (t+1, t-1, ..., 1, 1)
};

/// Throws std::domain_error for t < 2.
StaircasePerturbations staircase_perturbations(std::uint64_t t);

/// Top a gaps widened to 2 (the first by 2 + c), bottom b sizes doubled.
/// Throws std::domain_error unless t >= 1, a + b <= t and (a = 0 => c = 0).
Partition mixed_perturbation(PerturbationParams const & p);

/// A partition of n attaining Delta_n, built as Lambda_rho(a, b; c).
Partition extremal_witness(mass_t n);

/// Parameters used by extremal_witness for n (a = b = c = 0 when nu = 0).
PerturbationParams extremal_witness_params(mass_t n);

/// Visits each partition of T_t + budget with exactly t distinct sizes,
/// alpha vectors outermost, then mu vectors against the sizes they fix.
/// With `min_bonus` > 0 only partitions with at least that many nonzero
/// alpha_j / mu_i entries are visited, and hopeless branches are cut.
void for_each_surplus_partition(std::uint64_t t, mass_t budget,
                                std::function<void(Partition const &)> const & visit,
                                std::uint64_t min_bonus = 0);

/// Same set, sorted descending-lex.
std::vector<Partition> enumerate_surplus_stratum(std::uint64_t t, mass_t budget);

/// Partitions of n with rho(n) distinct sizes, sorted descending-lex.
std::vector<Partition> enumerate_max_support_stratum(mass_t n);

} // namespace pgraph

#endif
