#ifndef PGRAPH_LANDSCAPE_HPP
#define PGRAPH_LANDSCAPE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "pgraph/degree.hpp"
#include "pgraph/extremal.hpp"
#include "pgraph/partition.hpp"

namespace pgraph {

/// H_n(d) for every degree d that occurs; absent keys have count 0.
struct DegreeHistogram {
    mass_t n = 0;
    std::map<degree_t, std::uint64_t> counts;

    std::uint64_t total() const noexcept;
    degree_t min_degree() const { return counts.begin()->first; }
    degree_t max_degree() const { return counts.rbegin()->first; }

    friend bool operator==(DegreeHistogram const &, DegreeHistogram const &) = default;
};

/// Parallel kernel: one partition stream per largest part, per-thread
/// dense counts merged at the end. `jobs` = 0 uses the OpenMP default.
DegreeHistogram degree_histogram(mass_t n, int jobs = 0);

/// Reference implementation over a single stream.
DegreeHistogram degree_histogram_serial(mass_t n);

/// Sorted distinct degrees of G_n.
std::vector<degree_t> spectrum(mass_t n, int jobs = 0);

/// MaxDeg(n) from the maximal-support stratum, sorted descending-lex.
std::vector<Partition> max_degree_set(mass_t n);

/// MaxDeg(n) by scanning every partition of n, sorted descending-lex.
std::vector<Partition> max_degree_set_by_enumeration(mass_t n, int jobs = 0);

enum class OrbitKind { self_conjugate, conjugate_pair };

char const * to_string(OrbitKind kind) noexcept;

struct ExtremalOrbit {
    Partition representative;  // lex-larger member of its orbit
    OrbitKind kind = OrbitKind::self_conjugate;
    std::size_t orbit_size = 1;

    friend bool operator==(ExtremalOrbit const &, ExtremalOrbit const &) = default;
};

/// Groups a conjugation-closed set into orbits, descending-lex by
/// representative. Throws std::invalid_argument if the set is not closed.
std::vector<ExtremalOrbit> conjugation_orbits(std::vector<Partition> set);

std::vector<ExtremalOrbit> extremal_orbits(mass_t n);

/// One row of the degree landscape table.
struct LandscapeRow {
    mass_t n = 0;
    std::uint64_t rho = 0;
    std::uint64_t nu = 0;
    degree_t delta = 0;
    std::uint64_t m_delta = 0;
    std::uint64_t m_delta_sc = 0;
    std::uint64_t s = 0;

    friend bool operator==(LandscapeRow const &, LandscapeRow const &) = default;
};

/// Delta from the closed form, extremal counts from the stratum, spectrum
/// size from full enumeration. Throws std::logic_error if the closed-form
/// Delta differs from the observed maximum.
LandscapeRow landscape_row(mass_t n, int jobs = 0);

/// Rows for n_from..n_to in order.
std::vector<LandscapeRow> landscape_rows(mass_t n_from, mass_t n_to, int jobs = 0);

/// |{p : degree(p) >= Delta_n - c}|.
std::uint64_t upper_tail(mass_t n, degree_t c, int jobs = 0);

} // namespace pgraph

#endif
