#ifndef PGRAPH_REPORT_HPP
#define PGRAPH_REPORT_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "pgraph/landscape.hpp"
#include "pgraph/transfer.hpp"

namespace pgraph {

enum class Format { csv, json };

struct ReportConfig {
    mass_t n_from = 1;
    mass_t n_to = 60;
    Format format = Format::csv;
    int jobs = 0;  // 0: all available cores
    std::optional<std::string> output_path;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
} // namespace exit_code

/// Published landscape rows for n = 1..60.
std::array<LandscapeRow, 60> const & reference_landscape_rows();

/// `n,rho,nu,delta,m_delta,m_delta_sc,s` header plus one line per row.
void write_table_csv(std::ostream & out, std::vector<LandscapeRow> const & rows);

/// `degree,count`, zero-filled from the smallest to the largest degree.
void write_histogram_csv(std::ostream & out, DegreeHistogram const & h);

// Each command writes its report to `out` and diagnostics to `err`, and
// returns a process exit status.

int cmd_table(ReportConfig const & cfg, std::ostream & out, std::ostream & err);
int cmd_hist(mass_t n, ReportConfig const & cfg, std::ostream & out, std::ostream & err);
int cmd_spectrum(mass_t n, ReportConfig const & cfg, std::ostream & out, std::ostream & err);
int cmd_extremal(mass_t n, ReportConfig const & cfg, std::ostream & out, std::ostream & err);
int cmd_witness(mass_t n, std::ostream & out, std::ostream & err);

/// Degree formula vs oracle, maximal-support principle, stratum vs
/// filtered enumeration, and the published table where n_max overlaps it.
/// `formula` replaces degree() in the oracle check; used for fault injection.
int cmd_verify(mass_t n_max, ReportConfig const & cfg, std::ostream & out, std::ostream & err,
               DegreeFn formula = {});

} // namespace pgraph

#endif
