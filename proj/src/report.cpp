#include "pgraph/report.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

#include "pgraph/stratum.hpp"

namespace pgraph {

using json = nlohmann::ordered_json;

std::array<LandscapeRow, 60> const & reference_landscape_rows()
{
    // n, rho, nu, Delta_n, m_Delta, m_Delta^sc, s
    static std::array<LandscapeRow, 60> const rows{{
        {1, 1, 0, 0, 1, 1, 1},
        {2, 1, 1, 1, 2, 0, 1},
        {3, 2, 0, 2, 1, 1, 2},
        {4, 2, 1, 3, 2, 0, 3},
        {5, 2, 2, 4, 1, 1, 3},
        {6, 3, 0, 6, 1, 1, 5},
        {7, 3, 1, 7, 2, 0, 4},
        {8, 3, 2, 8, 1, 1, 7},
        {9, 3, 3, 8, 6, 0, 7},
        {10, 4, 0, 12, 1, 1, 9},
        {11, 4, 1, 13, 2, 0, 8},
        {12, 4, 2, 14, 1, 1, 11},
        {13, 4, 3, 14, 6, 0, 10},
        {14, 4, 4, 15, 2, 0, 13},
        {15, 5, 0, 20, 1, 1, 13},
        {16, 5, 1, 21, 2, 0, 15},
        {17, 5, 2, 22, 1, 1, 14},
        {18, 5, 3, 22, 6, 0, 17},
        {19, 5, 4, 23, 2, 0, 17},
        {20, 5, 5, 23, 8, 0, 19},
        {21, 6, 0, 30, 1, 1, 21},
        {22, 6, 1, 31, 2, 0, 21},
        {23, 6, 2, 32, 1, 1, 21},
        {24, 6, 3, 32, 6, 0, 24},
        {25, 6, 4, 33, 2, 0, 25},
        {26, 6, 5, 33, 8, 0, 26},
        {27, 6, 6, 34, 1, 1, 26},
        {28, 7, 0, 42, 1, 1, 29},
        {29, 7, 1, 43, 2, 0, 27},
        {30, 7, 2, 44, 1, 1, 31},
        {31, 7, 3, 44, 6, 0, 29},
        {32, 7, 4, 45, 2, 0, 33},
        {33, 7, 5, 45, 8, 0, 34},
        {34, 7, 6, 46, 1, 1, 36},
        {35, 7, 7, 46, 6, 0, 36},
        {36, 8, 0, 56, 1, 1, 37},
        {37, 8, 1, 57, 2, 0, 37},
        {38, 8, 2, 58, 1, 1, 40},
        {39, 8, 3, 58, 6, 0, 40},
        {40, 8, 4, 59, 2, 0, 43},
        {41, 8, 5, 59, 8, 0, 42},
        {42, 8, 6, 60, 1, 1, 45},
        {43, 8, 7, 60, 6, 0, 43},
        {44, 8, 8, 60, 22, 2, 47},
        {45, 9, 0, 72, 1, 1, 48},
        {46, 9, 1, 73, 2, 0, 49},
        {47, 9, 2, 74, 1, 1, 48},
        {48, 9, 3, 74, 6, 0, 51},
        {49, 9, 4, 75, 2, 0, 52},
        {50, 9, 5, 75, 8, 0, 54},
        {51, 9, 6, 76, 1, 1, 55},
        {52, 9, 7, 76, 6, 0, 57},
        {53, 9, 8, 76, 22, 2, 56},
        {54, 9, 9, 77, 2, 0, 58},
        {55, 10, 0, 90, 1, 1, 59},
        {56, 10, 1, 91, 2, 0, 61},
        {57, 10, 2, 92, 1, 1, 63},
        {58, 10, 3, 92, 6, 0, 63},
        {59, 10, 4, 93, 2, 0, 63},
        {60, 10, 5, 93, 8, 0, 65},
    }};
    return rows;
}

namespace {

json parts_json(Partition const & p)
{
    return json(p.parts());
}

json row_json(LandscapeRow const & r)
{
    return {{"n", r.n},     {"rho", r.rho},         {"nu", r.nu},        {"delta", r.delta},
            {"m_delta", r.m_delta}, {"m_delta_sc", r.m_delta_sc}, {"s", r.s}};
}

json context_json(ExtremalContext const & ctx)
{
    return {{"n", ctx.n}, {"rho", ctx.rho}, {"nu", ctx.nu}, {"delta", ctx.delta}};
}

int finish(std::ostream & out, std::ostream & err)
{
    out.flush();
    if (!out) {
        err << "error: failed to write output\n";
        return exit_code::failure;
    }
    return exit_code::ok;
}

bool check_n(mass_t n, std::ostream & err)
{
    if (n == 0) {
        err << "error: n must be at least 1\n";
        return false;
    }
    return true;
}

struct Check {
    std::string name;
    std::uint64_t checked = 0;
    json failures = json::array();

    bool passed() const { return failures.empty(); }
};

} // namespace

void write_table_csv(std::ostream & out, std::vector<LandscapeRow> const & rows)
{
    out << "n,rho,nu,delta,m_delta,m_delta_sc,s\n";
    for (auto const & r : rows)
        out << r.n << ',' << r.rho << ',' << r.nu << ',' << r.delta << ',' << r.m_delta << ','
            << r.m_delta_sc << ',' << r.s << '\n';
}

void write_histogram_csv(std::ostream & out, DegreeHistogram const & h)
{
    out << "degree,count\n";
    for (degree_t d = h.min_degree(); d <= h.max_degree(); ++d) {
        auto it = h.counts.find(d);
        out << d << ',' << (it == h.counts.end() ? 0 : it->second) << '\n';
    }
}

int cmd_table(ReportConfig const & cfg, std::ostream & out, std::ostream & err)
{
    if (cfg.n_from == 0 || cfg.n_from > cfg.n_to) {
        err << "error: need 1 <= --from <= --to, got " << cfg.n_from << ".." << cfg.n_to << '\n';
        return exit_code::usage;
    }
    if (cfg.n_to > 60)
        err << "warning: enumerating all partitions up to n = " << cfg.n_to
            << "; cost grows like p(n)\n";
    auto rows = landscape_rows(cfg.n_from, cfg.n_to, cfg.jobs);
    if (cfg.format == Format::csv) {
        write_table_csv(out, rows);
    } else {
        json arr = json::array();
        for (auto const & r : rows)
            arr.push_back(row_json(r));
        out << arr.dump(2) << '\n';
    }
    return finish(out, err);
}

int cmd_hist(mass_t n, ReportConfig const & cfg, std::ostream & out, std::ostream & err)
{
    if (!check_n(n, err))
        return exit_code::usage;
    auto h = degree_histogram(n, cfg.jobs);
    if (cfg.format == Format::csv) {
        write_histogram_csv(out, h);
    } else {
        json bins = json::array();
        for (degree_t d = h.min_degree(); d <= h.max_degree(); ++d) {
            auto it = h.counts.find(d);
            bins.push_back({{"degree", d}, {"count", it == h.counts.end() ? 0 : it->second}});
        }
        json doc = {{"n", n}, {"total", h.total()}, {"counts", bins}};
        out << doc.dump(2) << '\n';
    }
    return finish(out, err);
}

int cmd_spectrum(mass_t n, ReportConfig const & cfg, std::ostream & out, std::ostream & err)
{
    if (!check_n(n, err))
        return exit_code::usage;
    auto spec = spectrum(n, cfg.jobs);
    if (cfg.format == Format::csv) {
        out << "degree\n";
        for (auto d : spec)
            out << d << '\n';
    } else {
        json doc = {{"n", n}, {"spectrum", spec}};
        out << doc.dump(2) << '\n';
    }
    return finish(out, err);
}

int cmd_extremal(mass_t n, ReportConfig const &, std::ostream & out, std::ostream & err)
{
    if (!check_n(n, err))
        return exit_code::usage;
    auto ctx = max_degree(n);
    auto set = max_degree_set(n);
    auto orbits = conjugation_orbits(set);
    json arr = json::array();
    std::uint64_t sc = 0;
    for (auto const & o : orbits) {
        sc += o.kind == OrbitKind::self_conjugate;
        arr.push_back({{"representative", parts_json(o.representative)},
                       {"kind", to_string(o.kind)},
                       {"orbit_size", o.orbit_size}});
    }
    json doc = {{"n", n},
                {"delta", ctx.delta},
                {"m_delta", set.size()},
                {"m_delta_sc", sc},
                {"orbits", arr}};
    out << doc.dump(2) << '\n';
    return finish(out, err);
}

int cmd_witness(mass_t n, std::ostream & out, std::ostream & err)
{
    if (!check_n(n, err))
        return exit_code::usage;
    auto ctx = max_degree(n);
    auto params = extremal_witness_params(n);
    auto w = mixed_perturbation(params);
    json doc = {{"n", n},
                {"witness", parts_json(w)},
                {"degree", degree(w)},
                {"context", context_json(ctx)},
                {"params", {{"t", params.t}, {"a", params.a}, {"b", params.b}, {"c", params.c}}}};
    out << doc.dump(2) << '\n';
    return finish(out, err);
}

int cmd_verify(mass_t n_max, ReportConfig const & cfg, std::ostream & out, std::ostream & err,
               DegreeFn formula)
{
    if (!check_n(n_max, err))
        return exit_code::usage;

    std::vector<Check> checks;

    {
        Check c{"degree_formula_vs_oracle"};
        auto report = verify_degree_formula(n_max, cfg.jobs, std::move(formula));
        c.checked = report.checked;
        for (auto const & m : report.mismatches)
            c.failures.push_back({{"n", m.partition.n()},
                                  {"partition", parts_json(m.partition)},
                                  {"formula", m.formula},
                                  {"oracle", m.oracle}});
        checks.push_back(std::move(c));
    }

    {
        Check c{"max_support_principle"};
        for (mass_t n = 1; n <= n_max; ++n) {
            auto ctx = max_degree(n);
            auto extremal = max_degree_set_by_enumeration(n, cfg.jobs);
            ++c.checked;
            if (degree(extremal.front()) != ctx.delta)
                c.failures.push_back({{"n", n},
                                      {"reason", "closed-form delta differs from observed maximum"},
                                      {"formula", ctx.delta},
                                      {"observed", degree(extremal.front())}});
            for (auto const & p : extremal)
                if (p.support_size() != ctx.rho)
                    c.failures.push_back({{"n", n},
                                          {"reason", "extremizer off the maximal-support stratum"},
                                          {"partition", parts_json(p)}});
        }
        checks.push_back(std::move(c));
    }

    {
        Check c{"stratum_vs_filtered_enumeration"};
        for (mass_t n = 1; n <= n_max; ++n) {
            auto r = rho(n);
            std::vector<Partition> filtered;
            PartitionStream stream(n);
            Partition p;
            while (stream.next(p))
                if (p.support_size() == r)
                    filtered.push_back(p);
            ++c.checked;
            if (filtered != enumerate_max_support_stratum(n))
                c.failures.push_back({{"n", n}, {"reason", "stratum differs from filtered set"}});
        }
        checks.push_back(std::move(c));
    }

    {
        Check c{"published_table"};
        auto const & ref = reference_landscape_rows();
        for (mass_t n = 1; n <= std::min<mass_t>(n_max, ref.size()); ++n) {
            ++c.checked;
            auto row = landscape_row(n, cfg.jobs);
            if (row != ref[n - 1])
                c.failures.push_back({{"n", n}, {"computed", row_json(row)},
                                      {"published", row_json(ref[n - 1])}});
        }
        checks.push_back(std::move(c));
    }

    bool ok = std::all_of(checks.begin(), checks.end(), [](Check const & c) { return c.passed(); });
    json arr = json::array();
    for (auto const & c : checks)
        arr.push_back({{"name", c.name},
                       {"passed", c.passed()},
                       {"checked", c.checked},
                       {"failures", c.failures}});
    json doc = {{"n_max", n_max}, {"passed", ok}, {"checks", arr}};
    out << doc.dump(2) << '\n';
    int status = finish(out, err);
    if (status != exit_code::ok)
        return status;
    if (!ok)
        err << "verification failed\n";
    return ok ? exit_code::ok : exit_code::failure;
}

} // namespace pgraph
