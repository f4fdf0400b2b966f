// Command-line front end for the partition-graph degree landscape.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>

#include "pgraph/report.hpp"

int main(int argc, char ** argv)
{
    using namespace pgraph;

    CLI::App app{"Degree landscape of the partition graph G_n"};
    app.require_subcommand(1);

    ReportConfig cfg;
    mass_t n = 0;
    mass_t max_n = 25;
    std::string out_path;

    std::map<std::string, Format> const formats{{"csv", Format::csv}, {"json", Format::json}};

    auto add_common = [&](CLI::App * sub) {
        sub->add_option("--format", cfg.format, "csv or json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out", out_path, "write to PATH instead of standard output");
        sub->add_option("--jobs", cfg.jobs, "worker threads (default: all cores)")
            ->check(CLI::PositiveNumber);
    };

    auto * table = app.add_subcommand("table", "landscape rows n, rho, nu, delta, m_delta, m_delta_sc, s");
    table->add_option("--from", cfg.n_from, "first n (default 1)")->check(CLI::PositiveNumber);
    table->add_option("--to", cfg.n_to, "last n (default 60)")->check(CLI::PositiveNumber);
    add_common(table);

    auto * hist = app.add_subcommand("hist", "degree histogram of G_n");
    hist->add_option("n", n)->required()->check(CLI::PositiveNumber);
    add_common(hist);

    auto * spec = app.add_subcommand("spectrum", "sorted distinct degrees of G_n");
    spec->add_option("n", n)->required()->check(CLI::PositiveNumber);
    add_common(spec);

    auto * extremal = app.add_subcommand("extremal", "maximal-degree set and its conjugation orbits (JSON)");
    extremal->add_option("n", n)->required()->check(CLI::PositiveNumber);
    add_common(extremal);

    auto * witness = app.add_subcommand("witness", "explicit partition attaining the maximal degree (JSON)");
    witness->add_option("n", n)->required()->check(CLI::PositiveNumber);
    witness->add_option("--out", out_path, "write to PATH instead of standard output");

    auto * verify = app.add_subcommand("verify", "cross-check closed forms against brute force");
    verify->add_option("--max-n", max_n, "largest n to check (default 25)")->check(CLI::PositiveNumber);
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_code::ok : exit_code::usage;
    }

    std::unique_ptr<std::ofstream> file;
    std::ostream * out = &std::cout;
    if (!out_path.empty()) {
        file = std::make_unique<std::ofstream>(out_path, std::ios::binary);
        if (!*file) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return exit_code::failure;
        }
        out = file.get();
    }

    try {
        if (table->parsed())
            return cmd_table(cfg, *out, std::cerr);
        if (hist->parsed())
            return cmd_hist(n, cfg, *out, std::cerr);
        if (spec->parsed())
            return cmd_spectrum(n, cfg, *out, std::cerr);
        if (extremal->parsed())
            return cmd_extremal(n, cfg, *out, std::cerr);
        if (witness->parsed())
            return cmd_witness(n, *out, std::cerr);
        if (verify->parsed())
            return cmd_verify(max_n, cfg, *out, std::cerr);
    } catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::failure;
    }
    return exit_code::usage;
}
