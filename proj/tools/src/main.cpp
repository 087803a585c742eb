#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

using stark::cli::Command;
using stark::cli::RunConfig;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg, std::string& format) {
    sub->add_option("--L", cfg.half_width, "interval half-width L > 0")
        ->required();
    sub->add_option("--F", cfg.field, "field strength F >= 0")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format, "output format: csv|json|text");
    sub->add_option("--out", cfg.out_path, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "starkwell: eigenvalues and eigenfunctions of -d^2/dx^2 + F x on [-L, L]\n"
        "under self-adjoint boundary conditions parameterized by a 2x2 unitary matrix"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    std::vector<double> window;

    auto* spectrum = app.add_subcommand("spectrum", "compute eigenvalues");
    add_common(spectrum, cfg, format);
    spectrum->add_option("--bc", cfg.bc,
                         "preset (dirichlet|neumann|mixed|periodic) or matrix "
                         "'a,b;c,d' with entries re+imi")->required();
    int count = 0;
    spectrum->add_option("--count", count, "first n eigenvalues");
    spectrum->add_option("--window", window, "energy window: lo hi")->expected(2);
    spectrum->add_option("--scan-step", cfg.scan_step, "initial bracketing step");

    auto* eigfn = app.add_subcommand("eigfn", "sample one eigenfunction as CSV");
    add_common(eigfn, cfg, format);
    eigfn->add_option("--bc", cfg.bc, "boundary condition (as in spectrum)")->required();
    eigfn->add_option("--index", cfg.index, "1-based eigenvalue index");
    eigfn->add_option("--samples", cfg.samples, "number of grid samples (>= 2)");
    eigfn->add_option("--window", window, "energy window: lo hi")->expected(2);

    auto* table = app.add_subcommand(
        "table", "recompute a reference eigenvalue table and compare");
    int table_id = 1;
    table->add_option("id", table_id, "table id 1..4")->required();
    table->add_option("--format", format, "output format: csv|json|text");
    table->add_option("--out", cfg.out_path, "output path (default stdout)");
    table->add_option("--data-dir", cfg.data_dir, "directory with reference CSVs");

    auto* splitting = app.add_subcommand(
        "splitting", "degenerate-level splitting under the periodic condition");
    add_common(splitting, cfg, format);
    splitting->add_option("--F-list", cfg.fields,
                          "field strengths (the F = 0 reference row is always included)");
    splitting->add_option("--levels", cfg.levels, "number of degenerate levels");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.format = stark::cli::format_from_name(format);
        if (spectrum->parsed()) {
            cfg.command = Command::spectrum;
            if (count > 0) cfg.count = count;
            if (!window.empty()) cfg.window = {window[0], window[1]};
        } else if (eigfn->parsed()) {
            cfg.command = Command::eigfn;
            if (!window.empty()) cfg.window = {window[0], window[1]};
        } else if (table->parsed()) {
            cfg.command = Command::table;
            cfg.table_id = table_id;
        } else if (splitting->parsed()) {
            cfg.command = Command::splitting;
            cfg.bc = "periodic";
        }
        return stark::cli::run(cfg, std::cerr);
    } catch (const stark::cli::NonUnitaryMatrix& e) {
        std::cerr << "invalid boundary matrix: max|U*U - I| = " << e.defect << '\n';
        return stark::cli::kExitBadMatrix;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad request: " << e.what() << '\n';
        return stark::cli::kExitBadRequest;
    } catch (const std::domain_error& e) {
        std::cerr << "bad request: " << e.what() << '\n';
        return stark::cli::kExitBadRequest;
    } catch (const std::runtime_error& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return stark::cli::kExitSolver;
    }
}
