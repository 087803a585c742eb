#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stark/solver.hpp"
#include "stark/unitary.hpp"

namespace stark::cli {

// exit codes of the tool
inline constexpr int kExitOk = 0;
inline constexpr int kExitSolver = 1;     // non-convergence / solver failure
inline constexpr int kExitBadMatrix = 2;  // boundary matrix not unitary
inline constexpr int kExitBadRequest = 3; // invalid parameters / index

enum class Command { spectrum, eigfn, table, splitting };
enum class Format { csv, json, text };

struct RunConfig {
    Command command = Command::spectrum;
    double half_width = 1.0;
    double field = 0.0;
    std::string bc = "dirichlet";  // preset name or "a,b;c,d" complex entries
    std::optional<int> count;
    std::optional<std::pair<double, double>> window;
    double scan_step = 0.0;
    Format format = Format::text;
    std::string out_path;  // empty -> stdout
    // eigfn
    int index = 1;
    int samples = 501;
    // table
    int table_id = 1;
    std::string data_dir;  // empty -> built-in default
    // splitting
    std::vector<double> fields;
    int levels = 2;
};

Format format_from_name(const std::string& name);

/// Either a preset or a raw matrix, parsed from the --bc string.
struct BcChoice {
    std::optional<Preset> which;
    UnitaryBC u;
};

/// Parses "dirichlet|neumann|mixed|periodic" or "re+imi,..;..".
/// Throws std::invalid_argument on syntax errors and NonUnitaryMatrix
/// (below) when the matrix fails the 1e-10 unitarity test.
struct NonUnitaryMatrix : std::invalid_argument {
    double defect;
    explicit NonUnitaryMatrix(double d)
        : std::invalid_argument("matrix is not unitary"), defect(d) {}
};
BcChoice parse_bc(const std::string& spec);
cplx parse_complex_entry(const std::string& text);

int run_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int run_eigfn(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int run_splitting(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

/// Dispatch on cfg.command honoring cfg.out_path.
int run(const RunConfig& cfg, std::ostream& diag);

/// 9 significant digits, shell-stable.
std::string fmt9(double v);

}  // namespace stark::cli
