#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "stark/eigenfunction.hpp"
#include "table_fixtures.hpp"

namespace stark::cli {
namespace {

std::string fmt3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// Flat JSON arrays are written by hand so numbers carry the same 9
// significant digits as every other format (a shortest-round-trip
// serializer would reintroduce noise digits).
struct JsonRows {
    std::ostream& out;
    bool first = true;
    explicit JsonRows(std::ostream& o) : out(o) { out << "[\n"; }
    std::ostream& row() {
        out << (first ? "  {" : ",\n  {");
        first = false;
        return out;
    }
    void close() { out << (first ? "]\n" : "\n]\n"); }
};

SpectrumRequest build_request(const RunConfig& cfg, const BcChoice& bc) {
    const StarkProblem p(cfg.half_width, cfg.field);
    double lo, hi;
    std::optional<int> count = cfg.count;
    if (cfg.window) {
        lo = cfg.window->first;
        hi = cfg.window->second;
    } else {
        // default window starts below the bottom of the spectrum (H >= -F L
        // for the four presets) and grows upward on demand; the kernel's
        // evaluable floor only binds at extreme small fields
        lo = std::max(-cfg.field * cfg.half_width - 1.0, evaluable_window_floor(p));
        hi = lo + 5.0;
        if (!count) count = 4;
    }
    SpectrumRequest req = bc.which
        ? SpectrumRequest::for_preset(p, *bc.which, lo, hi, count)
        : SpectrumRequest::for_unitary(p, bc.u, lo, hi, count);
    req.scan_step = cfg.scan_step;
    return req;
}

void emit_spectrum(const SpectrumResult& res, Format format, std::ostream& out) {
    switch (format) {
        case Format::csv: {
            out << "index,energy,residual,multiplicity\n";
            int i = 1;
            for (const auto& e : res.eigenvalues) {
                out << i++ << ',' << fmt9(e.energy) << ',' << fmt9(e.residual) << ','
                    << e.multiplicity << '\n';
            }
            break;
        }
        case Format::json: {
            JsonRows rows(out);
            int i = 1;
            for (const auto& e : res.eigenvalues) {
                rows.row() << "\"index\": " << i++ << ", \"energy\": "
                           << fmt9(e.energy) << ", \"residual\": "
                           << fmt9(e.residual) << ", \"multiplicity\": "
                           << e.multiplicity << '}';
            }
            rows.close();
            break;
        }
        case Format::text: {
            out << "index        energy      residual  multiplicity\n";
            int i = 1;
            for (const auto& e : res.eigenvalues) {
                char buf[96];
                std::snprintf(buf, sizeof buf, "%5d  %12s  %12s  %12d\n", i++,
                              fmt9(e.energy).c_str(), fmt9(e.residual).c_str(),
                              e.multiplicity);
                out << buf;
            }
            break;
        }
    }
}

void report_suspects(const SpectrumResult& res, std::ostream& diag) {
    for (const auto& s : res.suspects) {
        diag << "suspect dip near E = " << fmt9(s.energy)
             << " (normalized sigma_min " << fmt3(s.sigma_min_normalized)
             << "), not accepted as an eigenvalue\n";
    }
}

// expanded-by-multiplicity energies, at most `want`
std::vector<double> expanded_energies(const std::vector<Eigenvalue>& evs, int want) {
    std::vector<double> out;
    for (const auto& e : evs) {
        for (int m = 0; m < e.multiplicity && static_cast<int>(out.size()) < want; ++m) {
            out.push_back(e.energy);
        }
        if (static_cast<int>(out.size()) >= want) break;
    }
    return out;
}

}  // namespace

std::string fmt9(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

int run_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    const BcChoice bc = parse_bc(cfg.bc);
    const SpectrumRequest req = build_request(cfg, bc);
    const SpectrumResult res = solve_spectrum(req);
    emit_spectrum(res, cfg.format, out);
    report_suspects(res, diag);
    return kExitOk;
}

int run_eigfn(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    if (cfg.index < 1) {
        diag << "eigenfunction index must be >= 1\n";
        return kExitBadRequest;
    }
    if (cfg.samples < 2) {
        diag << "sample count must be >= 2\n";
        return kExitBadRequest;
    }
    const BcChoice bc = parse_bc(cfg.bc);
    RunConfig solve_cfg = cfg;
    if (!cfg.window) solve_cfg.count = cfg.index;
    const SpectrumRequest req = build_request(solve_cfg, bc);
    const SpectrumResult res = solve_spectrum(req);

    // 1-based index over eigenfunctions, degenerate levels contributing
    // one member per multiplicity
    std::vector<Eigenfunction> members;
    for (const auto& e : res.eigenvalues) {
        auto basis = eigenfunction_basis(e.energy, req.problem, req.bc);
        for (auto& phi : basis) {
            members.push_back(std::move(phi));
            if (static_cast<int>(members.size()) >= cfg.index) break;
        }
        if (static_cast<int>(members.size()) >= cfg.index) break;
    }
    if (static_cast<int>(members.size()) < cfg.index) {
        diag << "index " << cfg.index << " is beyond the computed window ("
             << members.size() << " eigenfunctions found)\n";
        return kExitBadRequest;
    }
    const Eigenfunction& phi = members[cfg.index - 1];

    out << "x,phi_re,phi_im\n";
    for (const auto& [x, v] : sample_grid(phi, cfg.samples)) {
        out << fmt9(x) << ',' << fmt9(v.real()) << ',' << fmt9(v.imag()) << '\n';
    }
    diag << "E_" << cfg.index << " = " << fmt9(phi.energy) << "\n";
    return kExitOk;
}

int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    const TableFixture fx = load_table_fixture(cfg.table_id, cfg.data_dir);

    struct Cell {
        double L, F;
        int index;
        double computed, reference, diff;
        bool ok;
    };
    std::vector<Cell> cells;

    for (const TableRow& row : fx.rows) {
        const StarkProblem p(row.half_width, row.field);
        const int want = static_cast<int>(row.values.size());
        // degenerate levels are listed once per multiplicity in table 4
        SpectrumRequest req = SpectrumRequest::for_preset(
            p, fx.bc, -row.field * row.half_width - 1.0,
            -row.field * row.half_width + 4.0, want);
        const SpectrumResult res = solve_spectrum(req);
        const std::vector<double> got = expanded_energies(res.eigenvalues, want);
        for (int k = 0; k < want; ++k) {
            Cell c;
            c.L = row.half_width;
            c.F = row.field;
            c.index = k;
            c.computed = k < static_cast<int>(got.size())
                             ? got[k]
                             : std::numeric_limits<double>::quiet_NaN();
            c.reference = row.values[k];
            c.diff = std::abs(c.computed - c.reference);
            c.ok = c.diff <= fx.tolerance;
            cells.push_back(c);
        }
    }

    int good = 0;
    for (const Cell& c : cells) good += c.ok;

    const std::string name = preset_name(fx.bc);
    switch (cfg.format) {
        case Format::json: {
            JsonRows rows(out);
            for (const Cell& c : cells) {
                rows.row() << "\"L\": " << fmt9(c.L) << ", \"F\": " << fmt9(c.F)
                           << ", \"index\": " << c.index << ", \"computed\": "
                           << fmt9(c.computed) << ", \"reference\": "
                           << fmt9(c.reference) << ", \"abs_diff\": "
                           << fmt9(c.diff) << ", \"within_tolerance\": "
                           << (c.ok ? "true" : "false") << '}';
            }
            rows.close();
            break;
        }
        case Format::csv:
        case Format::text: {
            out << "L,F,index,computed,reference,abs_diff,status\n";
            for (const Cell& c : cells) {
                out << fmt9(c.L) << ',' << fmt9(c.F) << ',' << c.index << ','
                    << fmt9(c.computed) << ',' << fmt9(c.reference) << ','
                    << fmt3(c.diff) << ',' << (c.ok ? "ok" : "DIFF") << '\n';
            }
            break;
        }
    }
    diag << "table " << cfg.table_id << " (" << name << "): " << good << "/"
         << cells.size() << " entries within " << fmt3(fx.tolerance) << '\n';
    return good == static_cast<int>(cells.size()) ? kExitOk : kExitSolver;
}

int run_splitting(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    if (cfg.levels < 1) {
        diag << "splitting: --levels must be >= 1\n";
        return kExitBadRequest;
    }
    std::vector<double> fields = cfg.fields;
    if (fields.empty()) fields = {0.0, 0.01};
    // the degenerate F = 0 reference row always leads
    bool has_zero = false;
    for (double f : fields) has_zero |= f == 0.0;
    if (!has_zero) fields.insert(fields.begin(), 0.0);

    struct Row {
        double F;
        int level;
        double lower, upper, gap;
        int multiplicity;
    };
    std::vector<Row> rows;

    for (double F : fields) {
        const StarkProblem p(cfg.half_width, F);
        const bool degenerate = F == 0.0;
        const int want = 1 + (degenerate ? cfg.levels : 2 * cfg.levels);
        SpectrumRequest req = SpectrumRequest::for_preset(
            p, Preset::periodic, -F * cfg.half_width - 1.0,
            -F * cfg.half_width + 4.0, want);
        const SpectrumResult res = solve_spectrum(req);
        report_suspects(res, diag);
        const auto& evs = res.eigenvalues;
        if (evs.empty()) continue;
        // evs[0] is the ground state; pair the rest
        size_t k = 1;
        for (int level = 1; level <= cfg.levels && k < evs.size(); ++level) {
            Row r;
            r.F = F;
            r.level = level;
            if (evs[k].multiplicity >= 2) {
                r.lower = r.upper = evs[k].energy;
                r.gap = 0.0;
                r.multiplicity = 2;
                k += 1;
            } else {
                r.lower = evs[k].energy;
                r.upper = k + 1 < evs.size() ? evs[k + 1].energy : evs[k].energy;
                r.gap = r.upper - r.lower;
                r.multiplicity = 1;
                k += 2;
            }
            rows.push_back(r);
        }
    }

    switch (cfg.format) {
        case Format::json: {
            JsonRows jrows(out);
            for (const Row& r : rows) {
                jrows.row() << "\"F\": " << fmt9(r.F) << ", \"level\": " << r.level
                            << ", \"e_lower\": " << fmt9(r.lower)
                            << ", \"e_upper\": " << fmt9(r.upper) << ", \"gap\": "
                            << fmt9(r.gap) << ", \"multiplicity\": "
                            << r.multiplicity << '}';
            }
            jrows.close();
            break;
        }
        case Format::csv:
        case Format::text: {
            out << "F,level,e_lower,e_upper,gap,multiplicity\n";
            for (const Row& r : rows) {
                out << fmt9(r.F) << ',' << r.level << ',' << fmt9(r.lower) << ','
                    << fmt9(r.upper) << ',' << fmt9(r.gap) << ',' << r.multiplicity
                    << '\n';
            }
            break;
        }
    }
    return kExitOk;
}

int run(const RunConfig& cfg, std::ostream& diag) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path, std::ios::binary);
        if (!file) {
            diag << "cannot open output file " << cfg.out_path << '\n';
            return kExitBadRequest;
        }
        out = &file;
    }
    switch (cfg.command) {
        case Command::spectrum: return run_spectrum(cfg, *out, diag);
        case Command::eigfn: return run_eigfn(cfg, *out, diag);
        case Command::table: return run_table(cfg, *out, diag);
        case Command::splitting: return run_splitting(cfg, *out, diag);
    }
    return kExitBadRequest;
}

}  // namespace stark::cli
