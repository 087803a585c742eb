#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "stark/boundary.hpp"
#include "stark/problem.hpp"
#include "stark/unitary.hpp"

namespace stark {

/// What to solve: problem, boundary condition, energy window, optional count.
/// When `which` is set the real reduced characteristic is used; otherwise
/// the sigma_min path handles the arbitrary unitary matrix in `bc`.
struct SpectrumRequest {
    StarkProblem problem;
    UnitaryBC bc;
    std::optional<Preset> which;
    double window_lo;
    double window_hi;
    std::optional<int> count;  // first n eigenvalues, window expanded upward
    double scan_step = 0.0;    // <= 0 selects min(0.5, pi^2 / (8 L^2))

    static SpectrumRequest for_preset(const StarkProblem& p, Preset which,
                                      double lo, double hi,
                                      std::optional<int> count = std::nullopt);
    static SpectrumRequest for_unitary(const StarkProblem& p, const UnitaryBC& u,
                                       double lo, double hi,
                                       std::optional<int> count = std::nullopt);

    double effective_step() const;
    void validate() const;
};

/// A located root of the characteristic function.
struct Eigenvalue {
    double energy;
    double residual;      // |det(L-UM)| / (row1(L) * row2(L)), dimensionless
    int multiplicity;     // 1 or 2
    double bracket_lo;
    double bracket_hi;
};

/// A sigma_min dip that came close to the acceptance threshold but missed it.
struct Suspect {
    double energy;
    double sigma_min_normalized;
};

struct SpectrumResult {
    std::vector<Eigenvalue> eigenvalues;
    std::vector<Suspect> suspects;
};

/// Sign-change scan: maximal list of intervals [a,b] in [lo,hi] with
/// f(a)*f(b) < 0, each of width <= step.  A grid point where f vanishes
/// exactly yields the degenerate interval [x,x].
std::vector<std::pair<double, double>> bracket_scan(
    double lo, double hi, double step, const std::function<double(double)>& f);

/// Safeguarded Newton (bisection fallback) on a sign-change bracket.
/// Converges to bracket width <= 1e-10; at most 200 iterations, failures
/// throw std::runtime_error carrying the offending bracket.
/// Returns the refined energy and final bracket; residual and multiplicity
/// are filled by the caller.
struct RefinedRoot {
    double energy;
    double bracket_lo;
    double bracket_hi;
    int iterations;
};
RefinedRoot refine_root(double lo, double hi,
                        const std::function<double(double)>& f,
                        const std::function<double(double)>& df);

/// All eigenvalues in the window (or the first `count`), via the reduced
/// real characteristic when a preset is named, else via solve_generic.
/// Near-degenerate pairs invisible to the coarse scan are recovered by a
/// fine secondary scan; exactly degenerate levels are located as sigma_min
/// dips and reported with multiplicity 2.
SpectrumResult solve_spectrum(const SpectrumRequest& req);

/// Eigenvalues of an arbitrary self-adjoint extension: zeros of the
/// normalized smallest singular value of (L - U M), located by dip
/// detection plus golden-section minimization.  Dips whose minimized value
/// stays above the acceptance threshold are reported as suspects.
SpectrumResult solve_generic(const SpectrumRequest& req);

/// Multiplicity of an accepted eigenvalue: 2 when both singular values of
/// (L - U M)(E) vanish against the scale of the boundary matrices.
int detect_degeneracy(double energy, const StarkProblem& p, const UnitaryBC& u);

/// The dimensionless residual stored on Eigenvalue records.
double normalized_residual(double energy, const StarkProblem& p, const UnitaryBC& u);

/// Lowest energy at which the Airy-basis boundary matrices stay inside the
/// kernel's overflow guard (L+(E,F) bounded).  Always below the spectrum
/// bottom -F L for fields in the operational range, so clamping a default
/// window to this floor never discards eigenvalues.  The free path has no
/// floor.
double evaluable_window_floor(const StarkProblem& p);

}  // namespace stark
