#include "stark/eigenfunction.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "stark/airy.hpp"
#include "stark/free_basis.hpp"
#include "stark/solver.hpp"

namespace stark {
namespace {

constexpr double kResidualGate = 1e-8;
constexpr double kQuadTol = 1e-10;
constexpr int kQuadMaxDepth = 30;

struct BasisVals {
    double f, fp, g, gp;  // first/second basis member and x-derivatives
};

BasisVals basis_at(const StarkProblem& p, double energy, double x) {
    if (uses_free_limit(p)) {
        const FreeBasisEval e = free_basis_eval(x, energy);
        return {e.c, e.cp, e.s, e.sp};
    }
    const double j = std::cbrt(p.field);
    const double z = j * (x - energy / p.field);
    const AiryEval e = airy_eval(z);
    return {e.ai, j * e.aip, e.bi, j * e.bip};
}

double simpson_recurse(const std::function<double(double)>& f, double a, double b,
                       double fa, double fm, double fb, double whole, double tol,
                       int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (!std::isfinite(delta)) {
        throw std::runtime_error("adaptive Simpson: non-finite integrand");
    }
    // Converged, or the panel is at the evaluation-noise scale where further
    // splitting only chases rounding jitter (the leftover deltas are orders
    // of magnitude below the requested tolerance).
    if (std::abs(delta) <= 15.0 * tol || depth <= 0 || (b - a) <= 1e-7) {
        return left + right + delta / 15.0;
    }
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_recurse(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

cplx eval_with_coeffs(const StarkProblem& p, double energy, cplx a, cplx b, double x) {
    const BasisVals v = basis_at(p, energy, x);
    return a * v.f + b * v.g;
}

}  // namespace

NullspaceBasis coefficient_vector(double energy, const StarkProblem& p,
                                  const UnitaryBC& u) {
    const double resid = normalized_residual(energy, p, u);
    if (!(resid <= kResidualGate)) {
        throw std::invalid_argument(
            "coefficient_vector: E = " + std::to_string(energy) +
            " has residual " + std::to_string(resid) + " above 1e-8");
    }
    if (detect_degeneracy(energy, p, u) == 2) {
        // full nullspace: basis choice (1,0), (0,1) keeps the F = 0 members
        // even (c) and odd (s)
        return {CoeffPair{1.0, 0.0}, CoeffPair{0.0, 1.0}};
    }
    const BoundaryMatrices bm = boundary_matrices_any(energy, p);
    const Mat2 pencil = bm.l_mat - u.entries * bm.m_mat;
    const auto v = smallest_singular_vector(pencil);
    return {CoeffPair{v[0], v[1]}, std::nullopt};
}

Eigenfunction make_eigenfunction(double energy, const StarkProblem& p,
                                 const UnitaryBC& u) {
    const NullspaceBasis nb = coefficient_vector(energy, p, u);
    return {p, u, energy, nb.first.a, nb.first.b, 0.0};
}

std::vector<Eigenfunction> eigenfunction_basis(double energy, const StarkProblem& p,
                                               const UnitaryBC& u) {
    const NullspaceBasis nb = coefficient_vector(energy, p, u);
    std::vector<Eigenfunction> out;
    out.push_back(normalize({p, u, energy, nb.first.a, nb.first.b, 0.0}));
    if (nb.second) {
        out.push_back(normalize({p, u, energy, nb.second->a, nb.second->b, 0.0}));
    }
    return out;
}

cplx evaluate(const Eigenfunction& phi, double x) {
    const double L = phi.problem.half_width;
    if (!(x >= -L - 1e-12 * L && x <= L + 1e-12 * L)) {
        throw std::domain_error("evaluate: x = " + std::to_string(x) +
                                " outside [-L, L]");
    }
    return eval_with_coeffs(phi.problem, phi.energy, phi.coeff_a, phi.coeff_b, x);
}

cplx evaluate_derivative(const Eigenfunction& phi, double x) {
    const double L = phi.problem.half_width;
    if (!(x >= -L - 1e-12 * L && x <= L + 1e-12 * L)) {
        throw std::domain_error("evaluate_derivative: x outside [-L, L]");
    }
    const BasisVals v = basis_at(phi.problem, phi.energy, x);
    return phi.coeff_a * v.fp + phi.coeff_b * v.gp;
}

Eigenfunction normalize(const Eigenfunction& phi) {
    if (std::abs(phi.coeff_a) == 0.0 && std::abs(phi.coeff_b) == 0.0) {
        throw std::invalid_argument("normalize: zero coefficient vector");
    }
    const double L = phi.problem.half_width;
    const auto density = [&phi](double x) {
        return std::norm(eval_with_coeffs(phi.problem, phi.energy, phi.coeff_a,
                                          phi.coeff_b, x));
    };
    const double nrm2 = adaptive_simpson(density, -L, L, kQuadTol, kQuadMaxDepth);
    const double nrm = std::sqrt(nrm2);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) {
        throw std::runtime_error("normalize: quadrature produced a bad norm");
    }

    Eigenfunction out = phi;
    out.coeff_a /= nrm;
    out.coeff_b /= nrm;
    out.norm = nrm;

    // Phase convention: first extremum of |phi| from the left is positive real.
    constexpr int kGrid = 4097;
    double best = 0.0;
    std::vector<double> mags(kGrid);
    std::vector<cplx> vals(kGrid);
    for (int i = 0; i < kGrid; ++i) {
        const double x = -L + 2.0 * L * i / (kGrid - 1);
        vals[i] = eval_with_coeffs(out.problem, out.energy, out.coeff_a, out.coeff_b, x);
        mags[i] = std::abs(vals[i]);
        best = std::max(best, mags[i]);
    }
    int pick = -1;
    for (int i = 1; i + 1 < kGrid; ++i) {
        if (mags[i] >= mags[i - 1] && mags[i] >= mags[i + 1] && mags[i] >= 0.05 * best) {
            pick = i;
            break;
        }
    }
    if (pick < 0) {
        pick = 0;
        for (int i = 1; i < kGrid; ++i) {
            if (mags[i] > mags[pick]) pick = i;
        }
    }
    const cplx v = vals[pick];
    if (std::abs(v) > 0.0) {
        const cplx rot = std::conj(v) / std::abs(v);
        out.coeff_a *= rot;
        out.coeff_b *= rot;
    }
    return out;
}

std::vector<std::pair<double, cplx>> sample_grid(const Eigenfunction& phi, int n_points) {
    if (n_points < 2) {
        throw std::invalid_argument("sample_grid: n_points must be >= 2");
    }
    const double L = phi.problem.half_width;
    std::vector<std::pair<double, cplx>> out;
    out.reserve(n_points);
    for (int i = 0; i < n_points; ++i) {
        const double x = -L + 2.0 * L * i / (n_points - 1);
        out.emplace_back(x, evaluate(phi, x));
    }
    return out;
}

std::array<cplx, 4> boundary_trace(const Eigenfunction& phi) {
    const double L = phi.problem.half_width;
    return {evaluate(phi, -L), evaluate_derivative(phi, -L),
            evaluate(phi, L), evaluate_derivative(phi, L)};
}

cplx inner_product(const Eigenfunction& m, const Eigenfunction& n) {
    const double L = m.problem.half_width;
    const auto re = [&](double x) {
        return std::real(evaluate(m, x) * std::conj(evaluate(n, x)));
    };
    const auto im = [&](double x) {
        return std::imag(evaluate(m, x) * std::conj(evaluate(n, x)));
    };
    return {adaptive_simpson(re, -L, L, kQuadTol, kQuadMaxDepth),
            adaptive_simpson(im, -L, L, kQuadTol, kQuadMaxDepth)};
}

}  // namespace stark
