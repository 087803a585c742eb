#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "stark/boundary.hpp"
#include "stark/problem.hpp"
#include "stark/unitary.hpp"

namespace stark {

/// Coefficients (A, B) of phi = A Ai + B Bi (or A c + B s at F = 0).
struct CoeffPair {
    cplx a;
    cplx b;
};

/// Nullspace of (L - U M)(E): one vector for a simple eigenvalue, an
/// orthonormal pair for a double one.
struct NullspaceBasis {
    CoeffPair first;
    std::optional<CoeffPair> second;
};

/// Right singular vector(s) of (L - U M)(E) for the smallest singular
/// value(s).  Refuses E whose normalized residual exceeds 1e-8.
/// For a doubly degenerate E at F = 0 the pair is (1,0), (0,1): the basis
/// members c and s are even and odd, so the convention is reproducible.
NullspaceBasis coefficient_vector(double energy, const StarkProblem& p,
                                  const UnitaryBC& u);

struct Eigenfunction {
    StarkProblem problem;
    UnitaryBC bc;
    double energy;
    cplx coeff_a;
    cplx coeff_b;
    double norm;  // L2 norm of the superposition before normalization
};

/// Assemble the (not yet normalized) eigenfunction for an accepted E.
Eigenfunction make_eigenfunction(double energy, const StarkProblem& p,
                                 const UnitaryBC& u);

/// Both members for a degenerate level (one for a simple one), normalized.
std::vector<Eigenfunction> eigenfunction_basis(double energy, const StarkProblem& p,
                                               const UnitaryBC& u);

/// phi(x); x must lie in [-L, L].
cplx evaluate(const Eigenfunction& phi, double x);

/// dphi/dx in the physical variable (chain-rule factor F^(1/3) included).
cplx evaluate_derivative(const Eigenfunction& phi, double x);

/// Rescale so the L2 norm over [-L, L] is 1 (adaptive Simpson, abs tol
/// 1e-10) and rotate the global phase so the first extremum of |phi| from
/// the left is positive real.
Eigenfunction normalize(const Eigenfunction& phi);

/// Uniform samples including both endpoints; n_points >= 2.
std::vector<std::pair<double, cplx>> sample_grid(const Eigenfunction& phi, int n_points);

/// (phi(-L), phi'(-L), phi(L), phi'(L)).
std::array<cplx, 4> boundary_trace(const Eigenfunction& phi);

/// Integral of phi_m conj(phi_n) over [-L, L].
cplx inner_product(const Eigenfunction& m, const Eigenfunction& n);

}  // namespace stark
