#pragma once

#include <array>

#include "stark/mat2.hpp"
#include "stark/problem.hpp"
#include "stark/unitary.hpp"

namespace stark {

/// Boundary matrices of the Airy ansatz: the trace vectors of
/// phi = A Ai + B Bi equal L_mat (A,B)^T and M_mat (A,B)^T.
/// For real E, m_mat is the entrywise conjugate of l_mat.
struct BoundaryMatrices {
    Mat2 l_mat;
    Mat2 m_mat;
};

/// Requires p.field > 0.  Derivative entries carry the chain-rule factor
/// F^(1/3) of the substitution x -> F^(1/3)(x - E/F), so that the F -> 0
/// limit reproduces the analytic free matrices.
BoundaryMatrices boundary_matrices(double energy, const StarkProblem& p);

/// det(L - U M)(E); E is an eigenvalue of H_U iff this vanishes.
/// Dispatches to the F = 0 basis when p.field is below the free threshold.
cplx characteristic(double energy, const StarkProblem& p, const UnitaryBC& u);

/// The real per-case determinant expressions whose zeros are the preset
/// spectra (Airy path; requires p.field > 0):
///   dirichlet:  Ai(L-) Bi(L+) - Ai(L+) Bi(L-)
///   neumann:    Ai'(L-) Bi'(L+) - Ai'(L+) Bi'(L-)
///   mixed:      Ai'(L+) Bi(L-) - Ai(L-) Bi'(L+)
///   periodic:   (Ai'(L-)-Ai'(L+))(Bi(L+)-Bi(L-))
///                 - (Ai(L+)-Ai(L-))(Bi'(L-)-Bi'(L+))
double reduced_characteristic(double energy, const StarkProblem& p, Preset which);

/// Analytic derivative d/dE of reduced_characteristic (chain rule
/// dL±/dE = -F^(-2/3) and Ai'' = x Ai).
double reduced_characteristic_derivative(double energy, const StarkProblem& p,
                                         Preset which);

/// F = 0 analogues built on the entire-in-E basis c, s.
/// free_characteristic requires p.field == 0 (below the free threshold).
cplx free_characteristic(double energy, const StarkProblem& p, const UnitaryBC& u);
BoundaryMatrices free_boundary_matrices(double energy, const StarkProblem& p);
double free_reduced_characteristic(double energy, const StarkProblem& p, Preset which);
double free_reduced_characteristic_derivative(double energy, const StarkProblem& p,
                                              Preset which);

/// Boundary matrices for either regime (Airy or free) -- the uniform entry
/// point for the sigma_min machinery.
BoundaryMatrices boundary_matrices_any(double energy, const StarkProblem& p);

/// The sesquilinear boundary form B(phi,phi) evaluated from the trace of
/// phi: returns Im(phi'(L) conj(phi(L))) - Im(phi'(-L) conj(phi(-L))),
/// which vanishes exactly on self-adjoint domains.
double boundary_form(cplx phi_minus, cplx dphi_minus, cplx phi_plus,
                     cplx dphi_plus, double half_width);

}  // namespace stark
