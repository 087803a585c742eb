#pragma once

#include <string>

#include "stark/mat2.hpp"

namespace stark {

/// The four boundary conditions studied as closed-form cases.
enum class Preset { dirichlet, neumann, mixed, periodic };

/// A 2x2 unitary matrix selecting a self-adjoint extension H_U.
///
/// Boundary condition in trace coordinates:
///   (L phi'(-L) - i phi(-L), L phi'(L) + i phi(L))^T
///     = U (L phi'(-L) + i phi(-L), L phi'(L) - i phi(L))^T
struct UnitaryBC {
    Mat2 entries;
};

/// U = e^{i theta} [[alpha, beta], [-conj(beta), conj(alpha)]].
/// (alpha, beta) is renormalized when | |a|^2+|b|^2 - 1 | <= 1e-6 and
/// rejected otherwise.
UnitaryBC make_unitary(double theta, cplx alpha, cplx beta);

/// I, -I, diag(1,-1), [[0,1],[1,0]] respectively.
UnitaryBC preset(Preset which);

Preset preset_from_name(const std::string& name);
std::string preset_name(Preset which);

/// Validate a user-supplied matrix: throws std::invalid_argument with the
/// defect value when max|U*U - I| exceeds 1e-10.
UnitaryBC validated_unitary(const Mat2& entries);

}  // namespace stark
