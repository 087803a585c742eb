#include "stark/unitary.hpp"

#include <cmath>
#include <stdexcept>

namespace stark {

UnitaryBC make_unitary(double theta, cplx alpha, cplx beta) {
    if (!std::isfinite(theta) || !std::isfinite(alpha.real()) ||
        !std::isfinite(alpha.imag()) || !std::isfinite(beta.real()) ||
        !std::isfinite(beta.imag())) {
        throw std::invalid_argument("make_unitary: non-finite parameter");
    }
    const double n2 = std::norm(alpha) + std::norm(beta);
    if (std::abs(n2 - 1.0) > 1e-6) {
        throw std::invalid_argument(
            "make_unitary: |alpha|^2 + |beta|^2 = " + std::to_string(n2) +
            " is not normalizable (tolerance 1e-6)");
    }
    const double n = std::sqrt(n2);
    alpha /= n;
    beta /= n;
    const cplx phase = std::polar(1.0, theta);
    return {Mat2{phase * alpha, phase * beta,
                 -phase * std::conj(beta), phase * std::conj(alpha)}};
}

UnitaryBC preset(Preset which) {
    switch (which) {
        case Preset::dirichlet: return {Mat2{1.0, 0.0, 0.0, 1.0}};
        case Preset::neumann:   return {Mat2{-1.0, 0.0, 0.0, -1.0}};
        case Preset::mixed:     return {Mat2{1.0, 0.0, 0.0, -1.0}};
        case Preset::periodic:  return {Mat2{0.0, 1.0, 1.0, 0.0}};
    }
    throw std::invalid_argument("preset: unknown case");
}

Preset preset_from_name(const std::string& name) {
    if (name == "dirichlet") return Preset::dirichlet;
    if (name == "neumann") return Preset::neumann;
    if (name == "mixed") return Preset::mixed;
    if (name == "periodic") return Preset::periodic;
    throw std::invalid_argument("unknown boundary-condition preset: " + name);
}

std::string preset_name(Preset which) {
    switch (which) {
        case Preset::dirichlet: return "dirichlet";
        case Preset::neumann:   return "neumann";
        case Preset::mixed:     return "mixed";
        case Preset::periodic:  return "periodic";
    }
    return "?";
}

UnitaryBC validated_unitary(const Mat2& entries) {
    const double defect = unitarity_defect(entries);
    if (!(defect <= 1e-10)) {
        throw std::invalid_argument("matrix is not unitary: max|U*U - I| = " +
                                    std::to_string(defect));
    }
    return {entries};
}

}  // namespace stark
