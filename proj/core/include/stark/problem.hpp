#pragma once

#include <cmath>
#include <stdexcept>

namespace stark {

/// Interval half-width and field strength of H = -d^2/dx^2 + F x on [-L, L].
struct StarkProblem {
    double half_width;  // L > 0
    double field;       // F >= 0; F = 0 is the analytic free limit

    StarkProblem(double L, double F) : half_width(L), field(F) {
        if (!(std::isfinite(L) && L > 0.0)) {
            throw std::invalid_argument("StarkProblem: half_width must be finite and > 0");
        }
        if (!(std::isfinite(F) && F >= 0.0)) {
            throw std::invalid_argument("StarkProblem: field must be finite and >= 0");
        }
    }
};

/// Fields below this are treated as the analytic F = 0 limit everywhere.
inline constexpr double kFreeFieldThreshold = 1e-12;

inline bool uses_free_limit(const StarkProblem& p) {
    return p.field <= kFreeFieldThreshold;
}

/// Scaled interval endpoints of the Airy change of variables.
struct ScaledEndpoints {
    double l_plus;   // F^(1/3) (L - E/F)
    double l_minus;  // -F^(1/3) (L + E/F)
};

/// Requires p.field > 0 (the F = 0 path never builds scaled endpoints).
inline ScaledEndpoints scaled_endpoints(double energy, const StarkProblem& p) {
    if (p.field <= 0.0) {
        throw std::domain_error("scaled_endpoints: field must be positive");
    }
    const double c = std::cbrt(p.field);
    const double shift = energy / p.field;
    return {c * (p.half_width - shift), -c * (p.half_width + shift)};
}

}  // namespace stark
