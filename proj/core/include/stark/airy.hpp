#pragma once

#include <utility>

namespace stark {

/// Values of the Airy pair and their first derivatives at one real argument.
///
/// Invariant: ai*bip - aip*bi == 1/pi (Wronskian of the pair).
struct AiryEval {
    double x;
    double ai;
    double aip;  // dAi/dx
    double bi;
    double bip;  // dBi/dx
};

/// Evaluate Ai, Ai', Bi, Bi' at x.
///
/// Self-contained: Maclaurin series with double-double accumulation for
/// |x| <= 7.5, asymptotic expansions truncated at their smallest term
/// beyond.  Full 1e-12 absolute-or-relative accuracy holds on [-30, 15];
/// outside that band accuracy degrades gracefully (phase-limited on the
/// far negative axis, where only root locations of downstream
/// determinants matter, not the last digits of the values).
///
/// Throws std::domain_error for non-finite x, x > 80 (Bi meaningless
/// close to double overflow) or x < -1e8.
AiryEval airy_eval(double x);

/// Second derivatives from the defining equation y'' = x*y.
/// Returns (x*e.ai, x*e.bi); e must come from airy_eval at the same x.
std::pair<double, double> airy_second(double x, const AiryEval& e);

namespace airy_limits {
inline constexpr double max_argument = 80.0;
inline constexpr double min_argument = -1.0e8;
inline constexpr double series_cutoff = 7.5;
}  // namespace airy_limits

namespace detail {
// Individual evaluation branches, exposed so tests can check their
// agreement across the crossover band.
AiryEval airy_series(double x);      // |x| <= ~8.5
AiryEval airy_asymptotic(double x);  // |x| >= ~7
}  // namespace detail

}  // namespace stark
