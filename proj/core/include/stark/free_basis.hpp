#pragma once

namespace stark {

/// The entire-in-E solution basis of -y'' = E y used on the F = 0 path:
///   c(x,E) = cos(sqrt(E) x)            (cosh for E < 0, 1 at E = 0)
///   s(x,E) = sin(sqrt(E) x)/sqrt(E)    (sinh analogue, x at E = 0)
/// Both are entire functions of E with Wronskian c s' - c' s = 1;
/// s' = c and c' = -E s.
struct FreeBasisEval {
    double c;
    double s;
    double cp;    // dc/dx
    double sp;    // ds/dx
    double dcdE;  // dc/dE
    double dsdE;  // ds/dE
};

FreeBasisEval free_basis_eval(double x, double energy);

}  // namespace stark
