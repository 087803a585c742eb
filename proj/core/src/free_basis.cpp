#include "stark/free_basis.hpp"

#include <cmath>

namespace stark {
namespace {

// C(z) = cos(sqrt(z)) continued through z <= 0, S(z) = sin(sqrt(z))/sqrt(z),
// and G(z) = (C - S)/(2z); all entire in z = E x^2.
struct Kernel {
    double C, S, G;
};

Kernel kernel(double z) {
    Kernel k;
    if (std::abs(z) < 1e-3) {
        // C = 1 - z/2 + z^2/24 - z^3/720, S = 1 - z/6 + z^2/120 - z^3/5040
        // G = -1/6 + z/60 - z^2/1680  (from (C-S)/(2z) termwise)
        const double z2 = z * z;
        k.C = 1.0 - z / 2.0 + z2 / 24.0 - z * z2 / 720.0;
        k.S = 1.0 - z / 6.0 + z2 / 120.0 - z * z2 / 5040.0;
        k.G = -1.0 / 6.0 + z / 60.0 - z2 / 1680.0;
    } else if (z > 0.0) {
        const double r = std::sqrt(z);
        k.C = std::cos(r);
        k.S = std::sin(r) / r;
        k.G = (k.C - k.S) / (2.0 * z);
    } else {
        const double r = std::sqrt(-z);
        k.C = std::cosh(r);
        k.S = std::sinh(r) / r;
        k.G = (k.C - k.S) / (2.0 * z);
    }
    return k;
}

}  // namespace

FreeBasisEval free_basis_eval(double x, double energy) {
    const double z = energy * x * x;
    const Kernel k = kernel(z);
    FreeBasisEval e;
    e.c = k.C;
    e.s = x * k.S;
    e.cp = -energy * e.s;
    e.sp = k.C;
    // dc/dE = -(x/2) s,  ds/dE = x^3 (C - S)/(2z) = x^3 G
    e.dcdE = -0.5 * x * e.s;
    e.dsdE = x * x * x * k.G;
    return e;
}

}  // namespace stark
