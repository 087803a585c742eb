#pragma once

// Minimal double-double arithmetic for the Airy series accumulation.
// Error-free transformations; products use FMA.

#include <cmath>

namespace stark::detail {

struct dd {
    double hi;
    double lo;
};

inline dd quick_two_sum(double a, double b) {
    // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_from(double x) { return {x, 0.0}; }

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_add(dd a, double b) {
    dd s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul(dd a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(dd a, double b) {
    double q1 = a.hi / b;
    dd r = two_prod(q1, b);
    double q2 = ((a.hi - r.hi) - r.lo + a.lo) / b;
    return quick_two_sum(q1, q2);
}

inline dd dd_sub(dd a, dd b) { return dd_add(a, dd{-b.hi, -b.lo}); }

}  // namespace stark::detail
