#include "stark/airy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "double_double.hpp"

namespace stark {
namespace {

using detail::dd;
using detail::dd_add;
using detail::dd_div;
using detail::dd_from;
using detail::dd_mul;
using detail::dd_sub;
using detail::two_prod;

// Ai(0), -Ai'(0), sqrt(3) to double-double precision.
constexpr dd kC1{0.3550280538878172, 2.05233632436212e-17};
constexpr dd kC2{0.2588194037928068, -2.522243111610832e-17};
constexpr dd kSqrt3{1.7320508075688772, 1.0035084221806903e-16};

constexpr double kInv2SqrtPi = 0.28209479177387814;  // 1/(2 sqrt(pi))
constexpr double kInvSqrtPi = 0.5641895835477563;    // 1/sqrt(pi)
constexpr dd kQuarterPi{0.7853981633974483, 3.061616997868383e-17};
constexpr dd kTwoThirds{0.6666666666666666, 3.700743415417188e-17};

// zeta = (2/3) t^(3/2) in double-double.  The phase reaches ~1e10 on the far
// negative axis, so a plain-double zeta would quantize at ~1e-12 rad and
// leak into every oscillatory value; the refined square root keeps the
// phase error at the eps level of the final trig call.
dd zeta_dd(double t) {
    const double s = std::sqrt(t);
    const dd s2 = two_prod(s, s);
    const double e = ((t - s2.hi) - s2.lo) / (2.0 * s);  // sqrt correction
    dd ts = two_prod(t, s);
    ts.lo += t * e;
    ts = detail::quick_two_sum(ts.hi, ts.lo);
    return dd_mul(ts, kTwoThirds);
}

// Maclaurin basis f, g of y'' = xy:
//   f = sum t_k,  t_0 = 1,     t_{k+1} = t_k x^3 / ((3k+2)(3k+3))
//   g = sum u_k,  u_0 = x,     u_{k+1} = u_k x^3 / ((3k+3)(3k+4))
//   f'= sum v_k,  v_1 = x^2/2, v_{k+1} = v_k x^3 / ((3k)(3k+2)), k>=1
//   g'= sum w_k,  w_0 = 1,     w_{k+1} = w_k x^3 / ((3k+1)(3k+3))
// Then Ai = c1 f - c2 g, Bi = sqrt3 (c1 f + c2 g), same for derivatives.
AiryEval series_eval(double x) {
    const dd x2 = two_prod(x, x);
    const dd x3 = dd_mul(x2, x);

    dd tf = dd_from(1.0);
    dd tg = dd_from(x);
    dd tfp = dd_mul(x2, 0.5);
    dd tgp = dd_from(1.0);

    dd f = tf, g = tg, fp = tfp, gp = tgp;

    for (int k = 0; k < 120; ++k) {
        const double a = 3.0 * k;
        tf = dd_div(dd_mul(tf, x3), (a + 2.0) * (a + 3.0));
        tg = dd_div(dd_mul(tg, x3), (a + 3.0) * (a + 4.0));
        tfp = dd_div(dd_mul(tfp, x3), (a + 3.0) * (a + 5.0));
        tgp = dd_div(dd_mul(tgp, x3), (a + 1.0) * (a + 3.0));
        f = dd_add(f, tf);
        g = dd_add(g, tg);
        fp = dd_add(fp, tfp);
        gp = dd_add(gp, tgp);
        const double biggest =
            std::max(std::max(std::abs(tf.hi), std::abs(tg.hi)),
                     std::max(std::abs(tfp.hi), std::abs(tgp.hi)));
        if (biggest < 1e-40 * (1.0 + std::abs(f.hi))) break;
    }

    const dd c1f = dd_mul(kC1, f);
    const dd c2g = dd_mul(kC2, g);
    const dd c1fp = dd_mul(kC1, fp);
    const dd c2gp = dd_mul(kC2, gp);

    AiryEval e;
    e.x = x;
    e.ai = dd_sub(c1f, c2g).hi;
    e.aip = dd_sub(c1fp, c2gp).hi;
    e.bi = dd_mul(kSqrt3, dd_add(c1f, c2g)).hi;
    e.bip = dd_mul(kSqrt3, dd_add(c1fp, c2gp)).hi;
    return e;
}

// Asymptotic coefficients c_k (DLMF u_k) and d_k (v_k):
//   c_0 = 1, c_k = c_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1))
//   d_k = -c_k (6k+1)/(6k-1)
// Expansions are truncated at the smallest term.

AiryEval asymptotic_positive(double x) {
    const dd zeta = zeta_dd(x);
    const double rzeta = 1.0 / zeta.hi;

    double su = 1.0, sv = 1.0;    // alternating sums (Ai, Ai')
    double sub = 1.0, svb = 1.0;  // same-sign sums (Bi, Bi')
    double ck = 1.0;
    double powz = 1.0;
    double prev = 1.0;
    double sign = -1.0;
    for (int k = 1; k < 80; ++k) {
        ck *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
              (216.0 * k * (2.0 * k - 1.0));
        powz *= rzeta;
        const double term = ck * powz;
        if (term >= prev) break;
        prev = term;
        const double dterm = -term * (6.0 * k + 1.0) / (6.0 * k - 1.0);
        su += sign * term;
        sv += sign * dterm;
        sub += term;
        svb += dterm;
        sign = -sign;
        if (term < 1e-18) break;
    }

    const double q = std::sqrt(std::sqrt(x));  // x^(1/4)
    const double em = std::exp(-zeta.hi) * (1.0 - zeta.lo);
    const double ep = std::exp(zeta.hi) * (1.0 + zeta.lo);

    AiryEval e;
    e.x = x;
    e.ai = kInv2SqrtPi * em / q * su;
    e.aip = -kInv2SqrtPi * em * q * sv;
    e.bi = kInvSqrtPi * ep / q * sub;
    e.bip = kInvSqrtPi * ep * q * svb;
    return e;
}

AiryEval asymptotic_negative(double x) {
    const double t = -x;
    const dd zeta = zeta_dd(t);
    const double rzeta = 1.0 / zeta.hi;

    // P = sum (-1)^j c_{2j} zeta^{-2j},   Q = sum (-1)^j c_{2j+1} zeta^{-2j-1}
    // R, S likewise with d_k.  Sign pattern by k mod 4: +,+,-,-.
    double P = 1.0, Q = 0.0, R = 1.0, S = 0.0;
    double ck = 1.0;
    double powz = 1.0;
    double prev = 2.0;
    for (int k = 1; k < 80; ++k) {
        ck *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
              (216.0 * k * (2.0 * k - 1.0));
        powz *= rzeta;
        const double term = ck * powz;
        if (term >= prev && k > 1) break;
        prev = term;
        const double dterm = -term * (6.0 * k + 1.0) / (6.0 * k - 1.0);
        const double s = (k % 4 < 2) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            P += s * term;
            R += s * dterm;
        } else {
            Q += s * term;
            S += s * dterm;
        }
        if (term < 1e-18) break;
    }

    // theta = zeta - pi/4 to double-double; first-order trig correction in
    // the low part (|theta.lo| <= one ulp of theta.hi)
    const dd theta = dd_sub(zeta, kQuarterPi);
    const double ch = std::cos(theta.hi);
    const double sh = std::sin(theta.hi);
    const double ct = ch - sh * theta.lo;
    const double st = sh + ch * theta.lo;
    const double q = std::sqrt(std::sqrt(t));

    AiryEval e;
    e.x = x;
    e.ai = kInvSqrtPi / q * (ct * P + st * Q);
    e.bi = kInvSqrtPi / q * (-st * P + ct * Q);
    e.aip = kInvSqrtPi * q * (st * R - ct * S);
    e.bip = kInvSqrtPi * q * (ct * R + st * S);
    return e;
}

}  // namespace

AiryEval airy_eval(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("airy_eval: non-finite argument");
    }
    if (x > airy_limits::max_argument || x < airy_limits::min_argument) {
        throw std::domain_error("airy_eval: argument " + std::to_string(x) +
                                " outside supported range [" +
                                std::to_string(airy_limits::min_argument) + ", " +
                                std::to_string(airy_limits::max_argument) + "]");
    }
    if (std::abs(x) <= airy_limits::series_cutoff) return series_eval(x);
    return x > 0 ? asymptotic_positive(x) : asymptotic_negative(x);
}

namespace detail {
AiryEval airy_series(double x) { return series_eval(x); }
AiryEval airy_asymptotic(double x) {
    return x > 0 ? asymptotic_positive(x) : asymptotic_negative(x);
}
}  // namespace detail

std::pair<double, double> airy_second(double x, const AiryEval& e) {
    return {x * e.ai, x * e.bi};
}

}  // namespace stark
