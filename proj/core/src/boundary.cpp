#include "stark/boundary.hpp"

#include <cmath>
#include <stdexcept>

#include "stark/airy.hpp"
#include "stark/free_basis.hpp"

namespace stark {
namespace {


struct EndpointData {
    AiryEval minus;  // at L-(E,F)
    AiryEval plus;   // at L+(E,F)
    double jac;      // F^(1/3), the chain-rule factor on derivatives
    double dscale;   // -F^(-2/3) = dL±/dE
};

EndpointData endpoint_data(double energy, const StarkProblem& p) {
    if (p.field <= 0.0) {
        throw std::domain_error("boundary matrices need field > 0; use the free path");
    }
    const ScaledEndpoints se = scaled_endpoints(energy, p);
    EndpointData d;
    d.minus = airy_eval(se.l_minus);
    d.plus = airy_eval(se.l_plus);
    d.jac = std::cbrt(p.field);
    d.dscale = -1.0 / (d.jac * d.jac);
    return d;
}

BoundaryMatrices matrices_from_basis(double L, double jac, double f_m, double fp_m,
                                     double g_m, double gp_m, double f_p, double fp_p,
                                     double g_p, double gp_p) {
    // Rows: x = -L (basis values *_m), then x = +L (*_p).
    // l_mat row1 = L phi' - i phi, row2 = L phi' + i phi; m_mat conjugate.
    const double lj = L * jac;
    Mat2 l{cplx(lj * fp_m, -f_m), cplx(lj * gp_m, -g_m),
           cplx(lj * fp_p, f_p), cplx(lj * gp_p, g_p)};
    return {l, l.conjugated()};
}

}  // namespace

BoundaryMatrices boundary_matrices(double energy, const StarkProblem& p) {
    const EndpointData d = endpoint_data(energy, p);
    return matrices_from_basis(p.half_width, d.jac,
                               d.minus.ai, d.minus.aip, d.minus.bi, d.minus.bip,
                               d.plus.ai, d.plus.aip, d.plus.bi, d.plus.bip);
}

BoundaryMatrices free_boundary_matrices(double energy, const StarkProblem& p) {
    const FreeBasisEval m = free_basis_eval(-p.half_width, energy);
    const FreeBasisEval q = free_basis_eval(p.half_width, energy);
    return matrices_from_basis(p.half_width, 1.0,
                               m.c, m.cp, m.s, m.sp,
                               q.c, q.cp, q.s, q.sp);
}

BoundaryMatrices boundary_matrices_any(double energy, const StarkProblem& p) {
    return uses_free_limit(p) ? free_boundary_matrices(energy, p)
                              : boundary_matrices(energy, p);
}

cplx characteristic(double energy, const StarkProblem& p, const UnitaryBC& u) {
    const BoundaryMatrices bm = boundary_matrices_any(energy, p);
    return (bm.l_mat - u.entries * bm.m_mat).det();
}

cplx free_characteristic(double energy, const StarkProblem& p, const UnitaryBC& u) {
    if (!uses_free_limit(p)) {
        throw std::domain_error("free_characteristic: field must be 0");
    }
    const BoundaryMatrices bm = free_boundary_matrices(energy, p);
    return (bm.l_mat - u.entries * bm.m_mat).det();
}

double reduced_characteristic(double energy, const StarkProblem& p, Preset which) {
    const EndpointData d = endpoint_data(energy, p);
    const AiryEval& m = d.minus;
    const AiryEval& q = d.plus;
    switch (which) {
        case Preset::dirichlet:
            return m.ai * q.bi - q.ai * m.bi;
        case Preset::neumann:
            return m.aip * q.bip - q.aip * m.bip;
        case Preset::mixed:
            return q.aip * m.bi - m.ai * q.bip;
        case Preset::periodic:
            return (m.aip - q.aip) * (q.bi - m.bi) - (q.ai - m.ai) * (m.bip - q.bip);
    }
    throw std::invalid_argument("reduced_characteristic: unknown case");
}

double reduced_characteristic_derivative(double energy, const StarkProblem& p,
                                         Preset which) {
    const EndpointData d = endpoint_data(energy, p);
    const AiryEval& m = d.minus;
    const AiryEval& q = d.plus;
    const auto [mapp, mbpp] = airy_second(m.x, m);  // Ai''(L-), Bi''(L-)
    const auto [qapp, qbpp] = airy_second(q.x, q);
    double inner = 0.0;
    switch (which) {
        case Preset::dirichlet:
            inner = m.aip * q.bi + m.ai * q.bip - q.aip * m.bi - q.ai * m.bip;
            break;
        case Preset::neumann:
            inner = mapp * q.bip + m.aip * qbpp - qapp * m.bip - q.aip * mbpp;
            break;
        case Preset::mixed:
            inner = qapp * m.bi + q.aip * m.bip - m.aip * q.bip - m.ai * qbpp;
            break;
        case Preset::periodic:
            // product-rule cross terms cancel (see the free analogue)
            inner = (mapp - qapp) * (q.bi - m.bi) - (q.ai - m.ai) * (mbpp - qbpp);
            break;
    }
    return d.dscale * inner;
}

double free_reduced_characteristic(double energy, const StarkProblem& p, Preset which) {
    const double L = p.half_width;
    const FreeBasisEval m = free_basis_eval(-L, energy);
    const FreeBasisEval q = free_basis_eval(L, energy);
    switch (which) {
        case Preset::dirichlet:
            return m.c * q.s - q.c * m.s;
        case Preset::neumann:
            return m.cp * q.sp - q.cp * m.sp;
        case Preset::mixed:
            return q.cp * m.s - m.c * q.sp;
        case Preset::periodic:
            return (m.cp - q.cp) * (q.s - m.s) - (q.c - m.c) * (m.sp - q.sp);
    }
    throw std::invalid_argument("free_reduced_characteristic: unknown case");
}

double free_reduced_characteristic_derivative(double energy, const StarkProblem& p,
                                              Preset which) {
    const double L = p.half_width;
    const FreeBasisEval m = free_basis_eval(-L, energy);
    const FreeBasisEval q = free_basis_eval(L, energy);
    // d/dE of cp = -E s: -s - E dsdE; of sp = c: dcdE.
    const double m_dcp = -m.s - energy * m.dsdE;
    const double q_dcp = -q.s - energy * q.dsdE;
    switch (which) {
        case Preset::dirichlet:
            return m.dcdE * q.s + m.c * q.dsdE - q.dcdE * m.s - q.c * m.dsdE;
        case Preset::neumann:
            return m_dcp * q.sp + m.cp * q.dcdE - q_dcp * m.sp - q.cp * m.dcdE;
        case Preset::mixed:
            return q_dcp * m.s + q.cp * m.dsdE - m.dcdE * q.sp - m.c * q.dcdE;
        case Preset::periodic:
            return (m_dcp - q_dcp) * (q.s - m.s) + (m.cp - q.cp) * (q.dsdE - m.dsdE) -
                   (q.dcdE - m.dcdE) * (m.sp - q.sp) - (q.c - m.c) * (m.dcdE - q.dcdE);
    }
    throw std::invalid_argument("free_reduced_characteristic_derivative: unknown case");
}

double boundary_form(cplx phi_minus, cplx dphi_minus, cplx phi_plus, cplx dphi_plus,
                     double half_width) {
    if (!(half_width > 0.0)) {
        throw std::domain_error("boundary_form: half_width must be > 0");
    }
    const double at_plus = std::imag(dphi_plus * std::conj(phi_plus));
    const double at_minus = std::imag(dphi_minus * std::conj(phi_minus));
    return at_plus - at_minus;
}

}  // namespace stark
