#pragma once

// 2x2 complex matrix helpers: everything the boundary-value problem needs,
// including a closed-form singular value decomposition.

#include <array>
#include <cmath>
#include <complex>
#include <utility>

namespace stark {

using cplx = std::complex<double>;

struct Mat2 {
    // row-major entries
    cplx a, b, c, d;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Mat2 conjugated() const {  // entrywise conjugate
        return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)};
    }
    Mat2 adjoint() const {  // conjugate transpose
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }

    cplx det() const { return a * d - b * c; }

    double frobenius_norm() const {
        return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    }
    double row_norm(int r) const {
        return r == 0 ? std::sqrt(std::norm(a) + std::norm(b))
                      : std::sqrt(std::norm(c) + std::norm(d));
    }
    double max_row_norm() const { return std::max(row_norm(0), row_norm(1)); }

    std::array<cplx, 2> apply(const std::array<cplx, 2>& v) const {
        return {a * v[0] + b * v[1], c * v[0] + d * v[1]};
    }
};

/// max |(U* U - I)_{jk}|: zero for a unitary matrix.
inline double unitarity_defect(const Mat2& u) {
    const Mat2 p = u.adjoint() * u;
    return std::max(std::max(std::abs(p.a - 1.0), std::abs(p.d - 1.0)),
                    std::max(std::abs(p.b), std::abs(p.c)));
}

struct SingularValues {
    double smin;
    double smax;
};

/// Singular values of a 2x2 complex matrix.
/// smax from the larger eigenvalue of A*A (numerically stable);
/// smin = |det A| / smax to avoid cancellation.
inline SingularValues singular_values(const Mat2& m) {
    const double n2 = std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d);
    const double adet = std::abs(m.det());
    // eigenvalues of A*A: (n2 +- sqrt(n2^2 - 4 |det|^2)) / 2
    const double disc = std::sqrt(std::max(0.0, n2 * n2 - 4.0 * adet * adet));
    const double lmax = 0.5 * (n2 + disc);
    const double smax = std::sqrt(lmax);
    const double smin = smax > 0.0 ? adet / smax : 0.0;
    return {smin, smax};
}

/// Unit right singular vector for the smallest singular value of m.
inline std::array<cplx, 2> smallest_singular_vector(const Mat2& m) {
    // H = A*A is Hermitian PSD; want the eigenvector of its smaller eigenvalue.
    const Mat2 h = m.adjoint() * m;
    const double h11 = h.a.real();
    const double h22 = h.d.real();
    const cplx h12 = h.b;
    const double tr = h11 + h22;
    const double det = h11 * h22 - std::norm(h12);
    const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
    const double lmin = 0.5 * tr - disc;

    // Two candidate eigenvector expressions; pick the larger for stability.
    std::array<cplx, 2> v1{h12, cplx(lmin - h11, 0.0)};
    std::array<cplx, 2> v2{cplx(lmin - h22, 0.0), std::conj(h12)};
    const double n1 = std::norm(v1[0]) + std::norm(v1[1]);
    const double n2 = std::norm(v2[0]) + std::norm(v2[1]);
    std::array<cplx, 2> v = n1 >= n2 ? v1 : v2;
    double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    if (n == 0.0) return {1.0, 0.0};  // m ~ 0: any unit vector is a null vector
    return {v[0] / n, v[1] / n};
}

}  // namespace stark
