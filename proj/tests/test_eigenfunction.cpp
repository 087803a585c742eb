#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "stark/airy.hpp"
#include "stark/eigenfunction.hpp"
#include "stark/solver.hpp"

using namespace stark;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Eigenvalue> preset_levels(double L, double F, Preset which, int count) {
    const StarkProblem p(L, F);
    return solve_spectrum(SpectrumRequest::for_preset(
               p, which, -F * L - 1.0, -F * L + 4.0, count))
        .eigenvalues;
}

// rightmost position attaining max|phi| (ties broken to the right, so the
// flat Neumann F = 0 ground state reports +L)
double argmax_position(const Eigenfunction& phi, int n = 2001) {
    const auto samples = sample_grid(phi, n);
    double best = 0.0;
    for (const auto& [x, v] : samples) best = std::max(best, std::abs(v));
    for (auto it = samples.rbegin(); it != samples.rend(); ++it) {
        if (std::abs(it->second) >= best * (1.0 - 1e-10)) return it->first;
    }
    return samples.back().first;
}

}  // namespace

TEST_CASE("coefficient vectors match the closed-form ratios") {
    const StarkProblem p(1.0, 1.0);

    // dirichlet: (A, B) proportional to (Bi(L-), -Ai(L-))
    {
        const auto evs = preset_levels(1.0, 1.0, Preset::dirichlet, 2);
        for (const auto& ev : evs) {
            const auto nb = coefficient_vector(ev.energy, p, preset(Preset::dirichlet));
            REQUIRE(!nb.second);
            const ScaledEndpoints se = scaled_endpoints(ev.energy, p);
            const AiryEval m = airy_eval(se.l_minus);
            const cplx want_a{m.bi, 0.0}, want_b{-m.ai, 0.0};
            // compare directions: |<v, w>| = |v||w|
            const cplx dot = nb.first.a * std::conj(want_a) + nb.first.b * std::conj(want_b);
            const double nv = std::sqrt(std::norm(nb.first.a) + std::norm(nb.first.b));
            const double nw = std::sqrt(std::norm(want_a) + std::norm(want_b));
            CHECK(std::abs(dot) == doctest::Approx(nv * nw).epsilon(1e-9));
        }
    }
    // neumann: (A, B) ~ (Bi'(L-), -Ai'(L-))
    {
        const auto evs = preset_levels(1.0, 1.0, Preset::neumann, 1);
        const auto nb = coefficient_vector(evs[0].energy, p, preset(Preset::neumann));
        const ScaledEndpoints se = scaled_endpoints(evs[0].energy, p);
        const AiryEval m = airy_eval(se.l_minus);
        const cplx dot = nb.first.a * m.bip - nb.first.b * m.aip;
        const double nv = std::sqrt(std::norm(nb.first.a) + std::norm(nb.first.b));
        const double nw = std::sqrt(m.bip * m.bip + m.aip * m.aip);
        CHECK(std::abs(dot) == doctest::Approx(nv * nw).epsilon(1e-9));
    }
    // periodic: (A, B) ~ (Bi'(L+)-Bi'(L-), Ai'(L-)-Ai'(L+))
    {
        const StarkProblem ps(1.0, 0.01);
        const auto evs = preset_levels(1.0, 0.01, Preset::periodic, 2);
        const double E = evs[1].energy;
        const auto nb = coefficient_vector(E, ps, preset(Preset::periodic));
        const ScaledEndpoints se = scaled_endpoints(E, ps);
        const AiryEval m = airy_eval(se.l_minus);
        const AiryEval q = airy_eval(se.l_plus);
        const cplx wa{q.bip - m.bip, 0.0};
        const cplx wb{m.aip - q.aip, 0.0};
        const cplx dot = nb.first.a * std::conj(wa) + nb.first.b * std::conj(wb);
        const double nv = std::sqrt(std::norm(nb.first.a) + std::norm(nb.first.b));
        const double nw = std::sqrt(std::norm(wa) + std::norm(wb));
        CHECK(std::abs(dot) == doctest::Approx(nv * nw).epsilon(1e-9));
    }

    // refuses a non-eigenvalue
    CHECK_THROWS_AS(coefficient_vector(5.0, p, preset(Preset::dirichlet)),
                    std::invalid_argument);
}

TEST_CASE("boundary values of normalized eigenfunctions") {
    // Dirichlet trace vanishes
    for (const auto& ev : preset_levels(1.0, 5.0, Preset::dirichlet, 3)) {
        const StarkProblem p(1.0, 5.0);
        const auto phi = eigenfunction_basis(ev.energy, p, preset(Preset::dirichlet));
        REQUIRE(phi.size() == 1);
        CHECK(std::abs(evaluate(phi[0], -1.0)) <= 1e-7);
        CHECK(std::abs(evaluate(phi[0], 1.0)) <= 1e-7);
    }
    // Neumann derivative trace vanishes
    for (const auto& ev : preset_levels(1.0, 1.0, Preset::neumann, 3)) {
        const StarkProblem p(1.0, 1.0);
        const auto phi = eigenfunction_basis(ev.energy, p, preset(Preset::neumann));
        CHECK(std::abs(evaluate_derivative(phi[0], -1.0)) <= 1e-7);
        CHECK(std::abs(evaluate_derivative(phi[0], 1.0)) <= 1e-7);
    }
    // free Dirichlet ground state is cos(pi x / 2), amplitude 1 at x = 0
    {
        const StarkProblem p(1.0, 0.0);
        const auto evs = preset_levels(1.0, 0.0, Preset::dirichlet, 1);
        const auto phi = eigenfunction_basis(evs[0].energy, p, preset(Preset::dirichlet));
        CHECK(std::abs(evaluate(phi[0], 0.0) - 1.0) <= 1e-8);
        for (double x : {-0.63, 0.21, 0.5}) {
            CHECK(std::abs(evaluate(phi[0], x) - std::cos(kPi * x / 2)) <= 1e-8);
        }
        CHECK_THROWS_AS(evaluate(phi[0], 1.5), std::domain_error);
    }
}

TEST_CASE("normalize: unit norm, idempotence, scale invariance") {
    const StarkProblem p(1.0, 1.0);
    const auto evs = preset_levels(1.0, 1.0, Preset::dirichlet, 1);
    const Eigenfunction raw = make_eigenfunction(evs[0].energy, p,
                                                 preset(Preset::dirichlet));

    const Eigenfunction n1 = normalize(raw);
    CHECK(std::abs(inner_product(n1, n1).real() - 1.0) <= 1e-8);

    const Eigenfunction n2 = normalize(n1);
    CHECK(std::abs(n2.coeff_a - n1.coeff_a) <= 1e-12);
    CHECK(std::abs(n2.coeff_b - n1.coeff_b) <= 1e-12);
    CHECK(n2.norm == doctest::Approx(1.0).epsilon(1e-8));

    Eigenfunction scaled = raw;
    scaled.coeff_a *= 7.0;
    scaled.coeff_b *= 7.0;
    const Eigenfunction n3 = normalize(scaled);
    CHECK(std::abs(n3.coeff_a - n1.coeff_a) <= 1e-12);
    CHECK(std::abs(n3.coeff_b - n1.coeff_b) <= 1e-12);

    Eigenfunction zero = raw;
    zero.coeff_a = zero.coeff_b = 0.0;
    CHECK_THROWS_AS(normalize(zero), std::invalid_argument);
}

TEST_CASE("sample_grid") {
    const StarkProblem p(1.0, 0.0);
    const auto evs = preset_levels(1.0, 0.0, Preset::dirichlet, 1);
    const auto phi = eigenfunction_basis(evs[0].energy, p, preset(Preset::dirichlet))[0];

    const auto two = sample_grid(phi, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].first == -1.0);
    CHECK(two[1].first == 1.0);

    // symmetric grid of the F = 0 ground state is even in x
    const auto g = sample_grid(phi, 1001);
    for (int i = 0; i < 1001; ++i) {
        CHECK(std::abs(g[i].second - g[1000 - i].second) <= 1e-9);
    }
    CHECK_THROWS_AS(sample_grid(phi, 1), std::invalid_argument);

    // F = 5 Dirichlet ground state concentrates on the left half
    const StarkProblem p5(1.0, 5.0);
    const auto evs5 = preset_levels(1.0, 5.0, Preset::dirichlet, 1);
    const auto phi5 = eigenfunction_basis(evs5[0].energy, p5,
                                          preset(Preset::dirichlet))[0];
    CHECK(argmax_position(phi5) < 0.0);
}

TEST_CASE("ODE residual of computed eigenfunctions") {
    const double h = 1e-4;
    for (Preset which : {Preset::dirichlet, Preset::neumann, Preset::mixed,
                         Preset::periodic}) {
        for (double F : {0.01, 1.0, 5.0}) {
            const StarkProblem p(1.0, F);
            const auto evs = preset_levels(1.0, F, which, 2);
            for (const auto& ev : evs) {
                for (const auto& phi : eigenfunction_basis(ev.energy, p, preset(which))) {
                    double peak = 0.0;
                    for (const auto& [x, v] : sample_grid(phi, 201)) {
                        peak = std::max(peak, std::abs(v));
                    }
                    for (int k = 1; k <= 50; ++k) {
                        const double x = -1.0 + 2.0 * k / 51.0;
                        const cplx dd = (evaluate(phi, x + h) - 2.0 * evaluate(phi, x) +
                                         evaluate(phi, x - h)) / (h * h);
                        const cplx resid = -dd + (F * x - ev.energy) * evaluate(phi, x);
                        INFO(preset_name(which), " F=", F, " E=", ev.energy, " x=", x);
                        CHECK(std::abs(resid) <= 1e-3 * std::max(1.0, peak));
                    }
                }
            }
        }
    }
}

TEST_CASE("boundary condition residual in the trace sense") {
    for (Preset which : {Preset::dirichlet, Preset::neumann, Preset::mixed,
                         Preset::periodic}) {
        for (double F : {0.01, 1.0, 5.0}) {
            const StarkProblem p(1.0, F);
            const UnitaryBC u = preset(which);
            for (const auto& ev : preset_levels(1.0, F, which, 4)) {
                for (const auto& phi : eigenfunction_basis(ev.energy, p, u)) {
                    const auto [pm, dpm, pp, dpp] = boundary_trace(phi);
                    const double L = p.half_width;
                    const cplx i1(0.0, 1.0);
                    const std::array<cplx, 2> lhs{L * dpm - i1 * pm, L * dpp + i1 * pp};
                    const std::array<cplx, 2> rhs =
                        u.entries.apply({L * dpm + i1 * pm, L * dpp - i1 * pp});
                    double scale = 0.0;
                    for (auto z : {lhs[0], lhs[1], rhs[0], rhs[1]}) {
                        scale = std::max(scale, std::abs(z));
                    }
                    CHECK(std::abs(lhs[0] - rhs[0]) <= 1e-6 * std::max(1.0, scale));
                    CHECK(std::abs(lhs[1] - rhs[1]) <= 1e-6 * std::max(1.0, scale));
                }
            }
        }
    }
}

TEST_CASE("boundary form vanishes on computed eigenfunctions") {
    for (Preset which : {Preset::dirichlet, Preset::neumann, Preset::mixed,
                         Preset::periodic}) {
        const StarkProblem p(1.0, 1.0);
        for (const auto& ev : preset_levels(1.0, 1.0, which, 3)) {
            for (const auto& phi : eigenfunction_basis(ev.energy, p, preset(which))) {
                const auto [pm, dpm, pp, dpp] = boundary_trace(phi);
                CHECK(std::abs(boundary_form(pm, dpm, pp, dpp, 1.0)) <= 1e-7);
            }
        }
    }
}

TEST_CASE("orthogonality of distinct eigenfunctions") {
    for (Preset which : {Preset::dirichlet, Preset::periodic}) {
        const double F = which == Preset::periodic ? 0.01 : 1.0;
        const StarkProblem p(1.0, F);
        std::vector<Eigenfunction> phis;
        for (const auto& ev : preset_levels(1.0, F, which, 4)) {
            for (const auto& phi : eigenfunction_basis(ev.energy, p, preset(which))) {
                phis.push_back(phi);
            }
        }
        for (size_t a = 0; a < phis.size(); ++a) {
            for (size_t b = a + 1; b < phis.size(); ++b) {
                CHECK(std::abs(inner_product(phis[a], phis[b])) <= 1e-6);
            }
        }
    }
}

TEST_CASE("degenerate F = 0 periodic pair: even and odd members") {
    const StarkProblem p(1.0, 0.0);
    const auto evs = preset_levels(1.0, 0.0, Preset::periodic, 2);
    REQUIRE(evs[1].multiplicity == 2);
    const auto pair = eigenfunction_basis(evs[1].energy, p, preset(Preset::periodic));
    REQUIRE(pair.size() == 2);
    for (double x : {0.13, 0.41, 0.77}) {
        CHECK(std::abs(evaluate(pair[0], x) - evaluate(pair[0], -x)) <= 1e-9);  // even
        CHECK(std::abs(evaluate(pair[1], x) + evaluate(pair[1], -x)) <= 1e-9);  // odd
    }
    CHECK(std::abs(inner_product(pair[0], pair[1])) <= 1e-6);
}

TEST_CASE("random extensions: trace identity and boundary form") {
    std::mt19937 rng(20250809);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    std::normal_distribution<double> nd;
    const StarkProblem p(1.0, 1.0);

    for (int trial = 0; trial < 6; ++trial) {
        cplx a{nd(rng), nd(rng)}, b{nd(rng), nd(rng)};
        const double n = std::sqrt(std::norm(a) + std::norm(b));
        if (n < 1e-3) continue;
        const UnitaryBC u = make_unitary(ang(rng), a / n, b / n);

        const auto res = solve_generic(SpectrumRequest::for_unitary(p, u, -9.0, 20.0));
        REQUIRE(!res.eigenvalues.empty());
        for (const auto& ev : res.eigenvalues) {
            for (const auto& phi : eigenfunction_basis(ev.energy, p, u)) {
                const auto [pm, dpm, pp, dpp] = boundary_trace(phi);
                const cplx i1(0.0, 1.0);
                const std::array<cplx, 2> lhs{dpm - i1 * pm, dpp + i1 * pp};
                const std::array<cplx, 2> rhs =
                    u.entries.apply({dpm + i1 * pm, dpp - i1 * pp});
                double scale = 1.0;
                for (auto z : {lhs[0], lhs[1], rhs[0], rhs[1]}) {
                    scale = std::max(scale, std::abs(z));
                }
                INFO("trial ", trial, " E = ", ev.energy);
                CHECK(std::abs(lhs[0] - rhs[0]) <= 1e-6 * scale);
                CHECK(std::abs(lhs[1] - rhs[1]) <= 1e-6 * scale);
                // the genuinely complex eigenfunctions make this witness
                // non-trivial: both products in B(phi,phi) are nonzero
                CHECK(std::abs(boundary_form(pm, dpm, pp, dpp, 1.0)) <= 1e-7);
            }
        }
    }
}

TEST_CASE("leftward drift of the ground state under the field") {
    for (Preset which : {Preset::dirichlet, Preset::neumann, Preset::mixed}) {
        const StarkProblem p0(1.0, 0.0);
        const StarkProblem p5(1.0, 5.0);
        const auto e0 = preset_levels(1.0, 0.0, which, 1);
        const auto e5 = preset_levels(1.0, 5.0, which, 1);
        const auto phi0 = eigenfunction_basis(e0[0].energy, p0, preset(which))[0];
        const auto phi5 = eigenfunction_basis(e5[0].energy, p5, preset(which))[0];
        INFO(preset_name(which));
        CHECK(argmax_position(phi5) < argmax_position(phi0));
    }
}
