#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "lenard/manifold.hpp"
#include "lenard/rational_expr.hpp"

namespace lenard {

// Dimension-3 pipeline: a prepotential F(A,B) on a chart (A,B,C) generates a
// pair of recursion operators whose commutativity is equivalent to the
// three-dimensional WDVV equation F_AAA + F_AAB F_BBB - F_ABB^2 = 0.
// Throughout, coordinate 0 plays the role of A, 1 of B, 2 of C.

/// Potential on a 3-dimensional chart; independence from the last
/// coordinate is enforced.
struct Prepotential {
    Prepotential(Chart chart_, RationalExpr F_) : chart(std::move(chart_)), F(std::move(F_)) {
        if (chart.dim() != 3) throw invalid_value("prepotential needs a 3-dimensional chart");
        if (!F.derivative(2).is_zero())
            throw invalid_value("prepotential must not depend on the last coordinate");
    }
    Chart chart;
    RationalExpr F;
};

/// The chain potentials (P, Q, R) together with the separation constants;
/// built from a prepotential with (lambda, mu, nu) = (1, 0, 0).
struct PQRTriple {
    Chart chart;
    RationalExpr P, Q, R;
    Rational lambda{1}, mu{0}, nu{0};
};

/// F_AAA + F_AAB * F_BBB - F_ABB^2, canonical.
inline RationalExpr wdvv_residual(const Prepotential& F) {
    const RationalExpr FA = F.F.derivative(0);
    const RationalExpr FAA = FA.derivative(0);
    const RationalExpr FAB = FA.derivative(1);
    const RationalExpr FBB = F.F.derivative(1).derivative(1);
    return FAA.derivative(0) + FAA.derivative(1) * FBB.derivative(1) - FAB.derivative(1).pow(2);
}

namespace detail {

/// Right sides of the quasi-linear system, in order.
inline std::array<RationalExpr, 3> pqr_right_sides(const PQRTriple& t) {
    const RationalExpr PB = t.P.derivative(1), PC = t.P.derivative(2);
    const RationalExpr QB = t.Q.derivative(1), QC = t.Q.derivative(2);
    const RationalExpr RB = t.R.derivative(1), RC = t.R.derivative(2);
    return {
        PC * (QB - RC) + QC * (QC - PB),
        PC * RB - QC * QB,
        QB * (QB - RC) + RB * (QC - PB),
    };
}

}  // namespace detail

/// Left-minus-right residuals of the quasi-linear system
///   P_A = P_C (Q_B - R_C) + Q_C (Q_C - P_B)
///   Q_A = P_C R_B - Q_C Q_B
///   R_A = Q_B (Q_B - R_C) + R_B (Q_C - P_B)
inline std::array<RationalExpr, 3> pqr_residuals(const PQRTriple& t) {
    const auto rhs = detail::pqr_right_sides(t);
    return {
        t.P.derivative(0) - rhs[0],
        t.Q.derivative(0) - rhs[1],
        t.R.derivative(0) - rhs[2],
    };
}

/// Chain potentials of a prepotential: P = C + F_BB, Q = F_AB, R = F_AA.
/// With this assignment the first two system residuals vanish identically
/// and the third reduces to the WDVV residual itself.
inline PQRTriple pqr_from_prepotential(const Prepotential& F) {
    const RationalExpr FA = F.F.derivative(0);
    const RationalExpr FB = F.F.derivative(1);
    PQRTriple t{F.chart, F.chart.zero(), F.chart.zero(), F.chart.zero()};
    t.P = F.chart.coordinate(2) + FB.derivative(1);
    t.Q = FA.derivative(1);
    t.R = FA.derivative(0);
    return t;
}

/// The recursion pair acting on coordinate differentials as
///   K1: dA -> dB, dB -> dP, dC -> dQ
///   K2: dA -> dC, dB -> dQ, dC -> dR
/// Under the transpose coaction, row i of K holds the gradient of the image
/// potential of the i-th coordinate differential.
inline std::pair<Tensor11, Tensor11> recursion_pair_from_pqr(const PQRTriple& t) {
    const Chart& c = t.chart;
    auto gradient_row = [&](const RationalExpr& f) {
        return ExprVector{f.derivative(0), f.derivative(1), f.derivative(2)};
    };
    ExprMatrix k1 = zero_matrix(c);
    k1[0] = ExprVector{c.zero(), c.one(), c.zero()};  // dA -> dB
    k1[1] = gradient_row(t.P);                        // dB -> dP
    k1[2] = gradient_row(t.Q);                        // dC -> dQ
    ExprMatrix k2 = zero_matrix(c);
    k2[0] = ExprVector{c.zero(), c.zero(), c.one()};  // dA -> dC
    k2[1] = gradient_row(t.Q);                        // dB -> dQ
    k2[2] = gradient_row(t.R);                        // dC -> dR
    return {Tensor11(c, std::move(k1)), Tensor11(c, std::move(k2))};
}

/// Full checker input of a prepotential: X = d/dC, theta = dA, and the
/// recursion pair above.
inline ManifoldSpec h2_spec_from_prepotential(const Prepotential& F) {
    const Chart& c = F.chart;
    auto [K1, K2] = recursion_pair_from_pqr(pqr_from_prepotential(F));
    VectorField X(c, ExprVector{c.zero(), c.zero(), c.one()});
    OneForm theta(c, ExprVector{c.one(), c.zero(), c.zero()});
    return ManifoldSpec(c, std::move(X), std::move(theta), {std::move(K1), std::move(K2)},
                        std::nullopt, F.F);
}

/// Truncated power-series solution of the system in the A-direction:
/// P = sum_k p_k(B,C) A^k through k < N, likewise Q and R.
struct SeriesSolution {
    std::size_t order = 0;                      // N
    std::vector<RationalExpr> p, q, r;          // coefficient tables, size N
    RationalExpr P, Q, R;                       // assembled truncations

    /// Residuals of the truncated system; their A^k coefficients vanish for
    /// k <= N-2 (the top coefficient is unconstrained by the truncation).
    std::array<RationalExpr, 3> residuals(const Chart& chart) const {
        PQRTriple t{chart, P, Q, R};
        return pqr_residuals(t);
    }
};

/// Solves the system as an evolution in A from polynomial initial data
/// (phi0, psi0, chi0) in (B, C): the A^k coefficient of each right side on
/// the order-k truncation yields the next coefficient divided by k+1.
inline SeriesSolution series_solve_pqr(const Chart& chart, const RationalExpr& phi0,
                                       const RationalExpr& psi0, const RationalExpr& chi0,
                                       std::size_t order) {
    if (chart.dim() != 3) throw invalid_value("series solver needs a 3-dimensional chart");
    if (order == 0) throw invalid_value("series order must be positive");
    for (const RationalExpr* e : {&phi0, &psi0, &chi0}) {
        if (!e->is_polynomial()) throw invalid_value("series initial data must be polynomial");
        if (!e->derivative(0).is_zero())
            throw invalid_value("series initial data must not depend on the first coordinate");
    }

    SeriesSolution s;
    s.order = order;
    s.p = {phi0};
    s.q = {psi0};
    s.r = {chi0};
    s.P = phi0;
    s.Q = psi0;
    s.R = chi0;

    const RationalExpr A = chart.coordinate(0);
    for (std::size_t k = 0; k + 1 < order; ++k) {
        const PQRTriple t{chart, s.P, s.Q, s.R};
        const auto rhs = detail::pqr_right_sides(t);
        const Rational inv(1, static_cast<long>(k + 1));
        const RationalExpr pk = rhs[0].coeff_of(0, static_cast<std::uint32_t>(k)).scaled(inv);
        const RationalExpr qk = rhs[1].coeff_of(0, static_cast<std::uint32_t>(k)).scaled(inv);
        const RationalExpr rk = rhs[2].coeff_of(0, static_cast<std::uint32_t>(k)).scaled(inv);
        const RationalExpr Apow = A.pow(static_cast<std::uint32_t>(k + 1));
        s.p.push_back(pk);
        s.q.push_back(qk);
        s.r.push_back(rk);
        s.P += pk * Apow;
        s.Q += qk * Apow;
        s.R += rk * Apow;
    }
    return s;
}

}  // namespace lenard
