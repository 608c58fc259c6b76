#pragma once

#include "lenard/tensors.hpp"

namespace lenard {

/// Jacobi residual of a bivector:
/// J^{ijk} = P^{ia} d_a P^{jk} + P^{ja} d_a P^{ki} + P^{ka} d_a P^{ij}.
/// P defines a Poisson bracket exactly when this vanishes.
inline Trivector jacobi_residual(const Bivector& P) {
    const std::size_t n = P.chart.dim();
    ExprCube out = zero_cube(P.chart);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                RationalExpr s = P.chart.zero();
                for (std::size_t a = 0; a < n; ++a) {
                    s += P.comp[i][a] * P.comp[j][k].derivative(a);
                    s += P.comp[j][a] * P.comp[k][i].derivative(a);
                    s += P.comp[k][a] * P.comp[i][j].derivative(a);
                }
                out[i][j][k] = s;
            }
    return Trivector(P.chart, std::move(out));
}

/// Lambda-linear coefficient of jacobi_residual(P1 + lambda P2): the pencil
/// P1 + lambda P2 is Poisson for every lambda exactly when this and both
/// individual Jacobi residuals vanish.
inline Trivector poisson_compatibility_residual(const Bivector& P1, const Bivector& P2) {
    require_same_chart(P1.chart, P2.chart);
    const std::size_t n = P1.chart.dim();
    ExprCube out = zero_cube(P1.chart);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                RationalExpr s = P1.chart.zero();
                for (std::size_t a = 0; a < n; ++a) {
                    s += P1.comp[i][a] * P2.comp[j][k].derivative(a);
                    s += P2.comp[i][a] * P1.comp[j][k].derivative(a);
                    s += P1.comp[j][a] * P2.comp[k][i].derivative(a);
                    s += P2.comp[j][a] * P1.comp[k][i].derivative(a);
                    s += P1.comp[k][a] * P2.comp[i][j].derivative(a);
                    s += P2.comp[k][a] * P1.comp[i][j].derivative(a);
                }
                out[i][j][k] = s;
            }
    return Trivector(P1.chart, std::move(out));
}

/// Recursion operator of a bi-Hamiltonian pair: K = P2 P1^{-1}.
/// P1 must be invertible over the rational-function field.
inline Tensor11 recursion_from_poisson(const Bivector& P1, const Bivector& P2) {
    require_same_chart(P1.chart, P2.chart);
    ExprMatrix p1inv;
    try {
        p1inv = inverse(P1.comp);
    } catch (const singular_matrix&) {
        throw singular_matrix("first Poisson bivector is singular; no recursion operator");
    }
    return Tensor11(P1.chart, mat_mul(P2.comp, p1inv));
}

}  // namespace lenard
