#pragma once

#include "lenard/tensors.hpp"

namespace lenard {

/// Levi-Civita connection coefficients,
/// Gamma^i_{jk} = 1/2 g^{ia} (d_j g_{ak} + d_k g_{aj} - d_a g_{jk});
/// symmetric in (j,k) by construction of the formula.
inline ExprCube christoffel(const Metric& g) {
    const std::size_t n = g.chart.dim();
    ExprCube out = zero_cube(g.chart);
    const Rational half(1, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                RationalExpr s = g.chart.zero();
                for (std::size_t a = 0; a < n; ++a)
                    s += g.inv[i][a] * (g.comp[a][k].derivative(j) + g.comp[a][j].derivative(k) -
                                        g.comp[j][k].derivative(a));
                out[i][j][k] = s.scaled(half);
            }
    return out;
}

/// R^i_{jkl} = d_k Gamma^i_{lj} - d_l Gamma^i_{kj}
///           + Gamma^i_{ka} Gamma^a_{lj} - Gamma^i_{la} Gamma^a_{kj}
inline Tensor13 riemann(const Metric& g) {
    const ExprCube gam = christoffel(g);
    const std::size_t n = g.chart.dim();
    std::vector<ExprCube> out(n, zero_cube(g.chart));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    RationalExpr s = gam[i][l][j].derivative(k) - gam[i][k][j].derivative(l);
                    for (std::size_t a = 0; a < n; ++a)
                        s += gam[i][k][a] * gam[a][l][j] - gam[i][l][a] * gam[a][k][j];
                    out[i][j][k][l] = s;
                }
    return Tensor13(g.chart, std::move(out));
}

/// (nabla e)^i_j = d_j e^i + Gamma^i_{ja} e^a
inline Tensor11 covariant_derivative_vector(const Metric& g, const VectorField& e) {
    require_same_chart(g.chart, e.chart);
    const ExprCube gam = christoffel(g);
    const std::size_t n = g.chart.dim();
    ExprMatrix out = zero_matrix(g.chart);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RationalExpr s = e.comp[i].derivative(j);
            for (std::size_t a = 0; a < n; ++a) s += gam[i][j][a] * e.comp[a];
            out[i][j] = s;
        }
    return Tensor11(g.chart, std::move(out));
}

/// For totally symmetric c: computes nabla_a c_{bcd} and returns the
/// antisymmetrization residual nabla_a c_{bcd} - nabla_b c_{acd}, which
/// vanishes exactly when the covariant differential of c is symmetric.
inline Tensor04 nabla_c_symmetry_residual(const Metric& g, const Tensor03& c) {
    require_same_chart(g.chart, c.chart);
    if (!c.totally_symmetric()) throw invalid_value("c is not totally symmetric");
    const ExprCube gam = christoffel(g);
    const std::size_t n = g.chart.dim();

    // nabla_a c_{bcd} = d_a c_{bcd} - Gamma^e_{ab} c_{ecd}
    //                 - Gamma^e_{ac} c_{bed} - Gamma^e_{ad} c_{bce}
    std::vector<ExprCube> nabla(n, zero_cube(g.chart));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t cc = 0; cc < n; ++cc)
                for (std::size_t d = 0; d < n; ++d) {
                    RationalExpr s = c.comp[b][cc][d].derivative(a);
                    for (std::size_t e = 0; e < n; ++e) {
                        s -= gam[e][a][b] * c.comp[e][cc][d];
                        s -= gam[e][a][cc] * c.comp[b][e][d];
                        s -= gam[e][a][d] * c.comp[b][cc][e];
                    }
                    nabla[a][b][cc][d] = s;
                }

    std::vector<ExprCube> out(n, zero_cube(g.chart));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t cc = 0; cc < n; ++cc)
                for (std::size_t d = 0; d < n; ++d)
                    out[a][b][cc][d] = nabla[a][b][cc][d] - nabla[b][a][cc][d];
    return Tensor04(g.chart, std::move(out));
}

}  // namespace lenard
