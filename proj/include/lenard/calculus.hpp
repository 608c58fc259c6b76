#pragma once

#include "lenard/tensors.hpp"

namespace lenard {

/// [X,Y]^i = X^a d_a Y^i - Y^a d_a X^i
inline VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    require_same_chart(X.chart, Y.chart);
    const std::size_t n = X.chart.dim();
    ExprVector out = zero_vector(X.chart);
    for (std::size_t i = 0; i < n; ++i) {
        RationalExpr s = X.chart.zero();
        for (std::size_t a = 0; a < n; ++a)
            s += X.comp[a] * Y.comp[i].derivative(a) - Y.comp[a] * X.comp[i].derivative(a);
        out[i] = s;
    }
    return VectorField(X.chart, std::move(out));
}

/// (KX)^i = K^i_a X^a
inline VectorField apply_tensor11(const Tensor11& K, const VectorField& X) {
    require_same_chart(K.chart, X.chart);
    const std::size_t n = K.chart.dim();
    ExprVector out = zero_vector(K.chart);
    for (std::size_t i = 0; i < n; ++i) {
        RationalExpr s = K.chart.zero();
        for (std::size_t a = 0; a < n; ++a) s += K.comp[i][a] * X.comp[a];
        out[i] = s;
    }
    return VectorField(K.chart, std::move(out));
}

/// Transpose action on 1-forms: (K theta)_j = K^i_j theta_i.  This is the
/// unique action making a (1,1) tensor move coordinate differentials the way
/// matrix rows prescribe.
inline OneForm coaction(const Tensor11& K, const OneForm& theta) {
    require_same_chart(K.chart, theta.chart);
    const std::size_t n = K.chart.dim();
    ExprVector out = zero_vector(K.chart);
    for (std::size_t j = 0; j < n; ++j) {
        RationalExpr s = K.chart.zero();
        for (std::size_t i = 0; i < n; ++i) s += K.comp[i][j] * theta.comp[i];
        out[j] = s;
    }
    return OneForm(K.chart, std::move(out));
}

/// N^i_{jk} = K^a_j d_a K^i_k - K^a_k d_a K^i_j - K^i_a (d_j K^a_k - d_k K^a_j)
inline VectorValuedTwoForm nijenhuis_torsion(const Tensor11& K) {
    const std::size_t n = K.chart.dim();
    ExprCube out = zero_cube(K.chart);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                RationalExpr s = K.chart.zero();
                for (std::size_t a = 0; a < n; ++a) {
                    s += K.comp[a][j] * K.comp[i][k].derivative(a);
                    s -= K.comp[a][k] * K.comp[i][j].derivative(a);
                    s -= K.comp[i][a] * (K.comp[a][k].derivative(j) - K.comp[a][j].derivative(k));
                }
                out[i][j][k] = s;
            }
    return VectorValuedTwoForm(K.chart, std::move(out));
}

/// H^i_{jk} = N^i_{ab} K^a_j K^b_k - K^i_b N^b_{ak} K^a_j
///          - K^i_b N^b_{ja} K^a_k + K^i_a K^a_b N^b_{jk}
inline VectorValuedTwoForm haantjes_tensor(const Tensor11& K) {
    const VectorValuedTwoForm N = nijenhuis_torsion(K);
    const std::size_t n = K.chart.dim();
    ExprCube out = zero_cube(K.chart);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                RationalExpr s = K.chart.zero();
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) {
                        s += N.comp[i][a][b] * K.comp[a][j] * K.comp[b][k];
                        s -= K.comp[i][b] * N.comp[b][a][k] * K.comp[a][j];
                        s -= K.comp[i][b] * N.comp[b][j][a] * K.comp[a][k];
                        s += K.comp[i][a] * K.comp[a][b] * N.comp[b][j][k];
                    }
                out[i][j][k] = s;
            }
    return VectorValuedTwoForm(K.chart, std::move(out));
}

/// (L_X theta)_j = X^a d_a theta_j + theta_a d_j X^a
inline OneForm lie_derivative(const VectorField& X, const OneForm& theta) {
    require_same_chart(X.chart, theta.chart);
    const std::size_t n = X.chart.dim();
    ExprVector out = zero_vector(X.chart);
    for (std::size_t j = 0; j < n; ++j) {
        RationalExpr s = X.chart.zero();
        for (std::size_t a = 0; a < n; ++a)
            s += X.comp[a] * theta.comp[j].derivative(a) + theta.comp[a] * X.comp[a].derivative(j);
        out[j] = s;
    }
    return OneForm(X.chart, std::move(out));
}

/// (L_X K)^i_j = X^a d_a K^i_j - K^a_j d_a X^i + K^i_a d_j X^a
inline Tensor11 lie_derivative(const VectorField& X, const Tensor11& K) {
    require_same_chart(X.chart, K.chart);
    const std::size_t n = X.chart.dim();
    ExprMatrix out = zero_matrix(X.chart);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RationalExpr s = X.chart.zero();
            for (std::size_t a = 0; a < n; ++a) {
                s += X.comp[a] * K.comp[i][j].derivative(a);
                s -= K.comp[a][j] * X.comp[i].derivative(a);
                s += K.comp[i][a] * X.comp[a].derivative(j);
            }
            out[i][j] = s;
        }
    return Tensor11(X.chart, std::move(out));
}

/// (L_X C)^i_{jk} = X^a d_a C^i_{jk} - C^a_{jk} d_a X^i
///                + C^i_{ak} d_j X^a + C^i_{ja} d_k X^a
inline Tensor12 lie_derivative(const VectorField& X, const Tensor12& C) {
    require_same_chart(X.chart, C.chart);
    const std::size_t n = X.chart.dim();
    ExprCube out = zero_cube(X.chart);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                RationalExpr s = X.chart.zero();
                for (std::size_t a = 0; a < n; ++a) {
                    s += X.comp[a] * C.comp[i][j][k].derivative(a);
                    s -= C.comp[a][j][k] * X.comp[i].derivative(a);
                    s += C.comp[i][a][k] * X.comp[a].derivative(j);
                    s += C.comp[i][j][a] * X.comp[a].derivative(k);
                }
                out[i][j][k] = s;
            }
    return Tensor12(X.chart, std::move(out));
}

/// (d theta)_{jk} = d_j theta_k - d_k theta_j
inline TwoForm exterior_derivative(const OneForm& theta) {
    const std::size_t n = theta.chart.dim();
    ExprMatrix out = zero_matrix(theta.chart);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            out[j][k] = theta.comp[k].derivative(j) - theta.comp[j].derivative(k);
    return TwoForm(theta.chart, std::move(out));
}

/// Pointwise matrix commutator K1 K2 - K2 K1.
inline Tensor11 tensor11_commutator(const Tensor11& K1, const Tensor11& K2) {
    require_same_chart(K1.chart, K2.chart);
    const ExprMatrix m = mat_mul(K1.comp, K2.comp);
    const ExprMatrix w = mat_mul(K2.comp, K1.comp);
    ExprMatrix out = zero_matrix(K1.chart);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[i][j] = m[i][j] - w[i][j];
    return Tensor11(K1.chart, std::move(out));
}

/// Matrix product (K1 K2)^i_j = K1^i_a K2^a_j.
inline Tensor11 tensor11_product(const Tensor11& K1, const Tensor11& K2) {
    require_same_chart(K1.chart, K2.chart);
    return Tensor11(K1.chart, mat_mul(K1.comp, K2.comp));
}

/// theta_i N^i_{jk}: the 1-form eats the vector slot of a vector-valued
/// 2-form, e.g. "theta annihilates the torsion of K".
inline TwoForm contract_form_vv2form(const OneForm& theta, const VectorValuedTwoForm& N) {
    require_same_chart(theta.chart, N.chart);
    const std::size_t n = theta.chart.dim();
    ExprMatrix out = zero_matrix(theta.chart);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            RationalExpr s = theta.chart.zero();
            for (std::size_t i = 0; i < n; ++i) s += theta.comp[i] * N.comp[i][j][k];
            out[j][k] = s;
        }
    return TwoForm(theta.chart, std::move(out));
}

/// (X o Y)^i = C^i_{jk} X^j Y^k
inline VectorField mult_apply(const Tensor12& C, const VectorField& X, const VectorField& Y) {
    require_same_chart(C.chart, X.chart);
    require_same_chart(C.chart, Y.chart);
    const std::size_t n = C.chart.dim();
    ExprVector out = zero_vector(C.chart);
    for (std::size_t i = 0; i < n; ++i) {
        RationalExpr s = C.chart.zero();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) s += C.comp[i][j][k] * X.comp[j] * Y.comp[k];
        out[i] = s;
    }
    return VectorField(C.chart, std::move(out));
}

}  // namespace lenard
