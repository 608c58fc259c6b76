#pragma once

#include <utility>
#include <vector>

#include "lenard/errors.hpp"
#include "lenard/rational_expr.hpp"

namespace lenard {

/// Square matrix of rational expressions.  All algorithms work over the
/// exact rational-function field, so "nonzero" pivots are symbolic facts and
/// results hold at every generic point.
using ExprMatrix = std::vector<std::vector<RationalExpr>>;

inline ExprMatrix expr_matrix(std::size_t n, const RationalExpr& fill) {
    return ExprMatrix(n, std::vector<RationalExpr>(n, fill));
}

inline ExprMatrix identity_matrix(const VarNamesPtr& vars, std::size_t n) {
    ExprMatrix m = expr_matrix(n, RationalExpr::zero(vars));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = RationalExpr::one(vars);
    return m;
}

inline ExprMatrix mat_mul(const ExprMatrix& a, const ExprMatrix& b) {
    const std::size_t n = a.size();
    ExprMatrix r = expr_matrix(n, a[0][0] - a[0][0]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RationalExpr s = r[i][j];
            for (std::size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

/// Laplace expansion; exact and division-free.  Fine at the small
/// dimensions geometric charts have.
inline RationalExpr determinant(const ExprMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    RationalExpr det = m[0][0] - m[0][0];  // zero of the right arity
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        ExprMatrix minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<RationalExpr> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        const RationalExpr cof = m[0][j] * determinant(minor);
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

/// Gauss-Jordan inverse over the rational-function field.  Throws
/// singular_matrix when the matrix fails to be invertible as a symbolic
/// matrix (i.e. its determinant is the zero expression).
inline ExprMatrix inverse(const ExprMatrix& m) {
    const std::size_t n = m.size();
    ExprMatrix a = m;
    ExprMatrix inv = identity_matrix(m[0][0].vars(), n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw singular_matrix("matrix is singular over the rational-function field");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const RationalExpr scale = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / scale;
            inv[col][j] = inv[col][j] / scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            const RationalExpr f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - f * a[col][j];
                inv[i][j] = inv[i][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace lenard
