#pragma once

#include <utility>
#include <vector>

#include "lenard/chart.hpp"
#include "lenard/linalg.hpp"
#include "lenard/rational_expr.hpp"

namespace lenard {

// Index conventions, used consistently everywhere:
//   Tensor11 entry [i][j] = K^i_j (row = upper index) acting on column
//   vectors of components; matrix products follow this convention.
//   Tensor12 entry [i][j][k] = C^i_{jk}; VectorValuedTwoForm [i][j][k] is
//   antisymmetric in (j, k).

using ExprVector = std::vector<RationalExpr>;
using ExprCube = std::vector<ExprMatrix>;

namespace detail {

inline void require_size(const Chart& chart, std::size_t got, const char* what) {
    if (got != chart.dim()) throw invalid_value(std::string(what) + ": component count != chart dimension");
}

inline void require_square(const Chart& chart, const ExprMatrix& m, const char* what) {
    require_size(chart, m.size(), what);
    for (const auto& row : m) require_size(chart, row.size(), what);
}

inline void require_cube(const Chart& chart, const ExprCube& c, const char* what) {
    require_size(chart, c.size(), what);
    for (const auto& m : c) require_square(chart, m, what);
}

inline void require_antisymmetric(const ExprMatrix& m, const char* what) {
    for (std::size_t j = 0; j < m.size(); ++j)
        for (std::size_t k = j; k < m.size(); ++k)
            if (!(m[j][k] + m[k][j]).is_zero())
                throw invalid_value(std::string(what) + ": components are not antisymmetric");
}

}  // namespace detail

struct VectorField {
    VectorField(Chart chart, ExprVector components)
        : chart(std::move(chart)), comp(std::move(components)) {
        detail::require_size(this->chart, comp.size(), "vector field");
    }
    Chart chart;
    ExprVector comp;  // upper index
};

struct OneForm {
    OneForm(Chart chart, ExprVector components)
        : chart(std::move(chart)), comp(std::move(components)) {
        detail::require_size(this->chart, comp.size(), "1-form");
    }
    Chart chart;
    ExprVector comp;  // lower index
};

struct Tensor11 {
    Tensor11(Chart chart, ExprMatrix components)
        : chart(std::move(chart)), comp(std::move(components)) {
        detail::require_square(this->chart, comp, "(1,1) tensor");
    }
    static Tensor11 identity(const Chart& chart) {
        return Tensor11(chart, identity_matrix(chart.vars(), chart.dim()));
    }
    const RationalExpr& at(std::size_t i, std::size_t j) const { return comp[i][j]; }
    Chart chart;
    ExprMatrix comp;  // [i][j] = K^i_j
};

/// Antisymmetric (0,2) tensor; antisymmetry is validated on construction.
struct TwoForm {
    TwoForm(Chart chart, ExprMatrix components)
        : chart(std::move(chart)), comp(std::move(components)) {
        detail::require_square(this->chart, comp, "2-form");
        detail::require_antisymmetric(comp, "2-form");
    }
    Chart chart;
    ExprMatrix comp;
};

/// Antisymmetric (2,0) tensor (Poisson candidate); validated on construction.
struct Bivector {
    Bivector(Chart chart, ExprMatrix components)
        : chart(std::move(chart)), comp(std::move(components)) {
        detail::require_square(this->chart, comp, "bivector");
        detail::require_antisymmetric(comp, "bivector");
    }
    const RationalExpr& at(std::size_t i, std::size_t j) const { return comp[i][j]; }
    Chart chart;
    ExprMatrix comp;  // [i][j] = P^{ij}
};

/// Vector-valued 2-form, [i][j][k] with upper i; produced antisymmetric in
/// (j,k) by the torsion/Haantjes formulas (a tested invariant, not a
/// construction-time constraint).
struct VectorValuedTwoForm {
    VectorValuedTwoForm(Chart chart, ExprCube components)
        : chart(std::move(chart)), comp(std::move(components)) {
        detail::require_cube(this->chart, comp, "vector-valued 2-form");
    }
    const RationalExpr& at(std::size_t i, std::size_t j, std::size_t k) const { return comp[i][j][k]; }
    Chart chart;
    ExprCube comp;
};

/// Multiplication-type tensor C^i_{jk}, [i][j][k], symmetric in (j,k) for
/// genuine multiplications; the F-manifold checker verifies that symmetry
/// rather than assuming it.
struct Tensor12 {
    Tensor12(Chart chart, ExprCube components)
        : chart(std::move(chart)), comp(std::move(components)) {
        detail::require_cube(this->chart, comp, "(1,2) tensor");
    }
    const RationalExpr& at(std::size_t i, std::size_t j, std::size_t k) const { return comp[i][j][k]; }
    Chart chart;
    ExprCube comp;
};

/// Curvature-shaped tensor R^i_{jkl}.
struct Tensor13 {
    Tensor13(Chart chart, std::vector<ExprCube> components)
        : chart(std::move(chart)), comp(std::move(components)) {
        detail::require_size(this->chart, comp.size(), "(1,3) tensor");
        for (const auto& c : comp) detail::require_cube(this->chart, c, "(1,3) tensor");
    }
    const RationalExpr& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return comp[i][j][k][l];
    }
    Chart chart;
    std::vector<ExprCube> comp;  // [i][j][k][l]
};

/// Totally covariant rank-3 components c_{ijk}.
struct Tensor03 {
    Tensor03(Chart chart, ExprCube components)
        : chart(std::move(chart)), comp(std::move(components)) {
        detail::require_cube(this->chart, comp, "(0,3) tensor");
    }
    bool totally_symmetric() const {
        const std::size_t n = chart.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (!(comp[i][j][k] - comp[j][i][k]).is_zero()) return false;
                    if (!(comp[i][j][k] - comp[i][k][j]).is_zero()) return false;
                }
        return true;
    }
    const RationalExpr& at(std::size_t i, std::size_t j, std::size_t k) const { return comp[i][j][k]; }
    Chart chart;
    ExprCube comp;
};

/// Covariant rank-4 components (the shape of the nabla-c residual).
struct Tensor04 {
    Tensor04(Chart chart, std::vector<ExprCube> components)
        : chart(std::move(chart)), comp(std::move(components)) {
        detail::require_size(this->chart, comp.size(), "(0,4) tensor");
        for (const auto& c : comp) detail::require_cube(this->chart, c, "(0,4) tensor");
    }
    const RationalExpr& at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
        return comp[a][b][c][d];
    }
    Chart chart;
    std::vector<ExprCube> comp;
};

/// Contravariant rank-3 components J^{ijk} (Jacobi / compatibility residuals).
struct Trivector {
    Trivector(Chart chart, ExprCube components)
        : chart(std::move(chart)), comp(std::move(components)) {
        detail::require_cube(this->chart, comp, "trivector");
    }
    const RationalExpr& at(std::size_t i, std::size_t j, std::size_t k) const { return comp[i][j][k]; }
    Chart chart;
    ExprCube comp;
};

/// Symmetric nondegenerate metric; the exact inverse is computed once at
/// construction, so g must be invertible as a rational-function matrix.
struct Metric {
    Metric(Chart chart_, ExprMatrix components) : chart(std::move(chart_)), comp(std::move(components)) {
        detail::require_square(chart, comp, "metric");
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!(comp[i][j] - comp[j][i]).is_zero())
                    throw invalid_value("metric components are not symmetric");
        if (determinant(comp).is_zero())
            throw singular_matrix("metric is singular over the rational-function field");
        inv = inverse(comp);
    }
    const RationalExpr& at(std::size_t i, std::size_t j) const { return comp[i][j]; }
    const RationalExpr& inv_at(std::size_t i, std::size_t j) const { return inv[i][j]; }
    Chart chart;
    ExprMatrix comp;
    ExprMatrix inv;
};

/// Zero-filled component holders.
inline ExprVector zero_vector(const Chart& c) { return ExprVector(c.dim(), c.zero()); }
inline ExprMatrix zero_matrix(const Chart& c) { return expr_matrix(c.dim(), c.zero()); }
inline ExprCube zero_cube(const Chart& c) { return ExprCube(c.dim(), zero_matrix(c)); }

}  // namespace lenard
