#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lenard/calculus.hpp"
#include "lenard/tensors.hpp"

namespace lenard {

/// The full checker input: a chart with a privileged vector field X, a
/// privileged 1-form theta, and recursion operators K1..Km (the identity K0
/// is implicit).  Metric and potential ride along when present.
struct ManifoldSpec {
    ManifoldSpec(Chart chart_, VectorField X_, OneForm theta_, std::vector<Tensor11> Ks_,
                 std::optional<Metric> metric_ = std::nullopt,
                 std::optional<RationalExpr> potential_ = std::nullopt)
        : chart(std::move(chart_)),
          X(std::move(X_)),
          theta(std::move(theta_)),
          Ks(std::move(Ks_)),
          metric(std::move(metric_)),
          potential(std::move(potential_)) {
        require_same_chart(chart, X.chart);
        require_same_chart(chart, theta.chart);
        if (Ks.empty()) throw invalid_value("at least one recursion operator is required");
        for (const auto& K : Ks) require_same_chart(chart, K.chart);
        if (metric) require_same_chart(chart, metric->chart);
    }

    Chart chart;
    VectorField X;
    OneForm theta;
    std::vector<Tensor11> Ks;  // K1..Km
    std::optional<Metric> metric;
    std::optional<RationalExpr> potential;
};

/// Frame X_j = K^j X for j = 0..n-1, its Gram determinant, and the dual
/// coframe.  `valid` is false when the determinant is the zero expression;
/// the coframe is empty in that case and downstream constructions refuse to
/// run.
struct LenardFrame {
    std::vector<VectorField> fields;
    RationalExpr gram_det;
    std::vector<OneForm> coframe;  // eps^j, dual to the fields
    bool valid = false;
};

/// Builds the Lenard frame of a spec from K = Ks[0].  The coframe rows come
/// from the exact inverse of the matrix whose columns are the frame fields.
inline LenardFrame lenard_frame(const ManifoldSpec& spec) {
    const Chart& c = spec.chart;
    const std::size_t n = c.dim();
    const Tensor11& K = spec.Ks.front();

    LenardFrame out;
    out.fields.reserve(n);
    out.fields.push_back(spec.X);
    for (std::size_t j = 1; j < n; ++j) out.fields.push_back(apply_tensor11(K, out.fields.back()));

    ExprMatrix m = zero_matrix(c);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = out.fields[j].comp[i];  // column j = X_j
    out.gram_det = determinant(m);
    out.valid = !out.gram_det.is_zero();
    if (out.valid) {
        const ExprMatrix inv = inverse(m);
        out.coframe.reserve(n);
        for (std::size_t j = 0; j < n; ++j) out.coframe.emplace_back(c, inv[j]);
    }
    return out;
}

}  // namespace lenard
