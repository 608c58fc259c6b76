#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lenard/errors.hpp"
#include "lenard/rational_expr.hpp"

namespace lenard {

/// A coordinate chart: an ordered list of distinct coordinate names.  All
/// tensor components on a chart are rational expressions in its coordinates.
class Chart {
public:
    explicit Chart(VarNames coords) : coords_(make_vars(std::move(coords))) { validate(); }
    explicit Chart(VarNamesPtr coords) : coords_(std::move(coords)) { validate(); }

    std::size_t dim() const { return coords_->size(); }
    const VarNamesPtr& vars() const { return coords_; }
    const std::string& name(std::size_t i) const { return coords_->at(i); }

    RationalExpr zero() const { return RationalExpr::zero(coords_); }
    RationalExpr one() const { return RationalExpr::one(coords_); }
    RationalExpr constant(Rational c) const { return RationalExpr::constant(coords_, std::move(c)); }
    RationalExpr coordinate(std::size_t i) const { return RationalExpr::variable(coords_, i); }

    friend bool operator==(const Chart& a, const Chart& b) {
        return a.coords_ == b.coords_ || *a.coords_ == *b.coords_;
    }
    friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }

private:
    void validate() const {
        if (!coords_ || coords_->empty()) throw invalid_value("chart needs at least one coordinate");
        std::set<std::string> seen(coords_->begin(), coords_->end());
        if (seen.size() != coords_->size()) throw invalid_value("chart coordinates must be distinct");
    }

    VarNamesPtr coords_;
};

inline void require_same_chart(const Chart& a, const Chart& b) {
    if (a != b) throw chart_mismatch("values live on different charts");
}

}  // namespace lenard
