#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenard/rational_expr.hpp"

namespace lenard {

/// The first nonzero component of a failed residual, with its indices.
struct Witness {
    std::vector<int> indices;
    RationalExpr value;
};

struct CheckEntry {
    std::string axiom;
    bool pass = false;
    std::optional<Witness> witness;  // present exactly on failure
};

/// Per-axiom verdicts for one structure check.  Entry order is fixed by the
/// checker that produced the report, so rendered reports are deterministic.
struct CheckReport {
    std::string structure;
    std::vector<CheckEntry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    std::size_t fail_count() const {
        std::size_t n = 0;
        for (const auto& e : entries)
            if (!e.pass) ++n;
        return n;
    }
};

namespace detail {

/// Scans a multi-index residual in lexicographic index order and returns the
/// first nonzero component, if any.  Witness index order is fixed so that
/// failures are reproducible across runs and platforms.
inline std::optional<Witness> scan_residual(const std::vector<int>& dims,
                                            const std::function<const RationalExpr&(const std::vector<int>&)>& at) {
    std::vector<int> idx(dims.size(), 0);
    for (;;) {
        const RationalExpr& v = at(idx);
        if (!v.is_zero()) return Witness{idx, v};
        std::size_t d = dims.size();
        while (d-- > 0) {
            if (++idx[d] < dims[d]) break;
            idx[d] = 0;
            if (d == 0) return std::nullopt;
        }
        if (dims.empty()) return std::nullopt;
    }
}

inline CheckEntry entry_from_scan(std::string axiom, const std::vector<int>& dims,
                                  const std::function<const RationalExpr&(const std::vector<int>&)>& at) {
    auto w = scan_residual(dims, at);
    return CheckEntry{std::move(axiom), !w.has_value(), std::move(w)};
}

}  // namespace detail

}  // namespace lenard
