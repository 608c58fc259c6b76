#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lenard/report.hpp"
#include "lenard/specfile.hpp"
#include "lenard/structures.hpp"
#include "lenard/wdvv.hpp"

namespace lenard {

enum class Suite { h1, hm, f, frobenius, wdvv, pipeline, series };

inline const char* suite_name(Suite s) {
    switch (s) {
        case Suite::h1: return "h1";
        case Suite::hm: return "hm";
        case Suite::f: return "f";
        case Suite::frobenius: return "frobenius";
        case Suite::wdvv: return "wdvv";
        case Suite::pipeline: return "pipeline";
        case Suite::series: return "series";
    }
    return "?";
}

inline std::optional<Suite> suite_from_name(const std::string& name) {
    for (Suite s : {Suite::h1, Suite::hm, Suite::f, Suite::frobenius, Suite::wdvv, Suite::pipeline,
                    Suite::series})
        if (name == suite_name(s)) return s;
    return std::nullopt;
}

enum class ReportFormat { text, json };

struct RunConfig {
    Suite suite = Suite::h1;
    ReportFormat format = ReportFormat::text;
    std::optional<std::size_t> m;      // hm suite
    std::optional<std::size_t> order;  // series suite
};

struct SuiteResult {
    CheckReport report;
    int exit_code = 0;  // 0 all pass, 1 at least one failure
    std::optional<SeriesSolution> series;
};

namespace detail {

inline CheckEntry scalar_entry(std::string axiom, const RationalExpr& residual) {
    CheckEntry e{std::move(axiom), residual.is_zero(), std::nullopt};
    if (!e.pass) e.witness = Witness{{}, residual};
    return e;
}

}  // namespace detail

/// Runs one named check suite against a parsed spec file.  Axiom failures
/// are verdicts (exit code 1), while inapplicable suites and malformed
/// requests throw usage_error (exit code 2 at the CLI).
inline SuiteResult run_suite(const SpecFile& spec, const RunConfig& cfg) {
    SuiteResult out;
    switch (cfg.suite) {
        case Suite::h1: {
            out.report = check_h1(spec.manifold());
            break;
        }
        case Suite::hm: {
            const std::size_t m = cfg.m.value_or(spec.Ks.size());
            if (m != spec.Ks.size())
                throw usage_error("suite hm with m = " + std::to_string(m) + " needs exactly " +
                                  std::to_string(m) + " K matrices, spec has " +
                                  std::to_string(spec.Ks.size()));
            out.report = check_hm(spec.manifold(), m);
            break;
        }
        case Suite::f: {
            const auto manifold = spec.manifold();
            const auto frame = lenard_frame(manifold);
            if (!frame.valid)
                throw usage_error("degenerate Lenard frame: the spec's fields X, KX, ... are "
                                  "linearly dependent, so no multiplication can be built");
            const auto built = multiplication_from_chain(frame, manifold.Ks.front());
            out.report = check_f_manifold(built.mult, manifold.X);
            CheckEntry defect =
                detail::entry_cube("chain multiplication symmetric", built.symmetrization_defect);
            out.report.entries.insert(out.report.entries.begin(), std::move(defect));
            break;
        }
        case Suite::frobenius: {
            if (!spec.metric) throw usage_error("suite frobenius needs a metric section g");
            const auto manifold = spec.manifold();
            const auto frame = lenard_frame(manifold);
            if (!frame.valid)
                throw usage_error("degenerate Lenard frame: cannot build the multiplication "
                                  "for the frobenius suite");
            const auto built = multiplication_from_chain(frame, manifold.Ks.front());
            out.report = check_frobenius(*spec.metric, built.mult, manifold.X);
            break;
        }
        case Suite::wdvv: {
            const auto F = spec.prepotential();
            out.report.structure = "WDVV";
            out.report.entries.push_back(detail::scalar_entry("wdvv(F)=0", wdvv_residual(F)));
            break;
        }
        case Suite::pipeline: {
            const auto F = spec.prepotential();
            out.report = check_hm(h2_spec_from_prepotential(F), 2);
            out.report.structure = "pipeline(H2)";
            break;
        }
        case Suite::series: {
            if (!cfg.order) throw usage_error("suite series needs --order");
            const auto F = spec.prepotential();
            const auto t = pqr_from_prepotential(F);
            const auto s = series_solve_pqr(spec.chart, t.P.substitute(0, Rational(0)),
                                            t.Q.substitute(0, Rational(0)),
                                            t.R.substitute(0, Rational(0)), *cfg.order);
            out.report.structure = "series";
            const auto res = s.residuals(spec.chart);
            const char* names[3] = {"P", "Q", "R"};
            for (int k = 0; k < 3; ++k) {
                CheckEntry e{std::string("residual(") + names[k] + ") vanishes through A^" +
                                 std::to_string(*cfg.order >= 2 ? *cfg.order - 2 : 0),
                             true, std::nullopt};
                for (std::uint32_t c = 0; c + 2 <= *cfg.order; ++c) {
                    const RationalExpr coeff = res[k].coeff_of(0, c);
                    if (!coeff.is_zero()) {
                        e.pass = false;
                        e.witness = Witness{{static_cast<int>(c)}, coeff};
                        break;
                    }
                }
                out.report.entries.push_back(std::move(e));
            }
            out.series = s;
            break;
        }
    }
    out.exit_code = out.report.all_pass() ? 0 : 1;
    return out;
}

inline std::string witness_indices_str(const Witness& w) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < w.indices.size(); ++i) {
        if (i) out << ",";
        out << w.indices[i];
    }
    out << "]";
    return out.str();
}

inline void render_text(const SuiteResult& r, std::ostream& out) {
    out << r.report.structure << ": "
        << (r.report.entries.size() - r.report.fail_count()) << "/" << r.report.entries.size()
        << " checks passed\n";
    for (const auto& e : r.report.entries) {
        out << (e.pass ? "  PASS  " : "  FAIL  ") << e.axiom;
        if (e.witness) out << "   witness " << witness_indices_str(*e.witness) << " = " << e.witness->value.str();
        out << "\n";
    }
    if (r.series) {
        out << "series coefficients (per power of the first coordinate):\n";
        const char* names[3] = {"P", "Q", "R"};
        const std::vector<RationalExpr>* tables[3] = {&r.series->p, &r.series->q, &r.series->r};
        for (int t = 0; t < 3; ++t) {
            out << "  " << names[t] << ":";
            for (const auto& c : *tables[t]) out << " " << c.str();
            out << "\n";
        }
    }
    out << "result: " << (r.exit_code == 0 ? "PASS" : "FAIL") << "\n";
}

/// Deterministic JSON: fixed key order, canonical expression strings, fixed
/// axiom order.  Identical inputs render byte-identically.
inline nlohmann::ordered_json to_json(const SuiteResult& r, Suite suite) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = suite_name(suite);
    j["structure"] = r.report.structure;
    j["pass"] = r.report.all_pass();
    j["failed"] = r.report.fail_count();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& e : r.report.entries) {
        nlohmann::ordered_json c;
        c["axiom"] = e.axiom;
        c["pass"] = e.pass;
        if (e.witness) {
            nlohmann::ordered_json w;
            w["indices"] = e.witness->indices;
            w["value"] = e.witness->value.str();
            c["witness"] = std::move(w);
        }
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    if (r.series) {
        nlohmann::ordered_json s;
        s["order"] = r.series->order;
        auto table = [](const std::vector<RationalExpr>& v) {
            nlohmann::ordered_json t = nlohmann::ordered_json::array();
            for (const auto& e : v) t.push_back(e.str());
            return t;
        };
        s["p"] = table(r.series->p);
        s["q"] = table(r.series->q);
        s["r"] = table(r.series->r);
        j["series"] = std::move(s);
    }
    return j;
}

inline void render(const SuiteResult& r, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == ReportFormat::json)
        out << to_json(r, cfg.suite).dump(2) << "\n";
    else
        render_text(r, out);
}

}  // namespace lenard
