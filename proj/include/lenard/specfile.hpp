#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lenard/manifold.hpp"
#include "lenard/parse.hpp"
#include "lenard/wdvv.hpp"

namespace lenard {

/// A suite was asked to run on data it does not apply to.
struct usage_error : error {
    using error::error;
};

/// Parsed contents of a manifold spec file.  Sections other than dim and
/// coords are optional; the suite runners check applicability.
struct SpecFile {
    explicit SpecFile(Chart chart_) : chart(std::move(chart_)) {}

    Chart chart;
    std::optional<VectorField> X;
    std::optional<OneForm> theta;
    std::vector<Tensor11> Ks;
    std::optional<Metric> metric;
    std::optional<RationalExpr> F;

    bool has_manifold() const { return X && theta && !Ks.empty(); }

    ManifoldSpec manifold() const {
        if (!has_manifold())
            throw usage_error("spec needs X, theta and at least one K matrix for this suite");
        return ManifoldSpec(chart, *X, *theta, Ks, metric, F);
    }

    Prepotential prepotential() const {
        if (!F) throw usage_error("spec carries no potential F");
        if (chart.dim() != 3) throw usage_error("potential suites need a 3-dimensional chart");
        try {
            return Prepotential(chart, *F);
        } catch (const invalid_value& e) {
            throw usage_error(e.what());
        }
    }
};

namespace detail {

struct SourcePos {
    std::size_t line = 1, col = 1;
};

inline SourcePos line_col(std::string_view text, std::size_t pos) {
    SourcePos p;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.col = 1;
        } else {
            ++p.col;
        }
    }
    return p;
}

[[noreturn]] inline void fail_at(std::string_view text, std::size_t pos, const std::string& msg) {
    const SourcePos p = line_col(text, pos);
    std::ostringstream out;
    out << "line " << p.line << ", column " << p.col << ": " << msg;
    throw parse_error(out.str(), pos, p.line, p.col);
}

/// '#' comments blanked out in place; offsets stay valid.
inline std::string strip_comments(std::string text) {
    bool comment = false;
    for (auto& ch : text) {
        if (ch == '#') comment = true;
        if (ch == '\n') comment = false;
        if (comment) ch = ' ';
    }
    return text;
}

struct Section {
    std::string key;
    std::size_t key_pos = 0;
    std::string value;
    std::size_t value_pos = 0;
};

inline bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// Splits "(a, b, c)" or "[a, b, c]" on depth-zero commas; returns the
/// pieces with their offsets inside `src`.
inline std::vector<std::pair<std::string, std::size_t>> split_list(std::string_view full,
                                                                   std::string_view src,
                                                                   std::size_t base, char open,
                                                                   char close) {
    std::size_t i = 0;
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    if (i >= src.size() || src[i] != open)
        fail_at(full, base + i, std::string("expected '") + open + "'");
    std::size_t depth = 1;
    const std::size_t start = ++i;
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t item_start = start;
    for (; i < src.size(); ++i) {
        const char c = src[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') {
            if (--depth == 0) break;
        }
        if (c == ',' && depth == 1) {
            out.emplace_back(std::string(src.substr(item_start, i - item_start)), base + item_start);
            item_start = i + 1;
        }
    }
    if (i >= src.size() || depth != 0)
        fail_at(full, base + src.size(), std::string("missing closing '") + close + "'");
    out.emplace_back(std::string(src.substr(item_start, i - item_start)), base + item_start);
    for (std::size_t rest = i + 1; rest < src.size(); ++rest)
        if (!std::isspace(static_cast<unsigned char>(src[rest])))
            fail_at(full, base + rest, "unexpected trailing input after list");
    return out;
}

inline RationalExpr parse_entry(std::string_view full, const std::string& src, std::size_t base,
                                const VarNamesPtr& vars) {
    try {
        return parse_expr(src, vars);
    } catch (const parse_error& e) {
        fail_at(full, base + e.pos, e.what());
    }
}

}  // namespace detail

/// Parses spec-file text.  Format, one section per entry ('#' comments):
///   dim <n>
///   coords <name> ... <name>
///   X = (<expr>, ...)        theta = (<expr>, ...)
///   K1 = [[...],[...]]       K2, K3, ... further operators
///   g = [[...]]              F = <expr>
inline SpecFile load_spec_text(const std::string& raw) {
    const std::string text = detail::strip_comments(raw);
    std::size_t i = 0;
    std::size_t dim = 0;
    bool have_dim = false;
    std::vector<std::string> coords;
    bool have_coords = false;
    std::vector<detail::Section> sections;

    auto skip_space = [&](bool stop_at_newline) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            if (stop_at_newline && text[i] == '\n') return;
            ++i;
        }
    };

    while (true) {
        skip_space(false);
        if (i >= text.size()) break;
        if (!std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != '_')
            detail::fail_at(text, i, "expected a section keyword");
        const std::size_t key_pos = i;
        std::string key;
        while (i < text.size() && detail::ident_char(text[i])) key.push_back(text[i++]);

        if (key == "dim") {
            skip_space(true);
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) detail::fail_at(text, i, "dim needs a positive integer");
            dim = std::stoul(text.substr(start, i - start));
            if (dim == 0) detail::fail_at(text, start, "dim must be positive");
            have_dim = true;
            continue;
        }
        if (key == "coords") {
            while (true) {
                skip_space(true);
                if (i >= text.size() || text[i] == '\n') break;
                if (!std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != '_')
                    detail::fail_at(text, i, "coordinate names must be identifiers");
                std::string name;
                while (i < text.size() && detail::ident_char(text[i])) name.push_back(text[i++]);
                coords.push_back(std::move(name));
            }
            if (coords.empty()) detail::fail_at(text, key_pos, "coords lists no names");
            have_coords = true;
            continue;
        }

        skip_space(false);
        if (i >= text.size() || text[i] != '=')
            detail::fail_at(text, i, "expected '=' after section '" + key + "'");
        ++i;
        skip_space(false);
        if (i >= text.size()) detail::fail_at(text, i, "missing value for section '" + key + "'");
        detail::Section sec;
        sec.key = key;
        sec.key_pos = key_pos;
        sec.value_pos = i;
        if (text[i] == '(' || text[i] == '[') {
            // balanced bracket read; may span lines
            std::size_t depth = 0;
            const std::size_t start = i;
            do {
                const char c = text[i];
                if (c == '(' || c == '[') ++depth;
                if (c == ')' || c == ']') --depth;
                ++i;
            } while (i < text.size() && depth > 0);
            if (depth > 0) detail::fail_at(text, start, "unbalanced brackets in section '" + key + "'");
            sec.value = text.substr(start, i - start);
        } else {
            const std::size_t start = i;
            while (i < text.size() && text[i] != '\n') ++i;
            sec.value = text.substr(start, i - start);
        }
        sections.push_back(std::move(sec));
    }

    if (!have_dim) throw parse_error("missing 'dim' section", 0, 1, 1);
    if (!have_coords) throw parse_error("missing 'coords' section", 0, 1, 1);
    if (coords.size() != dim)
        throw parse_error("coords lists " + std::to_string(coords.size()) + " names but dim is " +
                              std::to_string(dim),
                          0, 1, 1);

    SpecFile spec{Chart(coords)};
    const auto& vars = spec.chart.vars();

    auto parse_tuple = [&](const detail::Section& s) {
        auto items = detail::split_list(text, s.value, s.value_pos, '(', ')');
        if (items.size() != dim)
            detail::fail_at(text, s.value_pos,
                            "section '" + s.key + "' has " + std::to_string(items.size()) +
                                " entries, expected " + std::to_string(dim));
        ExprVector v;
        for (auto& [src, off] : items) v.push_back(detail::parse_entry(text, src, off, vars));
        return v;
    };
    auto parse_matrix = [&](const detail::Section& s) {
        auto rows = detail::split_list(text, s.value, s.value_pos, '[', ']');
        if (rows.size() != dim)
            detail::fail_at(text, s.value_pos,
                            "section '" + s.key + "' has " + std::to_string(rows.size()) +
                                " rows, expected " + std::to_string(dim));
        ExprMatrix m;
        for (auto& [rsrc, roff] : rows) {
            auto cells = detail::split_list(text, rsrc, roff, '[', ']');
            if (cells.size() != dim)
                detail::fail_at(text, roff,
                                "section '" + s.key + "' has a row of " +
                                    std::to_string(cells.size()) + " entries, expected " +
                                    std::to_string(dim));
            std::vector<RationalExpr> row;
            for (auto& [src, off] : cells) row.push_back(detail::parse_entry(text, src, off, vars));
            m.push_back(std::move(row));
        }
        return m;
    };

    std::map<std::size_t, detail::Section> kmats;
    for (const auto& s : sections) {
        if (s.key == "X") {
            spec.X = VectorField(spec.chart, parse_tuple(s));
        } else if (s.key == "theta") {
            spec.theta = OneForm(spec.chart, parse_tuple(s));
        } else if (s.key == "g") {
            try {
                spec.metric = Metric(spec.chart, parse_matrix(s));
            } catch (const error& e) {
                if (dynamic_cast<const parse_error*>(&e)) throw;
                detail::fail_at(text, s.value_pos, std::string("bad metric: ") + e.what());
            }
        } else if (s.key == "F") {
            spec.F = detail::parse_entry(text, s.value, s.value_pos, vars);
        } else if (s.key.size() > 1 && s.key[0] == 'K') {
            std::size_t idx = 0;
            for (std::size_t c = 1; c < s.key.size(); ++c) {
                if (!std::isdigit(static_cast<unsigned char>(s.key[c]))) { idx = 0; break; }
                idx = idx * 10 + static_cast<std::size_t>(s.key[c] - '0');
            }
            if (idx == 0) detail::fail_at(text, s.key_pos, "unknown section '" + s.key + "'");
            kmats.emplace(idx, s);
        } else {
            detail::fail_at(text, s.key_pos, "unknown section '" + s.key + "'");
        }
    }
    for (std::size_t want = 1; !kmats.empty(); ++want) {
        auto it = kmats.begin();
        if (it->first != want)
            detail::fail_at(text, it->second.key_pos,
                            "recursion operators must be numbered K1, K2, ... without gaps");
        spec.Ks.emplace_back(spec.chart, parse_matrix(it->second));
        kmats.erase(it);
    }
    return spec;
}

/// Loads and parses a spec file from disk.
inline SpecFile load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_spec_text(buf.str());
}

}  // namespace lenard
