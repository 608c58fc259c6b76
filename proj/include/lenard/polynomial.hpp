#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lenard/errors.hpp"
#include "lenard/rational.hpp"

namespace lenard {

using VarNames = std::vector<std::string>;
using VarNamesPtr = std::shared_ptr<const VarNames>;

inline VarNamesPtr make_vars(VarNames names) {
    return std::make_shared<const VarNames>(std::move(names));
}

/// Exponent vector; one entry per variable of the ambient ring.
using Monomial = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kMaxExponent = (1u << 30);

/// Graded lexicographic order, descending: higher total degree first, ties
/// broken by the earlier variable carrying the larger exponent.  Using the
/// descending order as the map comparator puts the leading term at begin().
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/// Multivariate polynomial with exact rational coefficients over a fixed,
/// shared list of variable names.  No zero coefficient is ever stored, and
/// the term map is kept in graded-lex order, so structural equality is
/// semantic equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(VarNamesPtr vars) : vars_(std::move(vars)) {}

    static Polynomial constant(VarNamesPtr vars, Rational c) {
        Polynomial p(std::move(vars));
        if (!c.is_zero()) p.terms_.emplace(Monomial(p.arity(), 0), std::move(c));
        return p;
    }

    static Polynomial variable(VarNamesPtr vars, std::size_t index) {
        Polynomial p(std::move(vars));
        if (index >= p.arity()) throw invalid_value("variable index out of range");
        Monomial m(p.arity(), 0);
        m[index] = 1;
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    static Polynomial monomial(VarNamesPtr vars, Monomial m, Rational c) {
        Polynomial p(std::move(vars));
        if (m.size() != p.arity()) throw invalid_value("monomial arity mismatch");
        if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    const VarNamesPtr& vars() const { return vars_; }
    std::size_t arity() const { return vars_ ? vars_->size() : 0; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        const auto& m = terms_.begin()->first;
        return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
    }
    /// Requires is_constant().
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;
    }
    bool is_one() const { return is_constant() && constant_value().is_one(); }

    std::uint64_t total_degree() const {
        if (terms_.empty()) return 0;
        std::uint64_t d = 0;
        for (auto e : terms_.begin()->first) d += e;  // leading term is grlex-max
        return d;
    }

    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }

    /// Leading term in graded-lex order; requires a nonzero polynomial.
    const std::pair<const Monomial, Rational>& leading_term() const {
        if (terms_.empty()) throw invalid_value("leading term of the zero polynomial");
        return *terms_.begin();
    }
    Rational leading_coefficient() const { return leading_term().second; }

    Polynomial operator-() const {
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_vars(b);
        Polynomial r(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) {
                    const std::uint64_t e = std::uint64_t(ma[i]) + mb[i];
                    if (e > kMaxExponent) throw exponent_overflow("monomial exponent overflow");
                    m[i] = static_cast<std::uint32_t>(e);
                }
                r.add_term(m, ca * cb);
            }
        return r;
    }

    Polynomial scaled(const Rational& c) const {
        Polynomial r(vars_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    Polynomial pow(std::uint32_t e) const {
        Polynomial r = constant(vars_, 1);
        Polynomial base = *this;
        while (e != 0) {
            if (e & 1u) r = r * base;
            e >>= 1u;
            if (e != 0) base = base * base;
        }
        return r;
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial d = m;
            d[var] -= 1;
            r.add_term(d, c * Rational(static_cast<long>(m[var])));
        }
        return r;
    }

    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != arity()) throw invalid_value("evaluation point arity mismatch");
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0) t *= point[i].pow(m[i]);
            acc += t;
        }
        return acc;
    }

    /// Fixes one variable to a rational value; result lives in the same ring
    /// with that variable absent.
    Polynomial substitute(std::size_t var, const Rational& value) const {
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) {
            Monomial d = m;
            const std::uint32_t e = d[var];
            d[var] = 0;
            r.add_term(d, e == 0 ? c : c * value.pow(e));
        }
        return r;
    }

    /// Coefficient of var^power, as a polynomial with that variable removed
    /// from its exponents.
    Polynomial coeff_of(std::size_t var, std::uint32_t power) const {
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m[var] != power) continue;
            Monomial d = m;
            d[var] = 0;
            r.terms_.emplace(std::move(d), c);
        }
        return r;
    }

    /// Multiplies by var^power.
    Polynomial shifted(std::size_t var, std::uint32_t power) const {
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) {
            const std::uint64_t e = std::uint64_t(m[var]) + power;
            if (e > kMaxExponent) throw exponent_overflow("monomial exponent overflow");
            Monomial d = m;
            d[var] = static_cast<std::uint32_t>(e);
            r.terms_.emplace(std::move(d), c);
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.same_vars(b) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    bool same_vars(const Polynomial& o) const {
        if (vars_ == o.vars_) return true;
        if (!vars_ || !o.vars_) return false;
        return *vars_ == *o.vars_;
    }

    /// Canonical text form, terms in descending graded-lex order:
    /// "A^2*B - 1/2*C + 3".  Re-parsing yields an equal polynomial.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) out << "-";
                first = false;
            } else {
                out << (c.sign() < 0 ? " - " : " + ");
            }
            const std::string mono = monomial_str(m);
            if (mono.empty()) {
                out << a.str();
            } else {
                if (!a.is_one()) out << a.str() << "*";
                out << mono;
            }
        }
        return out.str();
    }

private:
    void check_same_vars(const Polynomial& o) const {
        if (!same_vars(o)) throw invalid_value("polynomials over different variable lists");
    }

    void add_term(const Monomial& m, Rational c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::string monomial_str(const Monomial& m) const {
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first) out << "*";
            first = false;
            out << (*vars_)[i];
            if (m[i] != 1) out << "^" << m[i];
        }
        return out.str();
    }

    VarNamesPtr vars_;
    TermMap terms_;
};

/// Division with remainder by a single divisor in graded-lex order.  The
/// remainder is the normal form of f modulo g; it is zero exactly when g
/// divides f.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw division_by_zero("polynomial division by zero");
    Polynomial q(f.vars());
    Polynomial r(f.vars());
    Polynomial p = f;
    const auto& [gm, gc] = g.leading_term();
    while (!p.is_zero()) {
        const auto& [pm, pc] = p.leading_term();
        bool divisible = true;
        for (std::size_t i = 0; i < pm.size(); ++i)
            if (pm[i] < gm[i]) { divisible = false; break; }
        if (divisible) {
            Monomial d(pm.size());
            for (std::size_t i = 0; i < pm.size(); ++i) d[i] = pm[i] - gm[i];
            const Polynomial t = Polynomial::monomial(f.vars(), std::move(d), pc / gc);
            q += t;
            p -= t * g;
        } else {
            const Polynomial t = Polynomial::monomial(f.vars(), pm, pc);
            r += t;
            p -= t;
        }
    }
    return {std::move(q), std::move(r)};
}

/// Exact quotient; throws if g does not divide f.
inline Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw invalid_value("inexact polynomial division");
    return q;
}

namespace detail {

/// Index of the highest variable occurring in p, or npos for constants.
inline std::size_t top_var(const Polynomial& p) {
    std::size_t best = std::string::npos;
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = m.size(); i-- > 0;) {
            if (m[i] == 0) continue;
            if (best == std::string::npos || i > best) best = i;
            break;  // highest nonzero exponent of this monomial found
        }
    return best;
}

inline Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    const Rational lc = p.leading_coefficient();
    return lc.is_one() ? p : p.scaled(lc.inverse());
}

/// Classical pseudo-remainder of u by w viewed as univariate in variable v:
/// lc_v(w)^(deg_v u - deg_v w + 1) * u = q*w + prem.  The exact
/// normalization matters for the subresultant remainder sequence.
inline Polynomial prem(Polynomial u, const Polynomial& w, std::size_t v) {
    const std::uint32_t dw = w.degree_in(v);
    const Polynomial lw = w.coeff_of(v, dw);
    std::uint32_t du = u.degree_in(v);
    if (du < dw) return u;
    std::uint32_t e = du - dw + 1;
    while (!u.is_zero()) {
        du = u.degree_in(v);
        if (du < dw) break;
        const Polynomial lu = u.coeff_of(v, du);
        u = lw * u - lu.shifted(v, du - dw) * w;
        --e;
    }
    return e == 0 ? u : lw.pow(e) * u;
}

}  // namespace detail

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

/// Gcd of the coefficients of p viewed as univariate in v.  Monic.
inline Polynomial content_wrt(const Polynomial& p, std::size_t v) {
    Polynomial c(p.vars());
    const std::uint32_t d = p.degree_in(v);
    for (std::uint32_t k = 0; k <= d; ++k) {
        const Polynomial ck = p.coeff_of(v, k);
        if (ck.is_zero()) continue;
        c = poly_gcd(c, ck);
        if (c.is_one()) break;
    }
    return c;
}

inline int dense_degree(const std::vector<Rational>& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (!p[i].is_zero()) return static_cast<int>(i);
    return -1;
}

/// Coprimality certificate: evaluates all variables except v at fixed
/// pseudo-random rational points and takes a univariate gcd of the images.
/// A degree-0 image gcd proves the primitive parts (w.r.t. v) are coprime,
/// because the evaluation is chosen so neither leading v-coefficient
/// vanishes.  Returning false is never wrong, only slow.
inline bool images_coprime(const Polynomial& a, const Polynomial& b, std::size_t v) {
    const std::uint32_t da = a.degree_in(v), db = b.degree_in(v);
    std::uint64_t state = 0x9e3779b97f4a7c15ull;  // fixed seed: results must be deterministic
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<long>(state % 61) - 30;
    };
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<Rational> pt(a.arity(), Rational(0));
        for (std::size_t i = 0; i < pt.size(); ++i)
            if (i != v) pt[i] = Rational(next());
        std::vector<Rational> fa(da + 1), fb(db + 1);
        for (std::uint32_t k = 0; k <= da; ++k) fa[k] = a.coeff_of(v, k).evaluate(pt);
        for (std::uint32_t k = 0; k <= db; ++k) fb[k] = b.coeff_of(v, k).evaluate(pt);
        if (fa[da].is_zero() || fb[db].is_zero()) continue;  // degenerate image, retry
        // monic univariate Euclid
        std::vector<Rational> u = std::move(fa), w = std::move(fb);
        int dw = dense_degree(w);
        while (dw > 0) {
            const Rational lead = w[dw];
            if (!lead.is_one())
                for (auto& c : w) c /= lead;
            int du = dense_degree(u);
            while (du >= dw) {
                const Rational f = u[du];
                for (int i = 0; i <= dw; ++i) u[du - dw + i] -= f * w[i];
                u[du] = Rational(0);
                du = dense_degree(u);
            }
            std::swap(u, w);
            dw = dense_degree(w);
        }
        if (dw == 0) return true;                        // nonzero constant gcd
        if (dw < 0 && dense_degree(u) == 0) return true;  // w ran out; gcd is u
    }
    return false;
}

}  // namespace detail

/// Monic gcd over the rational coefficient field, computed by content /
/// primitive-part recursion on the top occurring variable with a primitive
/// pseudo-remainder sequence.  gcd(0, 0) = 0; any nonzero constant input
/// makes the gcd 1.
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return detail::monic(b);
    if (b.is_zero()) return detail::monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.vars(), 1);

    const std::size_t va = detail::top_var(a);
    const std::size_t vb = detail::top_var(b);
    const std::size_t v = std::max(va, vb);
    // A v-free input forces the gcd to be v-free, so it divides the other
    // side's content with respect to v.
    if (a.degree_in(v) == 0) return poly_gcd(a, detail::content_wrt(b, v));
    if (b.degree_in(v) == 0) return poly_gcd(detail::content_wrt(a, v), b);

    // Coprime primitive parts reduce the gcd to the contents alone; the
    // certificate makes the generic (coprime) case cheap.
    if (detail::images_coprime(a, b, v))
        return poly_gcd(detail::content_wrt(a, v), detail::content_wrt(b, v));

    const Polynomial ca = detail::content_wrt(a, v);
    const Polynomial cb = detail::content_wrt(b, v);
    const Polynomial c = poly_gcd(ca, cb);
    Polynomial fa = exact_div(a, ca);
    Polynomial fb = exact_div(b, cb);
    if (fa.degree_in(v) < fb.degree_in(v)) std::swap(fa, fb);
    // Subresultant remainder sequence on the primitive parts; the g*h^delta
    // divisors are exact by the subresultant theorem and keep coefficient
    // growth polynomial.
    Polynomial g = Polynomial::constant(a.vars(), 1);
    Polynomial h = g;
    while (!fb.is_zero()) {
        const std::uint32_t delta = fa.degree_in(v) - fb.degree_in(v);
        Polynomial r = detail::prem(fa, fb, v);
        fa = std::move(fb);
        fb = r.is_zero() ? std::move(r) : exact_div(r, g * h.pow(delta));
        g = fa.coeff_of(v, fa.degree_in(v));
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = exact_div(g.pow(delta), h.pow(delta - 1));
    }
    return detail::monic(c * exact_div(fa, detail::content_wrt(fa, v)));
}

}  // namespace lenard
