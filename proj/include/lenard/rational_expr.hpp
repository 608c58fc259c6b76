#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>

#include "lenard/errors.hpp"
#include "lenard/polynomial.hpp"
#include "lenard/rational.hpp"

namespace lenard {

/// Multivariate rational function in canonical form: numerator and
/// denominator are coprime, the denominator is monic in graded-lex order and
/// never zero, and the zero function is 0/1.  Canonical form makes
/// structural equality semantic, so is_zero() is an exact decision
/// procedure.  Values are immutable; every operation returns a fresh value.
class RationalExpr {
public:
    RationalExpr() = default;
    explicit RationalExpr(VarNamesPtr vars)
        : num_(Polynomial(vars)), den_(Polynomial::constant(std::move(vars), 1)) {}

    RationalExpr(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (!num_.same_vars(den_)) throw invalid_value("numerator/denominator variable lists differ");
        canonicalize();
    }

    static RationalExpr from_polynomial(Polynomial p) {
        RationalExpr e;
        e.num_ = std::move(p);
        e.den_ = Polynomial::constant(e.num_.vars(), 1);
        return e;
    }
    static RationalExpr constant(VarNamesPtr vars, Rational c) {
        return from_polynomial(Polynomial::constant(std::move(vars), std::move(c)));
    }
    static RationalExpr zero(VarNamesPtr vars) { return RationalExpr(std::move(vars)); }
    static RationalExpr one(VarNamesPtr vars) { return constant(std::move(vars), 1); }
    static RationalExpr variable(VarNamesPtr vars, std::size_t index) {
        return from_polynomial(Polynomial::variable(std::move(vars), index));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const VarNamesPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rational constant_value() const {
        if (!is_constant()) throw invalid_value("not a constant expression");
        return num_.constant_value();
    }

    RationalExpr operator-() const {
        RationalExpr r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
        if (a.den_ == b.den_) return RationalExpr(a.num_ + b.num_, a.den_);
        return RationalExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
        if (a.den_ == b.den_) return RationalExpr(a.num_ - b.num_, a.den_);
        return RationalExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
        return RationalExpr(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
        if (b.is_zero()) throw division_by_zero("division by the zero expression");
        return RationalExpr(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalExpr& operator+=(const RationalExpr& o) { return *this = *this + o; }
    RationalExpr& operator-=(const RationalExpr& o) { return *this = *this - o; }
    RationalExpr& operator*=(const RationalExpr& o) { return *this = *this * o; }
    RationalExpr& operator/=(const RationalExpr& o) { return *this = *this / o; }

    RationalExpr scaled(const Rational& c) const {
        RationalExpr r;
        r.num_ = num_.scaled(c);
        r.den_ = c.is_zero() ? Polynomial::constant(den_.vars(), 1) : den_;
        return r;
    }

    RationalExpr pow(std::uint32_t e) const {
        RationalExpr r = one(vars());
        RationalExpr base = *this;
        while (e != 0) {
            if (e & 1u) r = r * base;
            e >>= 1u;
            if (e != 0) base = base * base;
        }
        return r;
    }

    /// Exact partial derivative; the quotient rule result is canonicalized.
    RationalExpr derivative(std::size_t var) const {
        if (den_.is_one()) return from_polynomial(num_.derivative(var));
        return RationalExpr(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
    }

    Rational evaluate(std::span<const Rational> point) const {
        const Rational d = den_.evaluate(point);
        if (d.is_zero()) throw pole_error("denominator vanishes at the evaluation point");
        return num_.evaluate(point) / d;
    }

    /// Fixes one variable to a rational value.  Throws pole_error if the
    /// denominator collapses to zero identically.
    RationalExpr substitute(std::size_t var, const Rational& value) const {
        Polynomial d = den_.substitute(var, value);
        if (d.is_zero()) throw pole_error("denominator vanishes identically after substitution");
        return RationalExpr(num_.substitute(var, value), std::move(d));
    }

    /// Coefficient of var^power; defined for polynomial expressions only.
    RationalExpr coeff_of(std::size_t var, std::uint32_t power) const {
        if (!den_.is_one()) throw invalid_value("coefficient extraction needs a polynomial expression");
        return from_polynomial(num_.coeff_of(var, power));
    }

    std::uint32_t degree_in(std::size_t var) const {
        return std::max(num_.degree_in(var), den_.degree_in(var));
    }

    friend bool operator==(const RationalExpr& a, const RationalExpr& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalExpr& a, const RationalExpr& b) { return !(a == b); }

    /// Canonical text form; "(num)/(den)" when the denominator is not 1.
    /// Printing and re-parsing is the identity on canonical forms.
    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void canonicalize() {
        if (den_.is_zero()) throw division_by_zero("zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial::constant(den_.vars(), 1);
            return;
        }
        if (!den_.is_one()) {
            if (den_.is_constant()) {
                num_ = num_.scaled(den_.constant_value().inverse());
                den_ = Polynomial::constant(den_.vars(), 1);
                return;
            }
            const Polynomial g = poly_gcd(num_, den_);
            if (!g.is_one()) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
            const Rational lc = den_.leading_coefficient();
            if (!lc.is_one()) {
                const Rational inv = lc.inverse();
                num_ = num_.scaled(inv);
                den_ = den_.scaled(inv);
            }
        }
    }

    Polynomial num_;
    Polynomial den_;
};

}  // namespace lenard
