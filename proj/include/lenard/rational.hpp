#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "lenard/errors.hpp"

namespace lenard {

using Integer = mpz_class;

/// Exact rational number.  Always canonical: gcd(|num|, den) = 1, den >= 1,
/// zero is 0/1.  Backed by GMP, so numerator and denominator are
/// arbitrary-precision integers.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den) {
        if (den == 0) throw division_by_zero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw division_by_zero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Reads "123" or "-4/56".  Throws parse_error on malformed input.
    static Rational from_string(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw parse_error("malformed rational literal '" + text + "'", 0);
        if (q.get_den() == 0) throw division_by_zero("rational literal with zero denominator");
        q.canonicalize();
        return Rational(std::move(q));
    }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(std::uint32_t e) const {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
        mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
        return Rational(std::move(r));  // canonical: num/den stay coprime under powers
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Canonical decimal form: "0", "7", "-3/4".
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

}  // namespace lenard
