#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "enclose/errors.hpp"

namespace enclose {

using Int = mpz_class;

// Exact rational. Always canonical: denominator > 0, gcd(num, den) == 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(unsigned long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw DegenerateInput("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.sign() == 0) throw DegenerateInput("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // floor(value) as an integer
    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    double to_double() const { return v_.get_d(); }

    // "p" when integral, otherwise "p/q"
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    // accepts "p" and "p/q", optional leading minus on p
    static Rational parse(const std::string& s) {
        auto bad = [&] { throw ParseError("bad rational literal: '" + s + "'"); };
        auto is_int = [](const std::string& t) {
            if (t.empty()) return false;
            size_t i = (t[0] == '-') ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        size_t slash = s.find('/');
        if (slash == std::string::npos) {
            if (!is_int(s)) bad();
            return Rational(Int(s));
        }
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!is_int(p) || !is_int(q)) bad();
        Int den(q);
        if (den == 0) bad();
        return Rational(Int(p), den);
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// largest s with s = y / (den * 2^k) and s^2 <= x; requires x >= 0
inline Rational sqrt_lower(const Rational& x, unsigned bits = 64) {
    if (x.sign() < 0) throw DegenerateInput("sqrt of negative rational");
    if (x.sign() == 0) return Rational(0);
    Int n = x.num(), d = x.den();
    Int scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), 2 * bits);
    Int t = n * d * scale;
    Int y;
    mpz_sqrt(y.get_mpz_t(), t.get_mpz_t());
    Int denom = d;
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), bits);
    return Rational(y, denom);
}

// smallest convenient s with s^2 >= x; requires x >= 0
inline Rational sqrt_upper(const Rational& x, unsigned bits = 64) {
    if (x.sign() < 0) throw DegenerateInput("sqrt of negative rational");
    if (x.sign() == 0) return Rational(0);
    Int n = x.num(), d = x.den();
    Int scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), 2 * bits);
    Int t = n * d * scale;
    Int y;
    mpz_sqrt(y.get_mpz_t(), t.get_mpz_t());
    Int denom = d;
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), bits);
    Rational lo(y, denom);
    if (lo * lo == x) return lo;
    return Rational(y + 1, denom);
}

} // namespace enclose
