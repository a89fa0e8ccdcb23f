#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace irrcount {

// Exact rational on 128-bit integers. Wide enough for cycle-type
// coefficient work up to k = 20: denominators divide 20! < 2^62 and all
// intermediate products are overflow-checked.
class Rational {
public:
    using Int = __int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int num, Int den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
        normalize();
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    Rational operator-() const { Rational r; r.num_ = -num_; r.den_ = den_; return r; }

    Rational& operator+=(const Rational& o) {
        // num/den + onum/oden with a gcd split to keep magnitudes down
        Int g = gcd_int(den_, o.den_);
        Int od = o.den_ / g;
        Int a = checked_mul(num_, od);
        Int b = checked_mul(o.num_, den_ / g);
        num_ = checked_add(a, b);
        den_ = checked_mul(den_, od);
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        Int g1 = gcd_int(num_, o.den_);
        Int g2 = gcd_int(o.num_, den_);
        num_ = checked_mul(num_ / g1, o.num_ / g2);
        den_ = checked_mul(den_ / g2, o.den_ / g1);
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("rational: division by zero");
        Rational inv;
        inv.num_ = o.den_;
        inv.den_ = o.num_;
        return *this *= inv;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string to_string() const {
        std::string s = int_to_string(num_);
        if (den_ != 1) s += "/" + int_to_string(den_);
        return s;
    }

    static Rational factorial(int n) {
        if (n < 0) throw std::invalid_argument("rational: factorial of negative");
        Rational r(1);
        for (int i = 2; i <= n; ++i) r *= Rational(i);
        return r;
    }

private:
    Int num_, den_;

    static Int gcd_int(Int a, Int b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) { Int t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
    static Int checked_mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: 128-bit overflow");
        return r;
    }
    static Int checked_add(Int a, Int b) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: 128-bit overflow");
        return r;
    }
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = gcd_int(num_, den_);
        num_ /= g;
        den_ /= g;
        if (num_ == 0) den_ = 1;
    }
    static std::string int_to_string(Int v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        std::string s;
        while (u) { s.insert(s.begin(), char('0' + int(u % 10))); u /= 10; }
        return neg ? "-" + s : s;
    }
};

}  // namespace irrcount
