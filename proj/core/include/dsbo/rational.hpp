#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dsbo {

class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I n) : v_(mpz_class(static_cast<long>(n))) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // "p", "-p/q", "p/q" with q != 0.
    static Rational parse(std::string_view s);

    std::string str() const;
    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    // Throws DomainError unless integral and fitting in a long.
    long to_long() const;
    mpz_class floor() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

class GaussianRational {
public:
    GaussianRational() = default;
    template <std::integral I>
    GaussianRational(I n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    // i^k for any integer k.
    static GaussianRational i_pow(long k);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    std::string str() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    // DomainError on division by zero.
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

Rational pochhammer(const Rational& x, long n);
// Gamma(x+p)/Gamma(x) with the limit convention; PoleError on a genuine pole.
Rational gamma_ratio(const Rational& x, long p);
Rational binomial(long n, long k);
Rational factorial(long n);
Rational pow(const Rational& x, long e);
GaussianRational pow(const GaussianRational& x, long e);
// (-1)^k
inline long neg_one_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

// The bracket [x]: floor toward minus infinity.
long floor_of(const Rational& x);
inline long floor_div(long n, long d) {
    long q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

}  // namespace dsbo
