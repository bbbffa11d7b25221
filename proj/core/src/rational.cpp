#include "dsbo/rational.hpp"

#include "dsbo/errors.hpp"

#include <cctype>
#include <ostream>

namespace dsbo {

namespace {

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw ParseError("empty integer in rational '" + std::string(whole) + "'");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad rational '" + std::string(whole) + "'");
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("bad rational '" + std::string(whole) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, s));
    mpz_class n = parse_integer(s.substr(0, slash), s);
    auto d_str = s.substr(slash + 1);
    if (!d_str.empty() && (d_str[0] == '-' || d_str[0] == '+'))
        throw ParseError("sign in denominator of '" + std::string(s) + "'");
    mpz_class d = parse_integer(d_str, s);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw DomainError("expected a machine integer, got " + str());
    return v_.get_num().get_si();
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational GaussianRational::i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {Rational(1), Rational(0)};
        case 1: return {Rational(0), Rational(1)};
        case 2: return {Rational(-1), Rational(0)};
        default: return {Rational(0), Rational(-1)};
    }
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string im = im_ == Rational(1) ? "i" : (im_ == Rational(-1) ? "-i" : im_.str() + "i");
    if (re_.is_zero()) return im;
    if (im[0] != '-') im = "+" + im;
    return re_.str() + im;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

Rational pochhammer(const Rational& x, long n) {
    if (n < 0) throw DomainError("pochhammer with negative length");
    Rational r(1);
    Rational f = x;
    for (long k = 0; k < n; ++k) {
        if (f.is_zero()) return Rational(0);
        r *= f;
        f += Rational(1);
    }
    return r;
}

Rational gamma_ratio(const Rational& x, long p) {
    if (p >= 0) return pochhammer(x, p);
    Rational d = pochhammer(x + Rational(p), -p);
    if (d.is_zero())
        throw PoleError("gamma ratio Γ(" + (x + Rational(p)).str() + ")/Γ(" + x.str() + ") has a pole");
    return Rational(1) / d;
}

Rational binomial(long n, long k) {
    if (n < 0) throw DomainError("binomial with negative n");
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational pow(const Rational& x, long e) {
    if (e < 0) return Rational(1) / pow(x, -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), x.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

GaussianRational pow(const GaussianRational& x, long e) {
    if (e < 0) return GaussianRational(1) / pow(x, -e);
    GaussianRational r(1), b = x;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

long floor_of(const Rational& x) {
    mpz_class f = x.floor();
    if (!f.fits_slong_p()) throw DomainError("floor out of range");
    return f.get_si();
}

}  // namespace dsbo
