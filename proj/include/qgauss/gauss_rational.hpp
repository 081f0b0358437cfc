#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace qgauss {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (base 10) into a canonicalized rational.
inline Rational rational_from_string(const std::string& text) {
    Rational r(text, 10);
    r.canonicalize();
    return r;
}

/// "p" when the denominator is 1, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline bool rational_is_integer(const Rational& r) {
    return r.get_den() == 1;
}

/// Exact nonnegative square root, if r is a square in Q.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

/**
 * GaussRat: exact complex rational a + b·i with arbitrary-precision
 * rational components, the coefficient field Q(i).
 *
 * Components are kept in lowest terms with positive denominators
 * (mpq_class canonical form), so equality is componentwise.
 */
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
    GaussRat(Rational re) : re_(std::move(re)), im_(0) {}
    GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    /// re² + im², a nonnegative rational; zero only for zero.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }

    GaussRat inv() const {
        if (is_zero()) throw std::domain_error("GaussRat: division by zero");
        Rational n = norm();
        return GaussRat(re_ / n, -im_ / n);
    }

    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inv(); }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    /// Exact square root in Q(i) if one exists; the returned root w
    /// satisfies w² = *this (the other root is -w).
    std::optional<GaussRat> sqrt() const {
        if (is_zero()) return GaussRat();
        if (is_real()) {
            if (sgn(re_) > 0) {
                if (auto u = rational_sqrt(re_)) return GaussRat(*u);
            } else {
                if (auto v = rational_sqrt(-re_)) return GaussRat(Rational(0), *v);
            }
            // fall through: a real non-square may still split as (u+vi)² only
            // when it is a negative square, handled above
            return std::nullopt;
        }
        // (u+vi)² = a+bi:  u²-v² = a, 2uv = b;  |u+vi|² = sqrt(a²+b²) must be rational
        auto r = rational_sqrt(norm());
        if (!r) return std::nullopt;
        Rational half_sum = (re_ + *r) / 2;  // = u², nonnegative since r >= |a|
        auto u = rational_sqrt(half_sum);
        if (!u || sgn(*u) == 0) return std::nullopt;
        Rational v = im_ / (2 * (*u));
        GaussRat w(*u, v);
        if (w * w == *this) return w;
        return std::nullopt;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

private:
    Rational re_, im_;
};

}  // namespace qgauss
