#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>

#include "qgauss/s_poly.hpp"

namespace qgauss {

/// Numeric evaluation hit a (near-)vanishing denominator.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(double den_abs)
        : std::runtime_error("pole: |denominator| = " + std::to_string(den_abs)),
          den_abs_(den_abs) {}
    double denominator_abs() const { return den_abs_; }

private:
    double den_abs_;
};

/// Tolerance under which a numeric denominator counts as a pole.
inline constexpr double kPoleTolerance = 1e-12;

/**
 * RatFunc: reduced fraction of two Laurent polynomials — the rational
 * function field Q(i)(s) in which all q-numbers live.
 *
 * Canonical form: the denominator is an ordinary polynomial with
 * nonzero constant term and leading coefficient 1; the numerator and
 * denominator are coprime over Q(i)[s], with the extracted power of s
 * carried by the numerator. Equality is therefore componentwise.
 */
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    RatFunc(GaussRat c) : num_(std::move(c)), den_(1) {}
    RatFunc(SPoly num) : num_(std::move(num)), den_(1) {}

    RatFunc(SPoly num, SPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        normalize();
    }

    static RatFunc s() { return RatFunc(SPoly::var()); }
    static RatFunc q() { return RatFunc(SPoly::q()); }
    static RatFunc i() { return RatFunc(GaussRat::i()); }

    /// Builds num/den when the caller guarantees the two are coprime up
    /// to monomials (e.g. convergents of matrix products with monomial
    /// determinant); only the shift and scale normalization runs.
    static RatFunc from_reduced(SPoly num, SPoly den) {
        if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        return make_coprime(std::move(num), std::move(den));
    }

    const SPoly& num() const { return num_; }
    const SPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    /// Value as a GaussRat; only valid for constants.
    GaussRat constant_value() const {
        if (!is_constant()) throw std::domain_error("RatFunc: not a constant");
        return num_.coeff(0);  // den is monic constant 1 in canonical form
    }

    RatFunc operator-() const { return RatFunc(-num_, den_, already_canonical{}); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    RatFunc pow(long k) const {
        if (k < 0) return inv().pow(-k);
        if (k == 0) return RatFunc(1);
        // powers of a reduced fraction stay reduced; skip the gcd
        SPoly np(1), dp(1), nb = num_, db = den_;
        for (long e = k;;) {
            if (e & 1) {
                np *= nb;
                dp *= db;
            }
            e >>= 1;
            if (e == 0) break;
            nb *= nb;
            db *= db;
        }
        return make_coprime(std::move(np), std::move(dp));
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// q ↦ q⁻¹, realized as s ↦ s⁻¹; an involutive field automorphism.
    RatFunc subst_q_inverse() const {
        return make_coprime(num_.subst_s_inverse(), den_.subst_s_inverse());
    }

    /// Coefficient conjugation a+bi ↦ a−bi; complex conjugation for real q.
    RatFunc conj_i() const {
        return RatFunc(num_.conj_i(), den_.conj_i(), already_canonical{});
    }

    /// s ↦ -s; the other branch of q^(1/2).
    RatFunc subst_s_negate() const {
        return make_coprime(num_.subst_s_negate(), den_.subst_s_negate());
    }

    /// Exact evaluation at s = 1 (the classical limit q = 1).
    GaussRat eval_at_one() const {
        GaussRat d = den_.eval_at_one();
        if (d.is_zero()) throw std::domain_error("RatFunc: denominator vanishes at s = 1");
        return num_.eval_at_one() / d;
    }

    /// Floating evaluation by Horner on numerator and denominator.
    std::complex<double> eval(const std::complex<double>& s0) const {
        std::complex<double> d = den_.eval(s0);
        if (std::abs(d) < kPoleTolerance) throw PoleError(std::abs(d));
        if (!num_.is_zero() && num_.lowest_exp() < 0 && std::abs(s0) < kPoleTolerance)
            throw PoleError(std::abs(s0));  // negative s-power, pole at the origin
        return num_.eval(s0) / d;
    }

private:
    struct already_canonical {};
    RatFunc(SPoly num, SPoly den, already_canonical) : num_(std::move(num)), den_(std::move(den)) {}

    /// Canonicalization without the gcd step; for images under field
    /// automorphisms, whose numerator and denominator stay coprime.
    static RatFunc make_coprime(SPoly num, SPoly den) {
        RatFunc r(std::move(num), std::move(den), already_canonical{});
        r.normalize_shift_and_scale();
        return r;
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = SPoly(1);
            return;
        }
        long vn = num_.lowest_exp();
        long vd = den_.lowest_exp();
        SPoly n = num_.shifted(-vn);
        SPoly d = den_.shifted(-vd);
        SPoly g = detail::poly_gcd(n, d);
        if (!g.is_constant()) {
            n = detail::poly_div_exact(n, g);
            d = detail::poly_div_exact(d, g);
        }
        GaussRat lc_inv = d.leading_coeff().inv();
        num_ = (n * lc_inv).shifted(vn - vd);
        den_ = d * lc_inv;
    }

    void normalize_shift_and_scale() {
        if (num_.is_zero()) {
            den_ = SPoly(1);
            return;
        }
        long vd = den_.lowest_exp();
        if (vd != 0) {
            den_ = den_.shifted(-vd);
            num_ = num_.shifted(-vd);
        }
        GaussRat lc = den_.leading_coeff();
        if (!lc.is_one()) {
            GaussRat lc_inv = lc.inv();
            num_ = num_ * lc_inv;
            den_ = den_ * lc_inv;
        }
    }

    SPoly num_, den_;
};

/// Exact square root in Q(i)(s), when the argument is a perfect square there.
inline std::optional<RatFunc> sqrt_exact(const RatFunc& f) {
    if (f.is_zero()) return RatFunc(0);
    long shift = f.num().lowest_exp();
    if (shift % 2 != 0) return std::nullopt;
    SPoly n = f.num().shifted(-shift);
    GaussRat lc = n.leading_coeff();
    auto lc_root = lc.sqrt();
    if (!lc_root) return std::nullopt;
    auto n_root = detail::poly_sqrt_monic(n * lc.inv());
    if (!n_root) return std::nullopt;
    auto d_root = detail::poly_sqrt_monic(f.den());
    if (!d_root) return std::nullopt;
    RatFunc root(((*n_root) * (*lc_root)).shifted(shift / 2), *d_root);
    return root;
}

}  // namespace qgauss
