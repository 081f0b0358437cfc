#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qgauss/gauss_rational.hpp"

namespace qgauss {

/**
 * SPoly: Laurent polynomial in the formal variable s with GaussRat
 * coefficients — the ring Q(i)[s, s⁻¹].
 *
 * Stored as exponent → coefficient with no zero coefficients; the zero
 * polynomial is the empty map. s denotes the principal branch +√q, so
 * q itself is s².
 */
class SPoly {
public:
    SPoly() = default;
    SPoly(long n) { set_coeff(0, GaussRat(n)); }  // NOLINT: implicit by design
    SPoly(GaussRat c) { set_coeff(0, std::move(c)); }

    static SPoly monomial(GaussRat c, long exp) {
        SPoly p;
        p.set_coeff(exp, std::move(c));
        return p;
    }
    static SPoly var() { return monomial(GaussRat(1), 1); }  // s
    static SPoly q() { return monomial(GaussRat(1), 2); }    // q = s²

    bool is_zero() const { return coeffs_.empty(); }

    bool is_constant() const {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
    }

    long degree() const {
        if (is_zero()) throw std::domain_error("SPoly: degree of zero polynomial");
        return coeffs_.rbegin()->first;
    }
    long lowest_exp() const {
        if (is_zero()) throw std::domain_error("SPoly: lowest exponent of zero polynomial");
        return coeffs_.begin()->first;
    }

    GaussRat coeff(long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? GaussRat() : it->second;
    }
    const GaussRat& leading_coeff() const {
        if (is_zero()) throw std::domain_error("SPoly: leading coefficient of zero polynomial");
        return coeffs_.rbegin()->second;
    }

    const std::map<long, GaussRat>& terms() const { return coeffs_; }

    void set_coeff(long exp, GaussRat c) {
        if (c.is_zero())
            coeffs_.erase(exp);
        else
            coeffs_[exp] = std::move(c);
    }
    void add_to_coeff(long exp, const GaussRat& c) {
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) {
            if (!c.is_zero()) coeffs_.emplace(exp, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    SPoly operator-() const {
        SPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }

    friend SPoly operator+(const SPoly& a, const SPoly& b) {
        SPoly r = a;
        for (const auto& [e, c] : b.coeffs_) r.add_to_coeff(e, c);
        return r;
    }
    friend SPoly operator-(const SPoly& a, const SPoly& b) {
        SPoly r = a;
        for (const auto& [e, c] : b.coeffs_) r.add_to_coeff(e, -c);
        return r;
    }
    friend SPoly operator*(const SPoly& a, const SPoly& b) {
        SPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_to_coeff(ea + eb, ca * cb);
        return r;
    }
    SPoly& operator+=(const SPoly& o) { return *this = *this + o; }
    SPoly& operator-=(const SPoly& o) { return *this = *this - o; }
    SPoly& operator*=(const SPoly& o) { return *this = *this * o; }

    SPoly operator*(const GaussRat& c) const {
        if (c.is_zero()) return {};
        SPoly r;
        for (const auto& [e, cc] : coeffs_) r.coeffs_.emplace(e, cc * c);
        return r;
    }

    friend bool operator==(const SPoly& a, const SPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const SPoly& a, const SPoly& b) { return !(a == b); }

    /// Multiplies by s^k.
    SPoly shifted(long k) const {
        SPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
        return r;
    }

    /// s ↦ s⁻¹ (realizes q ↦ q⁻¹ on even parts).
    SPoly subst_s_inverse() const {
        SPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
        return r;
    }

    /// s ↦ -s.
    SPoly subst_s_negate() const {
        SPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, (e % 2 == 0) ? c : -c);
        return r;
    }

    /// Conjugates every coefficient; fixes s.
    SPoly conj_i() const {
        SPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, c.conj());
        return r;
    }

    bool has_real_coefficients() const {
        for (const auto& [e, c] : coeffs_)
            if (!c.is_real()) return false;
        return true;
    }

    /// True when every exponent is even, i.e. the value is a polynomial in q.
    bool is_even() const {
        for (const auto& [e, c] : coeffs_)
            if (e % 2 != 0) return false;
        return true;
    }

    SPoly derivative() const {
        SPoly r;
        for (const auto& [e, c] : coeffs_)
            if (e != 0) r.coeffs_.emplace(e - 1, c * GaussRat(e));
        return r;
    }

    GaussRat eval_at_one() const {
        GaussRat acc;
        for (const auto& [e, c] : coeffs_) acc += c;
        return acc;
    }

    std::complex<double> eval(const std::complex<double>& s0) const {
        if (is_zero()) return {0.0, 0.0};
        // Horner on the ordinary part, then the Laurent shift
        long lo = lowest_exp();
        long hi = degree();
        std::complex<double> acc{0.0, 0.0};
        for (long e = hi; e >= lo; --e) acc = acc * s0 + coeff(e).to_complex();
        if (lo == 0) return acc;
        std::complex<double> shift{1.0, 0.0};
        for (long k = 0; k < (lo < 0 ? -lo : lo); ++k) shift *= s0;
        return lo > 0 ? acc * shift : acc / shift;
    }

private:
    std::map<long, GaussRat> coeffs_;
};

inline SPoly operator*(const GaussRat& c, const SPoly& p) { return p * c; }

namespace detail {

/// Division with remainder for ordinary polynomials (no negative exponents).
inline std::pair<SPoly, SPoly> poly_divmod(const SPoly& a, const SPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    if (!a.is_zero() && a.lowest_exp() < 0) throw std::invalid_argument("poly_divmod: Laurent dividend");
    if (b.lowest_exp() < 0) throw std::invalid_argument("poly_divmod: Laurent divisor");
    SPoly quot, rem = a;
    const long db = b.degree();
    const GaussRat lb_inv = b.leading_coeff().inv();
    while (!rem.is_zero() && rem.degree() >= db) {
        GaussRat f = rem.leading_coeff() * lb_inv;
        long shift = rem.degree() - db;
        quot.add_to_coeff(shift, f);
        rem -= b.shifted(shift) * f;
    }
    return {quot, rem};
}

inline SPoly poly_div_exact(const SPoly& a, const SPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("poly_div_exact: not divisible");
    return q;
}

/// Monic gcd of ordinary polynomials over Q(i); gcd(0,0) = 0.
inline SPoly poly_gcd(SPoly a, SPoly b) {
    while (!b.is_zero()) {
        // keep remainders monic so coefficient growth stays tame
        b = b * b.leading_coeff().inv();
        SPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * a.leading_coeff().inv();
}

/// Yun square-free decomposition of a monic ordinary polynomial:
/// p = Π aₖ^k with the aₖ monic, square-free and pairwise coprime.
inline std::vector<std::pair<SPoly, long>> squarefree_decomposition(const SPoly& p) {
    std::vector<std::pair<SPoly, long>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    SPoly g = poly_gcd(p, p.derivative());
    SPoly c = poly_div_exact(p, g);
    SPoly d = poly_div_exact(p.derivative(), g) - c.derivative();
    long k = 1;
    while (!c.is_constant()) {
        SPoly a = poly_gcd(c, d);
        if (!a.is_constant()) out.emplace_back(a, k);
        c = poly_div_exact(c, a);
        d = poly_div_exact(d, a) - c.derivative();
        ++k;
    }
    return out;
}

/// Exact square root of a monic ordinary polynomial, if it is a perfect square.
inline std::optional<SPoly> poly_sqrt_monic(const SPoly& p) {
    if (p.is_zero()) return SPoly();
    if (p.degree() == 0) return SPoly(1);
    if (p.degree() % 2 != 0) return std::nullopt;
    SPoly root(1);
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        if (mult % 2 != 0) return std::nullopt;
        for (long j = 0; j < mult / 2; ++j) root *= factor;
    }
    // multiplicities even is sufficient: p monic => unit part is 1
    SPoly check = root * root;
    if (check != p) return std::nullopt;
    return root;
}

}  // namespace detail
}  // namespace qgauss
