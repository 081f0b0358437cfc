#pragma once

#include <stdexcept>
#include <vector>

#include "qgauss/qnum.hpp"

namespace qgauss {

/**
 * UniPoly: dense univariate polynomial with exact rational coefficients
 * (the variable is x, or z after the substitution z = q/(q²-q+1)).
 */
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(long n) {  // NOLINT: implicit by design
        if (n != 0) coeffs_.assign(1, Rational(n));
    }
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly var() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const {
        if (is_zero()) throw std::domain_error("UniPoly: degree of zero polynomial");
        return static_cast<long>(coeffs_.size()) - 1;
    }
    Rational coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(coeffs_.size())) return Rational(0);
        return coeffs_[k];
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
            r.coeffs_[k] = a.coeff(static_cast<long>(k)) + b.coeff(static_cast<long>(k));
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UniPoly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t p = 0; p < a.coeffs_.size(); ++p)
            for (std::size_t t = 0; t < b.coeffs_.size(); ++t)
                r.coeffs_[p + t] += a.coeffs_[p] * b.coeffs_[t];
        r.trim();
        return r;
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Exact substitution of a field value for the variable.
    RatFunc subst(const RatFunc& value) const {
        RatFunc acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * value + RatFunc(GaussRat(*it));
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------
// Chebyshev polynomials of second kind and the two variants
// ---------------------------------------------------------------------------

/// Classical second-kind polynomial: U_{n+1} = 2x·U_n − U_{n−1},
/// U_0 = 1, U_1 = 2x; degree n, leading coefficient 2^n.
inline UniPoly cheb_U(long n) {
    if (n < 0) throw std::invalid_argument("cheb_U: negative index");
    UniPoly two_x = UniPoly(2) * UniPoly::var();
    UniPoly prev(1);
    if (n == 0) return prev;
    UniPoly cur = two_x;
    for (long k = 2; k <= n; ++k) {
        UniPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

enum class ChebKind { I, II };

/// Diagonal entry d_k of the variant continuants: the 2x and 2 entries
/// alternate, with variant I starting at 2x and variant II at 2.
inline UniPoly cheb_variant_diag(ChebKind kind, long k) {
    bool two_x_position = (kind == ChebKind::I) ? (k % 2 == 1) : (k % 2 == 0);
    return two_x_position ? UniPoly(2) * UniPoly::var() : UniPoly(2);
}

/**
 * The modified second-kind polynomials: the recurrence multiplier
 * alternates between 2x and 2 along the index, phase fixed by the
 * initial values Ũ^I_1 = 2x and Ũ^II_1 = 2.  For even n the two
 * variants coincide.
 */
inline UniPoly cheb_variant(ChebKind kind, long n) {
    if (n < 0) throw std::invalid_argument("cheb_variant: negative index");
    UniPoly prev(1);
    if (n == 0) return prev;
    UniPoly cur = cheb_variant_diag(kind, 1);
    for (long k = 2; k <= n; ++k) {
        UniPoly next = cheb_variant_diag(kind, k) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/**
 * Expands the n×n tridiagonal determinant with unit off-diagonals and
 * the given diagonal by the standard cofactor recursion on principal
 * minors (D_k = d_k·D_{k−1} − D_{k−2}), and returns true iff for every
 * kind the determinant agrees with the recurrence-defined polynomial.
 */
inline bool continuant_check(long n) {
    if (n < 1) throw std::invalid_argument("continuant_check: size must be >= 1");
    auto determinant = [n](auto diag) {
        UniPoly before(1);  // empty minor
        UniPoly cur = diag(1);
        for (long k = 2; k <= n; ++k) {
            UniPoly next = diag(k) * cur - before;
            before = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    };
    UniPoly classical = determinant([](long) { return UniPoly(2) * UniPoly::var(); });
    if (classical != cheb_U(n)) return false;
    UniPoly variant1 = determinant([](long k) { return cheb_variant_diag(ChebKind::I, k); });
    if (variant1 != cheb_variant(ChebKind::I, n)) return false;
    UniPoly variant2 = determinant([](long k) { return cheb_variant_diag(ChebKind::II, k); });
    return variant2 == cheb_variant(ChebKind::II, n);
}

// ---------------------------------------------------------------------------
// The bridge to the q-Gaussian integers
// ---------------------------------------------------------------------------

/// z = q/(q²-q+1), the substitution that turns the real and imaginary
/// coefficients of the imaginary orbit into the Chebyshev variants.
inline RatFunc cheb_z() {
    RatFunc q = RatFunc::q();
    return q / (q * q - q + RatFunc(1));
}

/// Imaginary coefficient: [n·i]_q = A + I_n·[i]_q gives I_n.
inline RatFunc imag_coefficient(const RatFunc& value) { return decompose(value).second; }

/// Scaled real coefficient: R_n = -A·(q²-q+1)/(2(q-1)).
inline RatFunc real_coefficient_scaled(const RatFunc& value) {
    RatFunc q = RatFunc::q();
    RatFunc a = decompose(value).first;
    return -a * (q * q - q + RatFunc(1)) / (RatFunc(2) * (q - RatFunc(1)));
}

/**
 * Checks, as exact identities in Q(i)(s) after substituting
 * z = q/(q²-q+1): I_{n+1}(z) = Ũ^I_n(z) and
 * R_{n+2}(z) − R_n(z) = Ũ^II_n(z).
 *
 * The overload taking `orbit` expects orbit[k] = [k·i]_q for k ≤ n+2,
 * so sweeps can reuse one incrementally computed orbit.
 */
inline bool verify_cheb_relation(long n, const std::vector<RatFunc>& orbit) {
    if (n < 0) throw std::invalid_argument("verify_cheb_relation: negative index");
    RatFunc z = cheb_z();
    RatFunc i_next = imag_coefficient(orbit.at(n + 1));
    if (i_next != cheb_variant(ChebKind::I, n).subst(z)) return false;
    RatFunc r_far = real_coefficient_scaled(orbit.at(n + 2));
    RatFunc r_near = real_coefficient_scaled(orbit.at(n));
    return r_far - r_near == cheb_variant(ChebKind::II, n).subst(z);
}

inline bool verify_cheb_relation(long n) {
    if (n < 0) throw std::invalid_argument("verify_cheb_relation: negative index");
    return verify_cheb_relation(n, q_imag_orbit_values(n + 2, +1));
}

/// Recurrence of the imaginary coefficients at step n ≥ 1:
/// I_{n+1} = 2z·I_n − I_{n−1} for odd n, I_{n+1} = 2·I_n − I_{n−1} for even n.
inline bool verify_imag_recurrence(long n, const std::vector<RatFunc>& orbit) {
    if (n < 1) throw std::invalid_argument("verify_imag_recurrence: step must be >= 1");
    RatFunc z = cheb_z();
    RatFunc next = imag_coefficient(orbit.at(n + 1));
    RatFunc cur = imag_coefficient(orbit.at(n));
    RatFunc prev = imag_coefficient(orbit.at(n - 1));
    RatFunc mult = (n % 2 != 0) ? RatFunc(2) * z : RatFunc(2);
    return next == mult * cur - prev;
}

inline bool verify_imag_recurrence(long n) {
    return verify_imag_recurrence(n, q_imag_orbit_values(n + 1, +1));
}

/// Recurrence of the scaled real coefficients at step n ≥ 1; the odd
/// branch carries a unit inhomogeneity:
/// R_{n+1} = 2z·R_n − R_{n−1} + 1 for odd n, R_{n+1} = 2·R_n − R_{n−1} for even n.
inline bool verify_real_recurrence(long n, const std::vector<RatFunc>& orbit) {
    if (n < 1) throw std::invalid_argument("verify_real_recurrence: step must be >= 1");
    RatFunc z = cheb_z();
    RatFunc next = real_coefficient_scaled(orbit.at(n + 1));
    RatFunc cur = real_coefficient_scaled(orbit.at(n));
    RatFunc prev = real_coefficient_scaled(orbit.at(n - 1));
    if (n % 2 != 0) return next == RatFunc(2) * z * cur - prev + RatFunc(1);
    return next == RatFunc(2) * cur - prev;
}

inline bool verify_real_recurrence(long n) {
    return verify_real_recurrence(n, q_imag_orbit_values(n + 1, +1));
}

/// Rows of the coefficient triangle of the imaginary parts: row n holds
/// the coefficients of I_n as a polynomial in z, from the lowest nonzero
/// degree upward.  All entries are integers.
inline std::vector<std::vector<long>> coefficient_triangle(long rows) {
    std::vector<std::vector<long>> out;
    out.reserve(static_cast<std::size_t>(rows));
    for (long n = 1; n <= rows; ++n) {
        UniPoly p = cheb_variant(ChebKind::I, n - 1);  // = I_n in z
        std::vector<long> row;
        bool leading_zeros = true;
        for (const Rational& c : p.coeffs()) {
            if (leading_zeros && sgn(c) == 0) continue;
            leading_zeros = false;
            if (!rational_is_integer(c))
                throw std::logic_error("coefficient_triangle: non-integer coefficient");
            row.push_back(static_cast<long>(c.get_num().get_si()));
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace qgauss
