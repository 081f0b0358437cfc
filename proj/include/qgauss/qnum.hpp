#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgauss/moebius.hpp"

namespace qgauss {

/// A value failed to split as A(q) + B(q)·[i]_q.
class DecomposeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * QPoly: Laurent polynomial in the formal parameter Q with rational
 * coefficients — the closed-form skin of the imaginary q-integers.
 */
class QPoly {
public:
    QPoly() = default;
    QPoly(long n) { set_coeff(0, Rational(n)); }  // NOLINT: implicit by design

    static QPoly monomial(Rational c, long exp) {
        QPoly p;
        p.set_coeff(exp, std::move(c));
        return p;
    }
    static QPoly var() { return monomial(Rational(1), 1); }

    /// Euler integer in Q: (1-Q^n)/(1-Q) as an exact Laurent polynomial.
    static QPoly euler(long n) {
        QPoly p;
        if (n >= 0)
            for (long j = 0; j < n; ++j) p.set_coeff(j, Rational(1));
        else
            for (long j = n; j < 0; ++j) p.set_coeff(j, Rational(-1));
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<long, Rational>& terms() const { return coeffs_; }
    Rational coeff(long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void set_coeff(long exp, Rational c) {
        if (sgn(c) == 0)
            coeffs_.erase(exp);
        else
            coeffs_[exp] = std::move(c);
    }
    void add_to_coeff(long exp, const Rational& c) {
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) {
            if (sgn(c) != 0) coeffs_.emplace(exp, c);
            return;
        }
        it->second += c;
        if (sgn(it->second) == 0) coeffs_.erase(it);
    }

    QPoly operator-() const {
        QPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }
    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        QPoly r = a;
        for (const auto& [e, c] : b.coeffs_) r.add_to_coeff(e, c);
        return r;
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        QPoly r = a;
        for (const auto& [e, c] : b.coeffs_) r.add_to_coeff(e, -c);
        return r;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_to_coeff(ea + eb, ca * cb);
        return r;
    }
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Q ↦ Q⁻¹ (exponent negation).
    QPoly subst_q_inverse() const {
        QPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
        return r;
    }

    /// Exact substitution of a field value for Q.  Denominators are
    /// cleared first so the whole sum needs a single normalization.
    RatFunc subst(const RatFunc& value) const {
        if (coeffs_.empty()) return RatFunc(0);
        long lo = coeffs_.begin()->first;
        long hi = coeffs_.rbegin()->first;
        if (value.is_zero()) {
            if (lo < 0) throw std::domain_error("QPoly::subst: negative power of zero");
            return RatFunc(GaussRat(coeff(0)));
        }
        const SPoly& n = value.num();
        const SPoly& d = value.den();
        long span = hi - lo;
        std::vector<SPoly> npow(span + 1), dpow(span + 1);
        npow[0] = SPoly(1);
        dpow[0] = SPoly(1);
        for (long j = 1; j <= span; ++j) {
            npow[j] = npow[j - 1] * n;
            dpow[j] = dpow[j - 1] * d;
        }
        SPoly sum;
        for (const auto& [k, c] : coeffs_) sum += npow[k - lo] * dpow[hi - k] * GaussRat(c);
        // P(value) = sum · n^lo / d^hi
        SPoly extra_num(1), extra_den(1);
        for (long j = 0; j < std::abs(lo); ++j) (lo >= 0 ? extra_num : extra_den) *= n;
        for (long j = 0; j < std::abs(hi); ++j) (hi >= 0 ? extra_den : extra_num) *= d;
        return RatFunc(sum * extra_num, extra_den);
    }

private:
    std::map<long, Rational> coeffs_;
};

// ---------------------------------------------------------------------------
// Euler q-integers and q-rationals
// ---------------------------------------------------------------------------

/// [n]_q = (1-q^n)/(1-q), a Laurent polynomial in q = s².
inline RatFunc euler_q_int(long n) {
    SPoly p;
    if (n >= 0)
        for (long j = 0; j < n; ++j) p.add_to_coeff(2 * j, GaussRat(1));
    else
        for (long j = n; j < 0; ++j) p.add_to_coeff(2 * j, GaussRat(-1));
    return RatFunc(p);
}

namespace detail {

/// Numerator/denominator pair of [p/r]_q along the Euclidean descent.
/// Every step is a matrix with monomial determinant applied to (0, 1),
/// so the pair stays coprime up to a power of s and no gcd is needed.
inline std::pair<SPoly, SPoly> q_rational_parts(long p, long r) {
    if (p == 0) return {SPoly(), SPoly(1)};
    const SPoly q = SPoly::q();
    if (p >= r) {  // [x]_q = q[x-1]_q + 1
        auto [n, d] = q_rational_parts(p - r, r);
        return {q * n + d, d};
    }
    if (p <= -r) {  // [x]_q = ([x+1]_q - 1)/q
        auto [n, d] = q_rational_parts(p + r, r);
        return {n - d, q * d};
    }
    // 0 < |p| < r: [x]_q = -1/(q[-1/x]_q)
    long np = (p > 0) ? -r : r;
    long nr = (p > 0) ? p : -p;
    auto [n, d] = q_rational_parts(np, nr);
    return {-d, q * n};
}

}  // namespace detail

/**
 * [p/r]_q by Euclidean descent on the two defining recurrences:
 * [x+1]_q = q[x]_q + 1 and [-1/x]_q = -1/(q[x]_q), with [0]_q = 0.
 * The fraction is reduced first; r = 0 is an error.
 */
inline RatFunc q_rational(long p, long r) {
    if (r == 0) throw std::invalid_argument("q_rational: zero denominator");
    if (r < 0) {
        p = -p;
        r = -r;
    }
    long g = std::gcd(p < 0 ? -p : p, r);
    if (g > 1) {
        p /= g;
        r /= g;
    }
    auto [num, den] = detail::q_rational_parts(p, r);
    return RatFunc::from_reduced(std::move(num), std::move(den));
}

// ---------------------------------------------------------------------------
// q-deformed Gaussian integers
// ---------------------------------------------------------------------------

/**
 * GaussianQInt: the q-deformation of m + n·i, defined as the orbit
 * value T_q^m U_q^n (0); specializes to m + n·i at s = 1.
 */
struct GaussianQInt {
    long m = 0;
    long n = 0;
    RatFunc value;
};

/// Values [k·i]_q for k = 0..n_max (direction = +1) or 0..-n_max
/// (direction = -1), by iterating the imaginary translation; the bulk
/// accessor for sweeps, which would otherwise recompute orbits per n.
inline std::vector<RatFunc> q_imag_orbit_values(long n_max, int direction) {
    std::vector<RatFunc> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    out.emplace_back(0);
    MoebiusOp step =
        direction >= 0 ? generator(Generator::U) : generator(Generator::U).inverse();
    for (long k = 1; k <= n_max; ++k) out.push_back(step.apply_finite(out.back()));
    return out;
}

/// Applies the real translation m times: x ↦ q^m·x + [m]_q.
inline RatFunc translate_real(const RatFunc& x, long m) {
    return RatFunc::q().pow(m) * x + euler_q_int(m);
}

inline GaussianQInt q_gaussian_orbit(long m, long n) {
    long absn = n < 0 ? -n : n;
    RatFunc imag = q_imag_orbit_values(absn, n < 0 ? -1 : +1).back();
    return {m, n, translate_real(imag, m)};
}

// ---------------------------------------------------------------------------
// The parameter Q and the closed form
// ---------------------------------------------------------------------------

/// Q = 2i·s(q-1)/(q²-q+1) - (q²-3q+1)/(q²-q+1); lies on the unit circle
/// for real q and turns the imaginary orbit into Laurent polynomials.
inline RatFunc Q_param() {
    const RatFunc q = RatFunc::q();
    const RatFunc den = q * q - q + RatFunc(1);
    RatFunc num = RatFunc(2) * RatFunc::i() * RatFunc::s() * (q - RatFunc(1)) -
                  (q * q - RatFunc(3) * q + RatFunc(1));
    return num / den;
}

/**
 * The Laurent polynomial P_n with [n·i]_q = P_n(Q)·[i]_q:
 * [2]_Q·[n']_Q for even n = 2n', and [2]_Q·[n']_Q − Q^{n'} for odd
 * n = 2n'−1.  The division behind [n']_Q is exact, so the result stays
 * a Laurent polynomial.
 */
inline QPoly q_rep(long n) {
    QPoly two = QPoly(1) + QPoly::var();  // [2]_Q = 1 + Q
    if (n % 2 == 0) return two * QPoly::euler(n / 2);
    long half = (n + 1) / 2;
    return two * QPoly::euler(half) - QPoly::monomial(Rational(1), half);
}

/// Closed form of the orbit value: substitutes Q into q_rep, multiplies
/// by [i]_q and applies the real translation.
inline RatFunc q_gaussian_closed(long m, long n) {
    RatFunc imag = q_rep(n).subst(Q_param()) * q_imaginary_unit();
    return translate_real(imag, m);
}

// ---------------------------------------------------------------------------
// Real/imaginary decomposition and the conjugation symmetry
// ---------------------------------------------------------------------------

/**
 * Splits x = A(q) + B(q)·[i]_q with A, B rational functions of q with
 * rational coefficients, and returns (A, B).  Throws DecomposeError,
 * naming the offending monomial, when x has no such shape.
 *
 * The denominator is first made real and even by multiplying with its
 * coefficient conjugate and its s ↦ -s image; the numerator must then
 * split into real coefficients on even s-exponents (giving A) and
 * purely imaginary ones on odd s-exponents (giving B).
 */
inline std::pair<RatFunc, RatFunc> decompose(const RatFunc& x) {
    if (x.is_zero()) return {RatFunc(0), RatFunc(0)};
    SPoly num = x.num();
    SPoly den1 = x.den();
    if (!den1.has_real_coefficients()) {  // make the denominator real
        SPoly conj = den1.conj_i();
        den1 *= conj;
        num *= conj;
    }
    SPoly den2 = den1;
    if (!den2.is_even()) {  // ... and even, i.e. a polynomial in q
        SPoly mirror = den1.subst_s_negate();
        den2 *= mirror;
        num *= mirror;
    }

    SPoly a_num, b_num;
    for (const auto& [e, c] : num.terms()) {
        if (e % 2 == 0) {
            if (sgn(c.im()) != 0)
                throw DecomposeError("decompose: complex coefficient at even monomial s^" +
                                     std::to_string(e));
            a_num.set_coeff(e, c);
        } else {
            if (sgn(c.re()) != 0)
                throw DecomposeError("decompose: non-imaginary coefficient at odd monomial s^" +
                                     std::to_string(e));
            // c·s^e = (im·s^{e+1})·(i·s⁻¹)
            b_num.set_coeff(e + 1, GaussRat(c.im()));
        }
    }
    RatFunc a(a_num, den2);
    RatFunc b(b_num, den2);
    if (a + b * q_imaginary_unit() != x)
        throw std::logic_error("decompose: reassembly failed");
    return {a, b};
}

/**
 * The conjugation symmetry of the imaginary orbit: [-n·i]_q equals the
 * coefficient conjugate of [n·i]_q, and the closed-form polynomials
 * satisfy P_{-n}(Q) = -P_n(Q⁻¹).  Both are checked exactly.
 */
inline bool check_conjugation(long n) {
    RatFunc plus = q_gaussian_orbit(0, n).value;
    RatFunc minus = q_gaussian_orbit(0, -n).value;
    if (minus != plus.conj_i()) return false;
    return q_rep(-n) == -q_rep(n).subst_q_inverse();
}

}  // namespace qgauss
