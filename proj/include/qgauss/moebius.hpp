#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qgauss/rat_func.hpp"

namespace qgauss {

/**
 * A point of the projective line over Q(i)(s): either a field element
 * or the distinguished point at infinity.  Linear-fractional maps send
 * poles to infinity instead of failing, so orbits stay traceable.
 */
class ProjValue {
public:
    ProjValue(RatFunc v) : value_(std::move(v)) {}  // NOLINT: implicit by design
    ProjValue(long n) : value_(RatFunc(n)) {}       // NOLINT

    static ProjValue infinity() { return ProjValue(); }

    bool is_infinity() const { return !value_.has_value(); }
    const RatFunc& value() const {
        if (!value_) throw std::domain_error("ProjValue: infinity has no field value");
        return *value_;
    }

    friend bool operator==(const ProjValue& a, const ProjValue& b) {
        if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
        return *a.value_ == *b.value_;
    }
    friend bool operator!=(const ProjValue& a, const ProjValue& b) { return !(a == b); }

private:
    ProjValue() = default;
    std::optional<RatFunc> value_;
};

/**
 * MoebiusOp: a projective 2×2 matrix over Q(i)(s) together with a flip
 * sign recording whether the operator reads its argument at q or q⁻¹.
 *
 * flip = -1 operators apply their matrix to X(q⁻¹); composition
 * multiplies flips and conjugates the inner matrix by s ↦ s⁻¹ when the
 * outer flip is -1.  Matrices are stored projectively: no determinant
 * normalization is attempted, and equality means "flips agree and the
 * matrices are proportional by a nonzero scalar".
 */
class MoebiusOp {
public:
    MoebiusOp(RatFunc a, RatFunc b, RatFunc c, RatFunc d, int flip = +1)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), flip_(flip) {
        if (flip != 1 && flip != -1) throw std::invalid_argument("MoebiusOp: flip must be +1 or -1");
        if (det().is_zero()) throw std::invalid_argument("MoebiusOp: singular matrix");
    }

    static MoebiusOp identity() { return MoebiusOp(1, 0, 0, 1, +1); }

    const RatFunc& a() const { return a_; }
    const RatFunc& b() const { return b_; }
    const RatFunc& c() const { return c_; }
    const RatFunc& d() const { return d_; }
    int flip() const { return flip_; }

    RatFunc det() const { return a_ * d_ - b_ * c_; }

    /// Applies the operator; a vanishing denominator maps to infinity,
    /// and infinity itself maps to a/c.
    ProjValue apply(const ProjValue& x) const {
        if (x.is_infinity()) {
            if (c_.is_zero()) return ProjValue::infinity();
            return ProjValue(a_ / c_);
        }
        RatFunc arg = (flip_ == -1) ? x.value().subst_q_inverse() : x.value();
        const SPoly one(1);
        if (a_.den() == one && b_.den() == one && c_.den() == one && d_.den() == one) {
            // polynomial entries: assemble the image as a single fraction
            SPoly num = a_.num() * arg.num() + b_.num() * arg.den();
            SPoly den = c_.num() * arg.num() + d_.num() * arg.den();
            if (den.is_zero()) return ProjValue::infinity();
            return ProjValue(RatFunc(std::move(num), std::move(den)));
        }
        RatFunc den = c_ * arg + d_;
        if (den.is_zero()) return ProjValue::infinity();
        return ProjValue((a_ * arg + b_) / den);
    }

    /// Applies to a finite argument expected to stay finite.
    RatFunc apply_finite(const RatFunc& x) const {
        ProjValue y = apply(ProjValue(x));
        if (y.is_infinity()) throw std::domain_error("MoebiusOp: image is the point at infinity");
        return y.value();
    }

    /// Entrywise s ↦ s⁻¹ on the matrix; the flip is unchanged.
    MoebiusOp entrywise_q_inverse() const {
        return MoebiusOp(a_.subst_q_inverse(), b_.subst_q_inverse(), c_.subst_q_inverse(),
                         d_.subst_q_inverse(), flip_);
    }

    friend MoebiusOp operator*(const MoebiusOp& A, const MoebiusOp& B) {
        const bool twist = (A.flip_ == -1);
        RatFunc ba = twist ? B.a_.subst_q_inverse() : B.a_;
        RatFunc bb = twist ? B.b_.subst_q_inverse() : B.b_;
        RatFunc bc = twist ? B.c_.subst_q_inverse() : B.c_;
        RatFunc bd = twist ? B.d_.subst_q_inverse() : B.d_;
        return MoebiusOp(A.a_ * ba + A.b_ * bc, A.a_ * bb + A.b_ * bd,
                         A.c_ * ba + A.d_ * bc, A.c_ * bb + A.d_ * bd, A.flip_ * B.flip_);
    }

    MoebiusOp inverse() const {
        if (flip_ == +1) return MoebiusOp(d_, -b_, -c_, a_, +1);
        // (M,-1)·(N,-1) = (M·σ(N),+1), so the inverse matrix is σ(M)⁻¹
        MoebiusOp sigma = entrywise_q_inverse();
        return MoebiusOp(sigma.d_, -sigma.b_, -sigma.c_, sigma.a_, -1);
    }

    MoebiusOp pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        MoebiusOp acc = identity();
        MoebiusOp base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    /// Projective equality: flips agree and matrices are proportional,
    /// decided by cross-multiplication of all entry pairs.
    bool proj_equal(const MoebiusOp& o) const {
        if (flip_ != o.flip_) return false;
        const std::array<const RatFunc*, 4> x{&a_, &b_, &c_, &d_};
        const std::array<const RatFunc*, 4> y{&o.a_, &o.b_, &o.c_, &o.d_};
        for (int p = 0; p < 4; ++p)
            for (int r = p + 1; r < 4; ++r)
                if ((*x[p]) * (*y[r]) != (*x[r]) * (*y[p])) return false;
        return true;
    }

    friend bool operator==(const MoebiusOp& A, const MoebiusOp& B) { return A.proj_equal(B); }
    friend bool operator!=(const MoebiusOp& A, const MoebiusOp& B) { return !A.proj_equal(B); }

    bool is_identity() const { return proj_equal(identity()); }

    /// Exact s = 1 specialization as a constant operator (same flip).
    MoebiusOp specialize_s1() const {
        return MoebiusOp(RatFunc(a_.eval_at_one()), RatFunc(b_.eval_at_one()),
                         RatFunc(c_.eval_at_one()), RatFunc(d_.eval_at_one()), flip_);
    }

private:
    RatFunc a_, b_, c_, d_;
    int flip_;
};

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

enum class Generator { T, S, U, L, U2 };

inline Generator generator_from_string(const std::string& name) {
    if (name == "T") return Generator::T;
    if (name == "S") return Generator::S;
    if (name == "U") return Generator::U;
    if (name == "L") return Generator::L;
    if (name == "U2") return Generator::U2;
    throw std::invalid_argument("unknown generator: " + name);
}

/// The q-deformed generators.  T, S and the double imaginary translation
/// U2 act on X(q) directly; U and L read their argument at q⁻¹.
inline MoebiusOp generator(Generator g) {
    const RatFunc q = RatFunc::q();
    const RatFunc s = RatFunc::s();
    const RatFunc i = RatFunc::i();
    switch (g) {
        case Generator::T:
            return MoebiusOp(q, 1, 0, 1, +1);
        case Generator::S:
            return MoebiusOp(0, -1, q, 0, +1);
        case Generator::U:
            return MoebiusOp(1, i * s, RatFunc(1) - q, q, -1);
        case Generator::L:
            return MoebiusOp(-1, 0, 0, q, -1);
        case Generator::U2: {
            RatFunc w = i * (s - s.inv());
            return MoebiusOp(RatFunc(1) + w, RatFunc(2) * i * s.inv(), 0, RatFunc(1) - w, +1);
        }
    }
    throw std::invalid_argument("unknown generator");
}

/// Classical (undeformed) generators: the s = 1 specialization.
inline MoebiusOp classical_generator(Generator g) {
    if (g == Generator::U2) return generator(Generator::U2).specialize_s1();
    return generator(g).specialize_s1();
}

// ---------------------------------------------------------------------------
// Fixed points
// ---------------------------------------------------------------------------

/**
 * Result of solving A(x) = x over Q(i)(s) for a flip = +1 operator:
 * the quadratic c·x² + (d−a)·x − b = 0, its roots when they exist in
 * the field, or the discriminant marked irreducible when its square
 * root does not.
 */
struct FixedPoints {
    enum class Kind {
        no_fixed_point,  // degenerate linear equation: fixed point only at infinity
        linear,          // c = 0: a single root of the linear equation
        double_root,     // vanishing discriminant
        pair,            // two distinct roots in Q(i)(s)
        irreducible      // discriminant is not a square in the working field
    };

    Kind kind;
    std::vector<RatFunc> roots;
    std::optional<RatFunc> discriminant;  // set for all quadratic cases
};

inline FixedPoints fixed_points(const MoebiusOp& A) {
    if (A.flip() == -1)
        throw std::invalid_argument(
            "fixed_points: unsupported for operators reading their argument at q^-1");
    if (A.is_identity()) throw std::invalid_argument("fixed_points: identity operator");

    const RatFunc& c = A.c();
    RatFunc lin = A.d() - A.a();
    if (c.is_zero()) {
        if (lin.is_zero()) return {FixedPoints::Kind::no_fixed_point, {}, std::nullopt};
        return {FixedPoints::Kind::linear, {A.b() / lin}, std::nullopt};
    }
    RatFunc disc = lin * lin + RatFunc(4) * A.b() * c;
    if (disc.is_zero()) {
        RatFunc root = (A.a() - A.d()) / (RatFunc(2) * c);
        return {FixedPoints::Kind::double_root, {root}, disc};
    }
    auto sq = sqrt_exact(disc);
    if (!sq) return {FixedPoints::Kind::irreducible, {}, disc};
    RatFunc half = (RatFunc(2) * c).inv();
    RatFunc base = A.a() - A.d();
    return {FixedPoints::Kind::pair, {(base + *sq) * half, (base - *sq) * half}, disc};
}

/// Numeric roots of the fixed-point quadratic at s = s0 (for fixed points
/// that live outside Q(i)(s), e.g. involving √3).
inline std::array<std::complex<double>, 2> numeric_fixed_points(const MoebiusOp& A,
                                                                const std::complex<double>& s0) {
    std::complex<double> c = A.c().eval(s0);
    std::complex<double> lin = (A.d() - A.a()).eval(s0);
    std::complex<double> b = A.b().eval(s0);
    if (std::abs(c) < kPoleTolerance) throw std::domain_error("numeric_fixed_points: linear case");
    std::complex<double> disc = std::sqrt(lin * lin + 4.0 * b * c);
    return {(-lin + disc) / (2.0 * c), (-lin - disc) / (2.0 * c)};
}

// ---------------------------------------------------------------------------
// The commutant of T_q and the uniqueness of the imaginary translation
// ---------------------------------------------------------------------------

enum class CommutantKind {
    triangular_two_parameter,  // flip +1: a, b free, c = 0, d = a-(q-1)b
    exceptional_one_parameter, // flip +1: multiples of [[1,(q-1)^-1],[1-q,-1]]
    flipped_one_parameter      // flip -1: a, b free, c = (1-q)a, d = qa
};

/**
 * Projective 2×2 matrix with a flip sign, without the invertibility
 * requirement a MoebiusOp carries.  The exceptional commutant matrix
 * is identically singular (it degenerates to the constant map onto the
 * fixed point of the translation), so it commutes with T_q as a matrix
 * but is not an element of the group of linear-fractional maps.
 */
struct ProjMatrix {
    RatFunc a, b, c, d;
    int flip = +1;

    static ProjMatrix from_op(const MoebiusOp& A) {
        return {A.a(), A.b(), A.c(), A.d(), A.flip()};
    }

    RatFunc det() const { return a * d - b * c; }

    /// Converts back to an operator; only valid when nonsingular.
    MoebiusOp to_op() const { return MoebiusOp(a, b, c, d, flip); }

    friend ProjMatrix operator*(const ProjMatrix& A, const ProjMatrix& B) {
        const bool twist = (A.flip == -1);
        RatFunc ba = twist ? B.a.subst_q_inverse() : B.a;
        RatFunc bb = twist ? B.b.subst_q_inverse() : B.b;
        RatFunc bc = twist ? B.c.subst_q_inverse() : B.c;
        RatFunc bd = twist ? B.d.subst_q_inverse() : B.d;
        return {A.a * ba + A.b * bc, A.a * bb + A.b * bd,
                A.c * ba + A.d * bc, A.c * bb + A.d * bd, A.flip * B.flip};
    }

    bool proportional_to(const ProjMatrix& o) const {
        if (flip != o.flip) return false;
        const std::array<const RatFunc*, 4> x{&a, &b, &c, &d};
        const std::array<const RatFunc*, 4> y{&o.a, &o.b, &o.c, &o.d};
        for (int p = 0; p < 4; ++p)
            for (int r = p + 1; r < 4; ++r)
                if ((*x[p]) * (*y[r]) != (*x[r]) * (*y[p])) return false;
        return true;
    }

    /// Pointwise matrix action where defined (meaningful even when singular).
    ProjValue apply(const ProjValue& x) const {
        if (x.is_infinity()) {
            if (c.is_zero()) return ProjValue::infinity();
            return ProjValue(a / c);
        }
        RatFunc arg = (flip == -1) ? x.value().subst_q_inverse() : x.value();
        RatFunc den = c * arg + d;
        if (den.is_zero()) return ProjValue::infinity();
        return ProjValue((a * arg + b) / den);
    }
};

struct CommutantFamily {
    CommutantKind kind;
    ProjMatrix representative;
    std::string constraint;
};

namespace detail {

inline void require_commutes_with_t(const ProjMatrix& A, const char* what) {
    ProjMatrix T = ProjMatrix::from_op(generator(Generator::T));
    if (!(T * A).proportional_to(A * T))
        throw std::logic_error(std::string(what) + ": does not commute with the translation");
}

}  // namespace detail

/// Member of the flip = +1 triangular family: [[a, b], [0, a-(q-1)b]].
inline MoebiusOp commutant_triangular(const RatFunc& a, const RatFunc& b) {
    RatFunc d = a - (RatFunc::q() - RatFunc(1)) * b;
    MoebiusOp A(a, b, 0, d, +1);
    detail::require_commutes_with_t(ProjMatrix::from_op(A), "commutant_triangular");
    return A;
}

/// The exceptional flip = +1 commutant representative [[1,(q-1)^-1],[1-q,-1]],
/// a singular matrix: it is no Moebius transformation, hence a ProjMatrix.
inline ProjMatrix commutant_exceptional() {
    RatFunc q = RatFunc::q();
    ProjMatrix A{RatFunc(1), (q - RatFunc(1)).inv(), RatFunc(1) - q, RatFunc(-1), +1};
    detail::require_commutes_with_t(A, "commutant_exceptional");
    return A;
}

/// Member of the flip = -1 family: [[a, b], [(1-q)a, qa]].
inline MoebiusOp commutant_flipped(const RatFunc& a, const RatFunc& b) {
    RatFunc q = RatFunc::q();
    MoebiusOp A(a, b, (RatFunc(1) - q) * a, q * a, -1);
    detail::require_commutes_with_t(ProjMatrix::from_op(A), "commutant_flipped");
    return A;
}

/// The families of operators commuting with T_q, by flip sign; every
/// representative is verified to commute on construction.
inline std::vector<CommutantFamily> tq_commutant(int flip) {
    if (flip == +1) {
        return {
            {CommutantKind::triangular_two_parameter,
             ProjMatrix::from_op(commutant_triangular(RatFunc::q(), RatFunc(1))),
             "a, b free; c = 0; d = a - (q-1)b"},
            {CommutantKind::exceptional_one_parameter, commutant_exceptional(),
             "scalar multiples of [[1, (q-1)^-1], [1-q, -1]]"},
        };
    }
    if (flip == -1) {
        return {
            {CommutantKind::flipped_one_parameter,
             ProjMatrix::from_op(commutant_flipped(RatFunc(1), RatFunc::i() * RatFunc::s())),
             "a, b free; c = (1-q)a; d = qa"},
        };
    }
    throw std::invalid_argument("tq_commutant: flip must be +1 or -1");
}

/// The two boundary behaviours singling out an imaginary translation:
/// sending [-i]_q directly to [i]_q, or sending [-i]_q to 0 and 0 to [i]_q.
enum class Boundary { maps_minus_i_to_i, two_point };

/// [i]_q = i·s⁻¹, the fixed point of S_q on the upper half plane.
inline RatFunc q_imaginary_unit() { return RatFunc::i() / RatFunc::s(); }

/**
 * Intersects the commutant of T_q with the boundary constraints by exact
 * linear elimination and returns the unique projective solution, if any.
 *
 *  (+1, maps_minus_i_to_i) → the double translation U2,
 *  (+1, two_point)         → no solution,
 *  (-1, two_point)         → the flip-twisted translation U.
 */
inline std::optional<MoebiusOp> unique_imaginary_translation(int flip, Boundary boundary) {
    const RatFunc q = RatFunc::q();
    const RatFunc s = RatFunc::s();
    const RatFunc i = RatFunc::i();
    const RatFunc plus_i = q_imaginary_unit();
    const RatFunc minus_i = -plus_i;

    auto satisfies_boundary = [&](const ProjMatrix& A) {
        if (boundary == Boundary::maps_minus_i_to_i)
            return A.apply(ProjValue(minus_i)) == ProjValue(plus_i);
        return A.apply(ProjValue(minus_i)) == ProjValue(RatFunc(0)) &&
               A.apply(ProjValue(RatFunc(0))) == ProjValue(plus_i);
    };

    if (flip == +1) {
        std::optional<MoebiusOp> found;
        if (boundary == Boundary::maps_minus_i_to_i) {
            // triangular family: A(-i/s) = i/s  ⟺  b(s + i(q-1)) = 2ia.
            // Gauge b to the natural 2i/s, then a is forced.
            RatFunc b = RatFunc(2) * i / s;
            RatFunc a = b * (s + i * (q - RatFunc(1))) / (RatFunc(2) * i);
            found = commutant_triangular(a, b);
        } else {
            // triangular family: A(-i/s) = 0 forces b = (i/s)a, and
            // A(0) = i/s forces b = (i/s)d; eliminating d = a-(q-1)b
            // leaves (q-1)b = 0, so only the zero matrix remains and
            // the family contributes no solution.
        }
        // the exceptional family never satisfies either boundary
        if (satisfies_boundary(commutant_exceptional()))
            throw std::logic_error("unique_imaginary_translation: exceptional family unexpectedly fits");
        if (found && !satisfies_boundary(ProjMatrix::from_op(*found)))
            throw std::logic_error("unique_imaginary_translation: candidate fails its boundary");
        return found;
    }

    if (flip != -1) throw std::invalid_argument("unique_imaginary_translation: bad flip");

    // flip = -1 family [[a, b], [(1-q)a, qa]] applied to x reads σ(x).
    MoebiusOp found = [&]() {
        if (boundary == Boundary::two_point) {
            // A(-i/s) = 0 forces b = i·s·a; A(0) = b/(qa) = i/s gives the
            // same equation, so the solution ray is one-dimensional.
            RatFunc a(1);
            RatFunc b = i * s * a;
            return commutant_flipped(a, b);
        }
        // A(-i/s) = i/s forces b = (2is + 1 - q)a.
        RatFunc a(1);
        RatFunc b = (RatFunc(2) * i * s + RatFunc(1) - q) * a;
        return commutant_flipped(a, b);
    }();
    if (!satisfies_boundary(ProjMatrix::from_op(found)))
        throw std::logic_error("unique_imaginary_translation: candidate fails its boundary");
    return found;
}

}  // namespace qgauss
