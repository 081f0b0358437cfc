#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qgauss/chebyshev.hpp"
#include "qgauss/picard.hpp"

namespace qgauss {

/**
 * One entry of a verification report.  `pass` already folds in the
 * expectation: a check that asserts a failure (the missing deformed
 * relation) is green exactly when the failure occurs.
 */
struct VerifyCheck {
    std::string suite;
    std::string id;      // stable machine-readable identifier
    std::string detail;  // the identity or property being checked
    bool pass;
};

namespace detail {

inline void add(std::vector<VerifyCheck>& out, std::string suite, std::string id,
                std::string detail_text, bool pass) {
    out.push_back({std::move(suite), std::move(id), std::move(detail_text), pass});
}

}  // namespace detail

/// Classical and deformed group relations, the missing relation, the
/// unit-deviation normal form of (USL)^3 and the stability of N.
inline std::vector<VerifyCheck> verify_relations(std::uint64_t seed = 1) {
    std::vector<VerifyCheck> out;
    for (bool deformed : {false, true}) {
        std::string tag = deformed ? "deformed" : "classical";
        for (const auto& r : relation_suite(deformed)) {
            std::string expectation = r.expected_to_hold ? "acts as the identity"
                                                         : "must NOT act as the identity";
            detail::add(out, "relations", tag + ":" + r.relation, expectation,
                        r.holds == r.expected_to_hold);
        }
    }
    MoebiusOp usl = word_eval(GenWord::parse("U S L"), true);
    detail::add(out, "relations", "deformed:(USL)^2-not-identity",
                "the squared word differs from the identity", !usl.pow(2).is_identity());
    detail::add(out, "relations", "usl-cubed-normal-form",
                "closed forms of USL, its inverse, and the unit-deviation form of the cube",
                usl_cubed_check());
    detail::add(out, "relations", "n-membership:(USL)^3",
                "the cube lies in the unit-deviation normal subgroup", n_membership(usl.pow(3)));
    detail::add(out, "relations", "n-membership:(USL)^-3",
                "the inverse cube lies in the unit-deviation normal subgroup",
                n_membership(usl.pow(-3)));

    // conjugation stability of N on random words
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, 8);
    std::uniform_int_distribution<int> name_dist(0, 3);
    std::uniform_int_distribution<int> exp_dist(0, 3);
    const char names[] = {'T', 'S', 'U', 'L'};
    const long exps[] = {-2, -1, 1, 2};
    MoebiusOp member = usl.pow(3);
    bool stable = true;
    for (int t = 0; t < 50 && stable; ++t) {
        std::vector<GenWord::Letter> letters;
        char prev = 0;
        int len = len_dist(rng);
        for (int k = 0; k < len; ++k) {
            char name = names[name_dist(rng)];
            while (name == prev) name = names[name_dist(rng)];
            prev = name;
            letters.push_back({name, exps[exp_dist(rng)]});
        }
        GenWord w(std::move(letters));
        if (w.empty()) continue;
        MoebiusOp g = word_eval(w, true);
        stable = n_membership(g * member * g.inverse());
    }
    detail::add(out, "relations", "n-conjugation-stability",
                "50 random conjugates of a member stay in the normal subgroup", stable);
    return out;
}

/// Closed form vs orbit, and the frozen small table in the parameter Q.
inline std::vector<VerifyCheck> verify_closed_form(long max_n) {
    std::vector<VerifyCheck> out;
    auto up = q_imag_orbit_values(max_n, +1);
    auto down = q_imag_orbit_values(max_n, -1);
    bool all_equal = true;
    for (long n = -max_n; n <= max_n && all_equal; ++n) {
        const RatFunc& orbit = n >= 0 ? up[n] : down[-n];
        all_equal = (q_gaussian_closed(0, n) == orbit);
    }
    detail::add(out, "closed-form", "closed-equals-orbit",
                "closed form equals the orbit value for |n| <= " + std::to_string(max_n),
                all_equal);

    const QPoly Qv = QPoly::var();
    const QPoly Qinv = QPoly::monomial(Rational(1), -1);
    const std::vector<std::pair<long, QPoly>> table = {
        {-3, -(QPoly(1) + QPoly(2) * Qinv)}, {-2, -(QPoly(1) + Qinv)},
        {-1, QPoly(-1)},                     {0, QPoly(0)},
        {1, QPoly(1)},                       {2, QPoly(1) + Qv},
        {3, QPoly(1) + QPoly(2) * Qv},       {4, (QPoly(1) + Qv) * (QPoly(1) + Qv)},
    };
    bool table_ok = true;
    for (const auto& [n, expect] : table) table_ok = table_ok && (q_rep(n) == expect);
    detail::add(out, "closed-form", "q-table-rows",
                "polynomial coefficients of the orbit in Q for n = -3..4", table_ok);
    return out;
}

/// The constant-coefficient linear recurrence in Q and the two defining
/// recurrences of the q-rationals.
inline std::vector<VerifyCheck> verify_recurrence(long max_n) {
    std::vector<VerifyCheck> out;
    auto up = q_imag_orbit_values(max_n + 2, +1);
    auto down = q_imag_orbit_values(max_n + 2, -1);
    auto at = [&](long n) -> const RatFunc& { return n >= 0 ? up[n] : down[-n]; };
    RatFunc Q = Q_param();
    bool rec = true;
    for (long n = -max_n; n <= max_n && rec; ++n)
        rec = (at(n + 2) == (Q + RatFunc(1)) * at(n) - Q * at(n - 2));
    detail::add(out, "recurrence", "linear-recurrence-in-Q",
                "orbit satisfies x(n+2) = (Q+1)x(n) - Q x(n-2) for |n| <= " + std::to_string(max_n),
                rec);

    long bound = std::min<long>(max_n, 40);
    bool rational_rec = true;
    const RatFunc q = RatFunc::q();
    for (long r = 1; r <= bound && rational_rec; ++r) {
        for (long p = -bound; p <= bound && rational_rec; ++p) {
            if (std::gcd(p < 0 ? -p : p, r) != 1) continue;
            RatFunc x = q_rational(p, r);
            rational_rec = (q_rational(p + r, r) == q * x + RatFunc(1));
            if (rational_rec && p != 0)
                rational_rec = (q_rational(-r, p) == -(q * x).inv());
        }
    }
    detail::add(out, "recurrence", "q-rational-defining-recurrences",
                "translation and inversion recurrences for all |p|, r <= " + std::to_string(bound),
                rational_rec);
    return out;
}

/// The Chebyshev bridge: variant identities after the z-substitution,
/// the coefficient recurrences, continuants, and the integer triangle.
inline std::vector<VerifyCheck> verify_chebyshev(long max_n) {
    std::vector<VerifyCheck> out;
    auto orbit = q_imag_orbit_values(max_n + 2, +1);

    bool relation = true;
    for (long n = 0; n <= max_n && relation; ++n) relation = verify_cheb_relation(n, orbit);
    detail::add(out, "chebyshev", "variant-identities",
                "imaginary and real coefficients match the variants under z = q/(q^2-q+1) for n <= " +
                    std::to_string(max_n),
                relation);

    bool recurrences = true;
    for (long n = 1; n <= max_n && recurrences; ++n)
        recurrences = verify_imag_recurrence(n, orbit) && verify_real_recurrence(n, orbit);
    detail::add(out, "chebyshev", "coefficient-recurrences",
                "alternating three-term recurrences of the coefficient sequences for n <= " +
                    std::to_string(max_n),
                recurrences);

    bool continuants = true;
    for (long n = 1; n <= 10 && continuants; ++n) continuants = continuant_check(n);
    detail::add(out, "chebyshev", "continuant-determinants",
                "tridiagonal determinants match the recurrence definitions for n <= 10",
                continuants);

    const std::vector<std::vector<long>> expected = {
        {1}, {2}, {-1, 4}, {-4, 8}, {1, -12, 16}, {6, -32, 32}, {-1, 24, -80, 64}};
    bool triangle = coefficient_triangle(7) == expected;
    // independent route: the extracted imaginary coefficients match the
    // frozen integer rows as exact identities in q
    RatFunc z = cheb_z();
    for (std::size_t row = 0; row < expected.size() && triangle; ++row) {
        long n = static_cast<long>(row) + 1;
        long low = (n % 2 == 0) ? 1 : 0;  // even rows start at the z^1 coefficient
        RatFunc sum(0);
        for (std::size_t k = 0; k < expected[row].size(); ++k)
            sum += RatFunc(expected[row][k]) * z.pow(low + static_cast<long>(k));
        triangle = (imag_coefficient(orbit[n]) == sum);
    }
    detail::add(out, "chebyshev", "coefficient-triangle",
                "integer triangle of imaginary-part coefficients, both construction routes",
                triangle);

    bool multiset = true;
    for (long n = 1; n <= std::min<long>(max_n, 20) && multiset; ++n) {
        UniPoly variant = cheb_variant(ChebKind::I, n);
        UniPoly classical = cheb_U(n);
        std::vector<Rational> a, b;
        for (const Rational& c : variant.coeffs())
            if (sgn(c) != 0) a.push_back(c);
        for (const Rational& c : classical.coeffs())
            if (sgn(c) != 0) b.push_back(c);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        multiset = (a == b) && (n < 2 || variant.degree() < classical.degree());
    }
    detail::add(out, "chebyshev", "coefficient-multiset",
                "variants carry the classical coefficients at lower degree", multiset);

    bool sanity = true;
    for (long n = 0; n <= std::min<long>(max_n, 30) && sanity; ++n)
        sanity = (cheb_variant(ChebKind::I, n).eval(Rational(1)) == Rational(n + 1));
    detail::add(out, "chebyshev", "classical-limit-at-z-1",
                "variant I evaluates to n+1 at z = 1", sanity);
    return out;
}

/// The conjugation symmetry of the imaginary orbit.
inline std::vector<VerifyCheck> verify_conjugation(long max_n) {
    std::vector<VerifyCheck> out;
    bool ok = true;
    for (long n = 0; n <= max_n && ok; ++n) ok = check_conjugation(n);
    detail::add(out, "conjugation", "orbit-conjugation-symmetry",
                "negative orbit values are coefficient conjugates and the closed form flips Q for "
                "|n| <= " + std::to_string(max_n),
                ok);
    return out;
}

/**
 * Numeric facts about the parameter Q.  The two branches of q^(1/2)
 * trace the two unit half-circles; the branch through +i (the plotted
 * one) is reached by evaluating at -sqrt(q), the principal branch
 * passes through the conjugate point -i.
 */
inline std::vector<VerifyCheck> verify_circle() {
    std::vector<VerifyCheck> out;
    RatFunc Q = Q_param();
    detail::add(out, "circle", "unitarity-exact", "Q times its coefficient conjugate equals 1",
                Q * Q.conj_i() == RatFunc(1));
    bool on_circle = true;
    for (int k = 1; k <= 100 && on_circle; ++k) {
        double qv = static_cast<double>(k) / 100.0;
        on_circle = std::abs(std::abs(Q.eval({std::sqrt(qv), 0.0})) - 1.0) <= 1e-12 &&
                    std::abs(std::abs(Q.eval({-std::sqrt(qv), 0.0})) - 1.0) <= 1e-12;
    }
    detail::add(out, "circle", "unit-circle-numeric",
                "|Q(q)| = 1 within 1e-12 on 100 points of (0,1], both branches", on_circle);
    detail::add(out, "circle", "endpoint-one", "Q(1) = 1 exactly", Q.eval_at_one() == GaussRat(1));
    bool at_zero = std::abs(Q.eval({0.0, 0.0}) - std::complex<double>(-1.0, 0.0)) <= 1e-12;
    detail::add(out, "circle", "endpoint-zero", "Q -> -1 as q -> 0+", at_zero);
    double golden = (3.0 - std::sqrt(5.0)) / 2.0;
    bool at_golden =
        std::abs(Q.eval({-std::sqrt(golden), 0.0}) - std::complex<double>(0.0, 1.0)) <= 1e-12 &&
        std::abs(Q.eval({std::sqrt(golden), 0.0}) - std::complex<double>(0.0, -1.0)) <= 1e-12;
    detail::add(out, "circle", "quarter-point",
                "Q((3-sqrt 5)/2) = i within 1e-12 on the plotted branch, -i on the principal one",
                at_golden);
    return out;
}

/// Runs one named suite (or "all"); max_n caps the sweep ranges.
inline std::vector<VerifyCheck> verify_suite(const std::string& suite, long max_n,
                                             std::uint64_t seed = 1) {
    if (max_n > 200) throw std::invalid_argument("verify_suite: max above desk scale");
    std::vector<VerifyCheck> out;
    auto append = [&out](std::vector<VerifyCheck> part) {
        out.insert(out.end(), part.begin(), part.end());
    };
    bool all = (suite == "all");
    if (all || suite == "relations") append(verify_relations(seed));
    if (all || suite == "closed-form") append(verify_closed_form(std::min<long>(max_n, 50)));
    if (all || suite == "recurrence") append(verify_recurrence(std::min<long>(max_n, 48)));
    if (all || suite == "chebyshev") append(verify_chebyshev(std::min<long>(max_n, 30)));
    if (all || suite == "conjugation") append(verify_conjugation(std::min<long>(max_n, 30)));
    if (all || suite == "circle") append(verify_circle());
    if (out.empty()) throw std::invalid_argument("verify_suite: unknown suite '" + suite + "'");
    return out;
}

}  // namespace qgauss
