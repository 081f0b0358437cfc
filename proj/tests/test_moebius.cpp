#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace qgauss;
using qgauss::testing::Rng;

TEST_CASE("generator matrices") {
    MoebiusOp T = generator(Generator::T);
    REQUIRE(T.a() == RatFunc::q());
    REQUIRE(T.b() == RatFunc(1));
    REQUIRE(T.c() == RatFunc(0));
    REQUIRE(T.d() == RatFunc(1));
    REQUIRE(T.flip() == +1);

    MoebiusOp U = generator(Generator::U);
    REQUIRE(U.a() == RatFunc(1));
    REQUIRE(U.b() == RatFunc::i() * RatFunc::s());
    REQUIRE(U.c() == RatFunc(1) - RatFunc::q());
    REQUIRE(U.d() == RatFunc::q());
    REQUIRE(U.flip() == -1);

    MoebiusOp U2 = generator(Generator::U2);
    RatFunc w = RatFunc::i() * (RatFunc::s() - RatFunc::s().inv());
    REQUIRE(U2.a() == RatFunc(1) + w);
    REQUIRE(U2.b() == RatFunc(2) * RatFunc::i() / RatFunc::s());
    REQUIRE(U2.c() == RatFunc(0));
    REQUIRE(U2.d() == RatFunc(1) - w);
    REQUIRE(U2.flip() == +1);

    REQUIRE(generator(Generator::S).flip() == +1);
    REQUIRE(generator(Generator::L).flip() == -1);
    REQUIRE_THROWS_AS(generator_from_string("X"), std::invalid_argument);
}

TEST_CASE("application of the generators") {
    MoebiusOp T = generator(Generator::T);
    MoebiusOp S = generator(Generator::S);
    MoebiusOp U = generator(Generator::U);
    REQUIRE(T.apply_finite(RatFunc(0)) == RatFunc(1));
    REQUIRE(U.apply_finite(RatFunc(0)) == q_imaginary_unit());
    REQUIRE(S.apply_finite(RatFunc(1)) == RatFunc(-1) / RatFunc::q());
    // the pole of S maps to the point at infinity, which maps on to a/c
    REQUIRE(S.apply(ProjValue(RatFunc(0))).is_infinity());
    REQUIRE(S.apply(ProjValue::infinity()) == ProjValue(RatFunc(0)));
    REQUIRE(T.apply(ProjValue::infinity()).is_infinity());
    REQUIRE_THROWS_AS(S.apply_finite(RatFunc(0)), std::domain_error);
}

TEST_CASE("composition and powers") {
    MoebiusOp T = generator(Generator::T);
    MoebiusOp S = generator(Generator::S);
    MoebiusOp U = generator(Generator::U);
    MoebiusOp L = generator(Generator::L);
    REQUIRE((U * U).proj_equal(generator(Generator::U2)));
    REQUIRE((MoebiusOp::identity() * U).proj_equal(U));
    REQUIRE((L * L).is_identity());
    REQUIRE(S.pow(2).is_identity());
    REQUIRE((T * S).pow(3).is_identity());
    REQUIRE(T.pow(0).is_identity());
    REQUIRE(T.pow(3).apply_finite(RatFunc(0)) ==
            RatFunc(1) + RatFunc::q() + RatFunc::q().pow(2));
    REQUIRE((U.pow(-1) * U).is_identity());
    REQUIRE((U * U.inverse()).is_identity());
    REQUIRE((L.inverse() * L).is_identity());
    REQUIRE(T.pow(-4).proj_equal(T.inverse().pow(4)));
}

TEST_CASE("homomorphism law on random operators") {
    Rng rng(211);
    int checked = 0;
    while (checked < 60) {
        MoebiusOp A = qgauss::testing::random_moebius(rng);
        MoebiusOp B = qgauss::testing::random_moebius(rng);
        RatFunc x = qgauss::testing::random_rat_func(rng);
        ProjValue direct = (A * B).apply(ProjValue(x));
        ProjValue nested = A.apply(B.apply(ProjValue(x)));
        REQUIRE(direct == nested);
        ++checked;
    }
}

TEST_CASE("flip bookkeeping") {
    Rng rng(223);
    for (int k = 0; k < 60; ++k) {
        MoebiusOp A = qgauss::testing::random_moebius(rng);
        MoebiusOp B = qgauss::testing::random_moebius(rng);
        REQUIRE((A * B).flip() == A.flip() * B.flip());
        REQUIRE(A.inverse().flip() == A.flip());
    }
}

TEST_CASE("projective equality is scale-invariant") {
    Rng rng(227);
    for (int k = 0; k < 40; ++k) {
        MoebiusOp A = qgauss::testing::random_moebius(rng);
        RatFunc scale = qgauss::testing::random_nonzero_rat_func(rng);
        MoebiusOp B(A.a() * scale, A.b() * scale, A.c() * scale, A.d() * scale, A.flip());
        REQUIRE(A.proj_equal(B));
        REQUIRE(B.proj_equal(A));
        MoebiusOp C(A.a(), A.b() + A.d(), A.c(), A.d() - RatFunc(1) + A.a(), A.flip());
        if (!C.proj_equal(A)) REQUIRE_FALSE(A.proj_equal(C));
    }
    // flips must agree
    MoebiusOp plus(1, 0, 0, 1, +1);
    MoebiusOp minus(1, 0, 0, 1, -1);
    REQUIRE_FALSE(plus.proj_equal(minus));
}

TEST_CASE("singular matrices are rejected") {
    REQUIRE_THROWS_AS(MoebiusOp(1, 1, 1, 1, +1), std::invalid_argument);
    REQUIRE_THROWS_AS(MoebiusOp(1, 0, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("fixed points of the inversion") {
    auto fp = fixed_points(generator(Generator::S));
    REQUIRE(fp.kind == FixedPoints::Kind::pair);
    RatFunc plus_i = q_imaginary_unit();
    bool found_plus = (fp.roots[0] == plus_i || fp.roots[1] == plus_i);
    bool found_minus = (fp.roots[0] == -plus_i || fp.roots[1] == -plus_i);
    REQUIRE(found_plus);
    REQUIRE(found_minus);
    for (const auto& root : fp.roots)
        REQUIRE(generator(Generator::S).apply_finite(root) == root);
}

TEST_CASE("fixed points of the translation are linear") {
    auto fp = fixed_points(generator(Generator::T));
    REQUIRE(fp.kind == FixedPoints::Kind::linear);
    REQUIRE(fp.roots.size() == 1);
    REQUIRE(fp.roots[0] == RatFunc(1) / (RatFunc(1) - RatFunc::q()));
    REQUIRE(generator(Generator::T).apply_finite(fp.roots[0]) == fp.roots[0]);
}

TEST_CASE("elliptic fixed points outside the field are flagged") {
    MoebiusOp TS = generator(Generator::T) * generator(Generator::S);
    auto fp = fixed_points(TS);
    REQUIRE(fp.kind == FixedPoints::Kind::irreducible);
    REQUIRE(fp.discriminant.has_value());
    // the numeric roots are (1 ± sqrt(3) i)/2, independent of s
    for (double s0 : {0.63, 0.8, 0.95}) {
        auto roots = numeric_fixed_points(TS, {s0, 0.0});
        for (const auto& root : roots) {
            REQUIRE(std::abs(root.real() - 0.5) < 1e-12);
            REQUIRE(std::abs(std::abs(root.imag()) - std::sqrt(3.0) / 2.0) < 1e-12);
        }
        REQUIRE(std::abs(roots[0].imag() + roots[1].imag()) < 1e-12);
    }
    // and for ST they are (-1 ± sqrt(3) i)/(2q)
    MoebiusOp ST = generator(Generator::S) * generator(Generator::T);
    auto fp2 = fixed_points(ST);
    REQUIRE(fp2.kind == FixedPoints::Kind::irreducible);
    double s0 = 0.8, q0 = s0 * s0;
    auto roots = numeric_fixed_points(ST, {s0, 0.0});
    for (const auto& root : roots) {
        REQUIRE(std::abs(root.real() + 0.5 / q0) < 1e-12);
        REQUIRE(std::abs(std::abs(root.imag()) - std::sqrt(3.0) / (2.0 * q0)) < 1e-12);
    }
}

TEST_CASE("fixed points contract violations") {
    REQUIRE_THROWS_AS(fixed_points(generator(Generator::U)), std::invalid_argument);
    REQUIRE_THROWS_AS(fixed_points(MoebiusOp::identity()), std::invalid_argument);
    // pure translation by a constant: no fixed point in the field
    MoebiusOp shift(1, 1, 0, 1, +1);
    REQUIRE(fixed_points(shift).kind == FixedPoints::Kind::no_fixed_point);
    // double root
    MoebiusOp parabolic(1, 0, 1, 1, +1);  // x/(x+1), fixed point 0 twice
    auto fp = fixed_points(parabolic);
    REQUIRE(fp.kind == FixedPoints::Kind::double_root);
    REQUIRE(fp.roots[0] == RatFunc(0));
}

TEST_CASE("roots returned by fixed_points satisfy the fixed point equation") {
    // conjugates of a diagonal map have the conjugator's images of 0 and
    // infinity as fixed points, so the pair case is reachable on demand
    Rng rng(229);
    int seen_pairs = 0;
    while (seen_pairs < 12) {
        MoebiusOp g = qgauss::testing::random_moebius(rng);
        if (g.flip() != +1) continue;
        RatFunc lambda = qgauss::testing::random_nonzero_rat_func(rng);
        if (lambda == RatFunc(1)) continue;
        MoebiusOp diag(lambda, 0, 0, 1, +1);
        MoebiusOp A = g * diag * g.inverse();
        if (A.is_identity()) continue;
        auto fp = fixed_points(A);
        for (const auto& root : fp.roots) REQUIRE(A.apply(ProjValue(root)) == ProjValue(root));
        if (fp.kind == FixedPoints::Kind::pair) {
            ProjValue expected_a = g.apply(ProjValue(RatFunc(0)));
            ProjValue expected_b = g.apply(ProjValue::infinity());
            for (const ProjValue& expected : {expected_a, expected_b}) {
                if (expected.is_infinity()) continue;
                bool found = false;
                for (const auto& root : fp.roots) found = found || (root == expected.value());
                REQUIRE(found);
            }
            ++seen_pairs;
        }
    }
}

TEST_CASE("commutant families of the translation") {
    auto plus_families = tq_commutant(+1);
    REQUIRE(plus_families.size() == 2);
    REQUIRE(plus_families[0].kind == CommutantKind::triangular_two_parameter);
    REQUIRE(plus_families[1].kind == CommutantKind::exceptional_one_parameter);
    // T itself sits in the triangular family at a = q, b = 1
    REQUIRE(commutant_triangular(RatFunc::q(), RatFunc(1)).proj_equal(generator(Generator::T)));
    // the exceptional representative is singular yet commutes
    REQUIRE(plus_families[1].representative.det().is_zero());

    auto minus_families = tq_commutant(-1);
    REQUIRE(minus_families.size() == 1);
    REQUIRE(minus_families[0].kind == CommutantKind::flipped_one_parameter);
    // the flip-twisted translation sits in the family at a = 1, b = i s
    REQUIRE(commutant_flipped(RatFunc(1), RatFunc::i() * RatFunc::s())
                .proj_equal(generator(Generator::U)));
    REQUIRE_THROWS_AS(tq_commutant(0), std::invalid_argument);
}

TEST_CASE("uniqueness of the imaginary translation") {
    auto u2 = unique_imaginary_translation(+1, Boundary::maps_minus_i_to_i);
    REQUIRE(u2.has_value());
    REQUIRE(u2->proj_equal(generator(Generator::U2)));

    REQUIRE_FALSE(unique_imaginary_translation(+1, Boundary::two_point).has_value());

    auto u = unique_imaginary_translation(-1, Boundary::two_point);
    REQUIRE(u.has_value());
    REQUIRE(u->proj_equal(generator(Generator::U)));

    // the remaining combination also has a one-parameter solution
    auto other = unique_imaginary_translation(-1, Boundary::maps_minus_i_to_i);
    REQUIRE(other.has_value());
    RatFunc minus_i = -q_imaginary_unit();
    REQUIRE(other->apply(ProjValue(minus_i)) == ProjValue(q_imaginary_unit()));
}

TEST_CASE("operator word parsing through the cli literal") {
    MoebiusOp parsed = word_eval(GenWord::parse("T^2 U^-1 S"), true);
    MoebiusOp direct = generator(Generator::T).pow(2) * generator(Generator::U).pow(-1) *
                       generator(Generator::S);
    REQUIRE(parsed.proj_equal(direct));
}
