#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace qgauss;
using qgauss::testing::Rng;

namespace {
RatFunc is_inv() { return RatFunc::i() / RatFunc::s(); }  // i·s⁻¹
}

TEST_CASE("GaussRat basics") {
    GaussRat z(Rational(3, 6), Rational(-4, 8));  // stored in lowest terms
    REQUIRE(z.re() == Rational(1, 2));
    REQUIRE(z.im() == Rational(-1, 2));
    REQUIRE(GaussRat::i() * GaussRat::i() == GaussRat(-1));
    REQUIRE(z * z.inv() == GaussRat(1));
    REQUIRE(z.conj().conj() == z);
    REQUIRE(z.norm() == Rational(1, 2));
    REQUIRE_THROWS_AS(GaussRat().inv(), std::domain_error);
}

TEST_CASE("GaussRat square roots") {
    GaussRat g(Rational(3), Rational(4));  // (2+i)^2
    auto r = g.sqrt();
    REQUIRE(r);
    REQUIRE((*r) * (*r) == g);
    REQUIRE(GaussRat(Rational(9, 4)).sqrt().value() == GaussRat(Rational(3, 2)));
    auto neg = GaussRat(-3).sqrt();
    REQUIRE_FALSE(neg.has_value());  // needs sqrt(3), not in Q(i)
    auto minus_four = GaussRat(-4).sqrt();
    REQUIRE(minus_four);
    REQUIRE((*minus_four) * (*minus_four) == GaussRat(-4));
    REQUIRE_FALSE(GaussRat::i().sqrt().has_value());
}

TEST_CASE("rational arithmetic in the function field") {
    SECTION("identity and monomials") {
        Rng rng(7);
        RatFunc f = qgauss::testing::random_rat_func(rng);
        REQUIRE(RatFunc(0) + f == f);
        REQUIRE(is_inv() * is_inv() == RatFunc(-1) / RatFunc::q());
    }
    SECTION("division by zero") {
        REQUIRE_THROWS_AS(RatFunc(1) / RatFunc(0), std::domain_error);
        REQUIRE_THROWS_AS(RatFunc(SPoly(1), SPoly()), std::domain_error);
    }
}

TEST_CASE("canonical forms") {
    // common monomial factor
    REQUIRE(RatFunc(SPoly::monomial(GaussRat(2), 2), SPoly::monomial(GaussRat(2), 1)) ==
            RatFunc::s());
    // polynomial gcd
    SPoly s2m1 = SPoly::q() - SPoly(1);
    SPoly sm1 = SPoly::var() - SPoly(1);
    REQUIRE(RatFunc(s2m1, sm1) == RatFunc::s() + RatFunc(1));
    // unit coefficient cancellation
    GaussRat u(Rational(1), Rational(1));
    REQUIRE(RatFunc(SPoly::monomial(u, 1), SPoly(u)) == RatFunc::s());
    // denominator is monic with nonzero constant term
    Rng rng(11);
    for (int k = 0; k < 50; ++k) {
        RatFunc f = qgauss::testing::random_rat_func(rng);
        if (f.is_zero()) continue;
        REQUIRE(f.den().leading_coeff().is_one());
        REQUIRE(f.den().lowest_exp() == 0);
        REQUIRE_FALSE(f.den().coeff(0).is_zero());
    }
}

TEST_CASE("normalization is idempotent and canonical") {
    Rng rng(13);
    for (int k = 0; k < 100; ++k) {
        RatFunc f = qgauss::testing::random_rat_func(rng);
        // renormalizing the stored parts changes nothing
        REQUIRE(RatFunc(f.num(), f.den()) == f);
        // a/b = c/d exactly when the canonical components agree
        SPoly scale = qgauss::testing::random_nonzero_spoly(rng);
        RatFunc g(f.num() * scale, f.den() * scale);
        REQUIRE(g.num() == f.num());
        REQUIRE(g.den() == f.den());
    }
}

TEST_CASE("field axioms on random triples") {
    Rng rng(17);
    for (int k = 0; k < 100; ++k) {
        RatFunc a = qgauss::testing::random_rat_func(rng);
        RatFunc b = qgauss::testing::random_rat_func(rng);
        RatFunc c = qgauss::testing::random_rat_func(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + (-a) == RatFunc(0));
        if (!a.is_zero()) REQUIRE(a * a.inv() == RatFunc(1));
    }
}

TEST_CASE("substitution and conjugation are automorphisms") {
    REQUIRE(RatFunc::s().subst_q_inverse() == RatFunc::s().inv());
    // [2]_q = 1+q maps to 1+1/q
    RatFunc e2 = RatFunc(1) + RatFunc::q();
    REQUIRE(e2.subst_q_inverse() == RatFunc(1) + RatFunc::q().inv());
    REQUIRE(RatFunc(GaussRat(Rational(5, 3))).subst_q_inverse() == RatFunc(GaussRat(Rational(5, 3))));
    REQUIRE(is_inv().conj_i() == -is_inv());

    Rng rng(19);
    for (int k = 0; k < 60; ++k) {
        RatFunc a = qgauss::testing::random_rat_func(rng);
        RatFunc b = qgauss::testing::random_rat_func(rng);
        // involutions
        REQUIRE(a.subst_q_inverse().subst_q_inverse() == a);
        REQUIRE(a.conj_i().conj_i() == a);
        // field homomorphisms
        REQUIRE((a + b).subst_q_inverse() == a.subst_q_inverse() + b.subst_q_inverse());
        REQUIRE((a * b).subst_q_inverse() == a.subst_q_inverse() * b.subst_q_inverse());
        REQUIRE((a + b).conj_i() == a.conj_i() + b.conj_i());
        REQUIRE((a * b).conj_i() == a.conj_i() * b.conj_i());
        // the two commute
        REQUIRE(a.subst_q_inverse().conj_i() == a.conj_i().subst_q_inverse());
    }
}

TEST_CASE("conjugation fixes real polynomials") {
    Rng rng(23);
    for (int k = 0; k < 40; ++k) {
        SPoly p;
        std::uniform_int_distribution<long> exp(-4, 4);
        for (int t = 0; t < 4; ++t)
            p.add_to_coeff(exp(rng), GaussRat(qgauss::testing::random_rational(rng)));
        REQUIRE(p.conj_i() == p);
    }
}

TEST_CASE("numeric evaluation") {
    REQUIRE(std::abs(RatFunc::q().eval({1.0, 0.0}) - std::complex<double>(1, 0)) < 1e-15);
    RatFunc e2 = RatFunc(1) + RatFunc::q();
    REQUIRE(std::abs(e2.eval({1.0, 0.0}) - std::complex<double>(2, 0)) < 1e-15);
    RatFunc pole = RatFunc(1) / (RatFunc::s() - RatFunc(1));
    REQUIRE_THROWS_AS(pole.eval({1.0, 0.0}), PoleError);
    try {
        pole.eval({1.0, 0.0});
    } catch (const PoleError& e) {
        REQUIRE(e.denominator_abs() < kPoleTolerance);
    }
}

TEST_CASE("exact square roots in the function field") {
    Rng rng(29);
    for (int k = 0; k < 40; ++k) {
        RatFunc f = qgauss::testing::random_rat_func(rng);
        RatFunc square = f * f;
        auto root = sqrt_exact(square);
        REQUIRE(root);
        REQUIRE((*root) * (*root) == square);
    }
    REQUIRE_FALSE(sqrt_exact(RatFunc(-3)).has_value());
    REQUIRE_FALSE(sqrt_exact(RatFunc::s()).has_value());
    auto r = sqrt_exact(RatFunc(-4) * RatFunc::q());
    REQUIRE(r);  // (2is)^2
    REQUIRE((*r) * (*r) == RatFunc(-4) * RatFunc::q());
}

TEST_CASE("exact evaluation at s = 1") {
    RatFunc f = (RatFunc(1) + RatFunc::q()) / (RatFunc(2) - RatFunc::s());
    REQUIRE(f.eval_at_one() == GaussRat(2));
    RatFunc pole = RatFunc(1) / (RatFunc::s() - RatFunc(1));
    REQUIRE_THROWS_AS(pole.eval_at_one(), std::domain_error);
}
