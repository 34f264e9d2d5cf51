#include "helpers.hpp"

#include "smae/error.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("parser precedence and literals")
{
    CHECK(S("2+3*4") == Scalar(14));
    CHECK(S("(2+3)*4") == Scalar(20));
    CHECK(S("1/2 + 1/3") == Scalar(mpq_class(5, 6)));
    CHECK(S("-x^2") == -(Scalar::variable(kVarX) * Scalar::variable(kVarX)));
    CHECK(S("x*y - y*x") == Scalar(0));
    CHECK(S("x/(x*y)") == Scalar::variable(kVarY).inverse());
    CHECK(S("(x+1)^3") == S("x^3 + 3*x^2 + 3*x + 1"));
}

TEST_CASE("parser errors")
{
    CHECK_THROWS_AS(S("x+"), ParseError);
    CHECK_THROWS_AS(S("(x"), ParseError);
    CHECK_THROWS_AS(S("foo"), ParseError);
    CHECK_THROWS_AS(S("1/(x-x)"), ParseError);
    CHECK_THROWS_AS(S("sqrt(x)"), ParseError);
}

TEST_CASE("split_top_level respects parentheses")
{
    auto parts = split_top_level("a,(b,c),d", ',');
    REQUIRE(parts.size() == 3);
    CHECK(parts[1] == "(b,c)");
}

TEST_CASE("evaluation is a ring homomorphism on random inputs")
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; ++k) {
        const Poly a = random_poly(rng, 3, 4), b = random_poly(rng, 3, 4), c = random_poly(rng, 2, 3);
        if (b.is_zero() || c.is_zero())
            continue;
        const RatFun f(a, b), g(c, b + Poly(7));
        const Point pt = random_point(rng);
        mpq_class fb, gb;
        try {
            fb = f.eval(pt);
            gb = g.eval(pt);
        } catch (const EvaluationError&) {
            continue;
        }
        CHECK((f + g).eval(pt) == fb + gb);
        CHECK((f * g).eval(pt) == fb * gb);
        CHECK((f - g).eval(pt) == fb - gb);
        if (sgn(gb) != 0)
            CHECK((f / g).eval(pt) == fb / gb);
    }
}

TEST_CASE("gcd recovers planted common factors")
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 25; ++k) {
        const Poly c = random_poly(rng, 2, 3);
        const Poly a = random_poly(rng, 2, 3), b = random_poly(rng, 2, 3);
        if (c.is_zero() || a.is_zero() || b.is_zero())
            continue;
        const Poly g = gcd(a * c, b * c);
        CHECK(g.divide_exact(c.monic()).has_value());
        CHECK((a * c).divide_exact(g).has_value());
        CHECK((b * c).divide_exact(g).has_value());
    }
}

TEST_CASE("rational functions stay reduced")
{
    const RatFun f = S("(x^2 - y^2)/(x - y)").rational_part();
    CHECK(f.is_polynomial());
    CHECK(Scalar(f) == S("x + y"));
    CHECK(S("1/x + 1/y") == S("(x + y)/(x*y)"));
}

TEST_CASE("derivatives obey Leibniz and the quotient rule")
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        const Scalar f(random_poly(rng, 3, 4)), g(random_poly(rng, 3, 4));
        if (g.is_zero())
            continue;
        for (Var v = 0; v < 4; ++v) {
            CHECK((f * g).partial(v) == f.partial(v) * g + f * g.partial(v));
            CHECK((f / g).partial(v) == (f.partial(v) * g - f * g.partial(v)) / (g * g));
        }
    }
}

TEST_CASE("adjoined square root")
{
    const auto ctx2 = ctx().with_radicand(S("x^2 + y").rational_part());
    const Scalar s = ctx2.sqrt();
    CHECK(s * s == S("x^2 + y"));
    const Scalar a = parse("1 + x*sqrt(x^2 + y)", ctx2);
    CHECK(a * a.inverse() == Scalar(1));
    CHECK(s.partial(kVarY) == Scalar(mpq_class(1, 2)) * s / S("x^2 + y"));
}

TEST_CASE("total derivatives on jet symbols commute")
{
    const auto jc = ctx().with_jet_symbols();
    const Scalar f = parse("x*u1^2 + p*u2*u3 - y*q*u4 + u1*u4", jc);
    CHECK(f.total_derivative(0).has_var(jets::first(1, 0)));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(f.total_derivative(a).total_derivative(b) == f.total_derivative(b).total_derivative(a));
    CHECK(Scalar::variable(jets::fiber(2)).total_derivative(3) == Scalar::variable(jets::first(2, 3)));
    CHECK(Scalar::variable(jets::first(2, 3)).total_derivative(1) == Scalar::variable(jets::second(2, 1, 3)));
    CHECK(jets::all().size() == 60u);
}

TEST_CASE("inert exponential symbol")
{
    const Scalar e = Scalar::variable(exp_minus_x_symbol());
    CHECK(e.total_derivative(0) == -e);
    CHECK(e.total_derivative(1).is_zero());
}

TEST_CASE("nilpotent symbol truncates products")
{
    const Var eps = symbols::intern("eps$");
    symbols::set_nilpotent(eps);
    const Scalar e = Scalar::variable(eps);
    CHECK((Scalar(1) + e) * (Scalar(1) + e) == Scalar(1) + Scalar(2) * e);
    CHECK((Scalar(1) + e).inverse() == Scalar(1) - e);
    const Scalar x = Scalar::variable(kVarX);
    CHECK((x + e) / (x - e) == Scalar(1) + Scalar(2) * e / x);
    CHECK(e * e == Scalar(0));
}

TEST_CASE("floating evaluation agrees with exact evaluation")
{
    const Scalar f = S("(x^3 - p*q + 1/3)/(y^2 + 1)");
    Point pt;
    pt.set(kVarX, mpq_class(1, 2));
    pt.set(kVarP, mpq_class(-3));
    pt.set(kVarY, mpq_class(2, 7));
    pt.set(kVarQ, mpq_class(5, 4));
    const double exact = f.eval(pt).get_d();
    const double approx = f.eval_double({{kVarX, 0.5}, {kVarP, -3.0}, {kVarY, 2.0 / 7}, {kVarQ, 1.25}});
    CHECK(approx == doctest::Approx(exact).epsilon(1e-12));
}
