#include "helpers.hpp"

#include "smae/error.hpp"
#include "smae/verify.hpp"

#include <doctest.h>

using namespace testing;

namespace {

// A Lagrangian plane tangent to a solution graph (p = u_x, q = u_y with
// Hessian r, s, t) meets a characteristic plane of the equation
// S (rt - s^2) + A r + B s + C t + D = 0 in a line exactly when the
// equation holds, so det[L; D] must be a multiple of the equation.
bool characteristic_by_determinant(const MAECoefficients& m, const Distribution2& d)
{
    const Scalar r = Scalar::variable(symbols::intern("r$")), s = Scalar::variable(symbols::intern("s$")),
                 t = Scalar::variable(symbols::intern("t$"));
    const VectorField l1(1, r, 0, s), l2(0, s, 1, t);
    Matrix<Scalar> mat;
    for (const auto& f : {l1, l2, d.first(), d.second()})
        mat.push_back({f[0], f[1], f[2], f[3]});
    const Scalar det = determinant(mat);
    const Scalar eq = m.S * (r * t - s * s) + m.A * r + m.B * s + m.C * t + m.D;
    if (det.is_zero())
        return false;
    const Scalar ratio = det / eq;
    for (const char* n : {"r$", "s$", "t$"})
        if (!ratio.partial(symbols::intern(n)).is_zero())
            return false;
    return true;
}

} // namespace

TEST_CASE("distribution construction errors")
{
    CHECK_THROWS_AS(dist("0,1,0,0 ; 0,2,0,0"), DomainError);
    CHECK_THROWS_AS(dist("1,0,0,0 ; 0,0,1,0"), DomainError); // <Dx, Dy> is Lagrangian
    CHECK_THROWS_AS(dist("1,0,0,0"), ParseError);
    CHECK_NOTHROW(dist("1,0,0,0 ; 0,1,0,0"));
}

TEST_CASE("orthogonal complement and projectors")
{
    std::mt19937_64 rng(21);
    for (int k = 0; k < 8; ++k) {
        const Distribution2 d = verify::random_distribution(rng);
        const Distribution2 c = ortho_complement(d);
        const auto& om = d.symplectic();
        for (const auto& a : d.fields())
            for (const auto& b : c.fields())
                CHECK(om(a, b).is_zero());
        CHECK(span_rank({d.first(), d.second(), c.first(), c.second()}) == 4u);
        const VectorValuedForm P = projector(d), Pc = projector(c);
        CHECK(compose(P, P) == P);
        CHECK(P + Pc == VectorValuedForm::identity());
        for (const auto& a : d.fields())
            CHECK(P.apply(a) == a);
        for (const auto& b : c.fields())
            CHECK(P.apply(b).is_zero());
        CHECK(same_span(ortho_complement(c).fields(), d.fields()));
        const VectorValuedForm A = operator_A(d);
        CHECK(compose(A, A) == VectorValuedForm::identity());
        CHECK(validate_operator(A, om) == OperatorKind::Hyperbolic);
    }
}

TEST_CASE("attached objects basic relations")
{
    std::mt19937_64 rng(22);
    for (int k = 0; k < 8; ++k) {
        const Distribution2 d = verify::random_distribution(rng);
        const AttachedObjects o = attach(d);
        const auto& om = d.symplectic();
        CHECK(o.rho == om.gamma(o.Z));
        CHECK(o.rho_dual == om.gamma(o.Z_dual));
        CHECK(o.sigma == o.rho - o.rho_dual);
        CHECK((o.Z.is_zero() || o.dual.contains(o.Z)));
        CHECK((o.Z_dual.is_zero() || d.contains(o.Z_dual)));
        // omega is Omega restricted to D.
        const VectorField a = d.first(), b = d.second();
        CHECK(o.omega.evaluate({a, b}) == om(a, b));
        CHECK(o.omega.evaluate({a, o.dual.first()}).is_zero());
        CHECK(o.omega + o.omega_dual == om.omega());
    }
}

TEST_CASE("MAE classification")
{
    CHECK(classify(parse_mae("0;1;0;0;0", ctx())) == MAEType::Parabolic);
    CHECK(classify(parse_mae("0;1;0;1;0", ctx())) == MAEType::Elliptic);
    CHECK(classify(parse_mae("0;1;0;-1;0", ctx())) == MAEType::Hyperbolic);
    CHECK(classify(parse_mae("1;0;0;0;1", ctx())) == MAEType::Hyperbolic);
    CHECK(classify(parse_mae("1;0;0;0;-1", ctx())) == MAEType::Elliptic);
    CHECK(discriminant(parse_mae("1;2;3;4;5", ctx())) == Scalar(9 - 32 + 20));
    CHECK_THROWS_AS(mae_to_distributions(parse_mae("0;1;0;0;0", ctx())), UnsupportedTypeError);
    CHECK_THROWS_AS(mae_to_distributions(parse_mae("0;1;0;1;0", ctx())), UnsupportedTypeError);
    CHECK_THROWS_AS(parse_mae("0;1;0;0", ctx()), ParseError);
}

TEST_CASE("MAE characteristic distributions, every branch")
{
    // S != 0, A != 0, C != 0 only, B only, and a non-square discriminant.
    for (const char* text : {"1;0;0;0;1", "1;x;1;0;y", "0;1;0;-1;0", "0;2;1;-1;p", "0;0;1;1;p", "0;0;1;x;q^2",
                             "0;0;1;0;p*q", "0;1;0;-x;0", "1;0;0;0;x^2+1"}) {
        CAPTURE(text);
        const MAECoefficients m = parse_mae(text, ctx());
        REQUIRE(classify(m) == MAEType::Hyperbolic);
        const MAEDistributions md = mae_to_distributions(m);
        CHECK(same_span(ortho_complement(md.D).fields(), md.D_dual.fields()));
        CHECK(characteristic_by_determinant(m, md.D));
        CHECK(characteristic_by_determinant(m, md.D_dual));
    }
}

TEST_CASE("operator parsing")
{
    const VectorValuedForm a = parse_operator("1,0,0,0; 0,1,0,0; 0,0,-1,0; 0,0,0,-1", ctx());
    CHECK(a.apply(VectorField::coordinate(0)) == VectorField::coordinate(0));
    CHECK(a.apply(VectorField::coordinate(2)) == -VectorField::coordinate(2));
    CHECK(validate_operator(a, *standard_symplectic()) == OperatorKind::Hyperbolic);
    CHECK_THROWS_AS(parse_operator("1,0,0", ctx()), ParseError);
    // Not selfadjoint.
    const VectorValuedForm b = parse_operator("1,1,0,0; 0,-1,0,0; 0,0,1,0; 0,0,0,-1", ctx());
    CHECK_THROWS_AS(validate_operator(b, *standard_symplectic()), DomainError);
}
