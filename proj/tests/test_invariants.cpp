#include "helpers.hpp"

#include "smae/error.hpp"

#include <doctest.h>

using namespace testing;

namespace {

const char* kWorked = "0,x*y+1,1,p*q ; 1,1,0,x*y";

} // namespace

TEST_CASE("worked example invariant values")
{
    const Distribution2 d = dist(kWorked);
    const InvariantList I = scalar_invariants(d);
    CHECK(I[0] == S("-2*x*y + 1"));
    CHECK(I[1] == S("2*x*y - 2*p*y - 2*y*q"));
    CHECK(I[3] == S("-2"));
    CHECK(I[4] == S("2*p*y + 1"));
    CHECK(I[5] == S("-4*x*p*y^2 - 2*p^2*y^2 - 4*x*y + 2"));
}

TEST_CASE("J invariants are combinations of I and I'")
{
    const Distribution2 d = dist(kWorked);
    const InvariantList I = scalar_invariants(d), Ip = primed_invariants(d);
    const auto J = J_invariants(I, Ip);
    CHECK(J[2] == I[2] * Ip[2]);
    CHECK(J[5] == I[5] - I[4]);
    // J is symmetric under D <-> D'.
    CHECK(J == J_invariants(Ip, I));
}

TEST_CASE("operator forms recover the distribution forms")
{
    const Distribution2 d = dist(kWorked);
    const AttachedObjects o = attach(d);
    const auto f = operator_forms(operator_A(d), d.symplectic());
    CHECK(f.theta == o.omega - o.omega_dual);
    CHECK(f.sigma == o.sigma);
    CHECK(Scalar(mpq_class(1, 2)) * (f.varrho + f.sigma) == o.rho);
}

TEST_CASE("operator validation")
{
    const auto& om = *standard_symplectic();
    // A Dx = Dy, A Dy = -Dx, A Dp = -Dq, A Dq = Dp.
    const VectorValuedForm j = parse_operator("0,0,-1,0; 0,0,0,1; 1,0,0,0; 0,-1,0,0", ctx());
    CHECK(validate_operator(j, om) == OperatorKind::Elliptic);
    CHECK_THROWS_AS(validate_operator(VectorValuedForm::identity(), om), DomainError);
    const VectorValuedForm twice = Scalar(2) * operator_A(dist(kWorked));
    CHECK_THROWS_AS(validate_operator(twice, om), DomainError);
    const InvariantList jt = tildeJ_invariants(j, om);
    for (const auto& v : jt)
        CHECK(v.is_zero());
    CHECK_FALSE(contact_ratios(jt).has_value());
}

TEST_CASE("special form closed formulas")
{
    const Distribution2 d = dist("0,1,0,0 ; 1,0,0,-(p*q+p^2+q)");
    const auto D = special_form_coefficient(d);
    REQUIRE(D.has_value());
    CHECK(*D == S("p*q+p^2+q"));
    const auto a = special_invariants(attach(d));
    const auto b = special_invariants_from_coefficient(*D);
    REQUIRE(a.I12.has_value());
    REQUIRE(a.I21.has_value());
    CHECK(*a.I12 == *b.I12);
    CHECK(*a.I21 == *b.I21);
    CHECK_FALSE(special_form_coefficient(dist(kWorked)).has_value());
}

TEST_CASE("lie_eigenvalue")
{
    const VectorField x = V("x, 0, 0, 0");
    const KForm a = KForm::differential(0);
    const auto l = lie_eigenvalue(x, a);
    REQUIRE(l.has_value());
    CHECK(*l == Scalar(1));
    CHECK_FALSE(lie_eigenvalue(V("y, 0, 0, 0"), a).has_value());
}

TEST_CASE("invariant vector fields")
{
    const Distribution2 d = dist(kWorked);
    const AttachedObjects o = attach(d);
    const auto z1 = Zij_fields(d.symplectic(), o);
    const auto z2 = Zij_fields_by_volume(d.symplectic(), o);
    for (int k = 0; k < 4; ++k)
        CHECK(z1[k] == z2[k]);
    Matrix<Scalar> m;
    for (const auto& f : z1)
        m.push_back({f[0], f[1], f[2], f[3]});
    CHECK_FALSE(determinant(m).is_zero());
    const auto e = e_structure(d, o, EStructureKind::Kruglikov);
    CHECK(e[0] == Scalar(-2) * o.Z);
    // I^3 = 0 on the special form, so the second construction is undefined.
    const Distribution2 s = dist("0,1,0,0 ; 1,0,0,-(p*q+p^2+q)");
    CHECK_THROWS_AS(e_structure(s, attach(s), EStructureKind::Kruglikov), DomainError);
}

TEST_CASE("Poisson brackets of invariants")
{
    const Distribution2 d = dist(kWorked);
    const InvariantList I = scalar_invariants(d);
    CHECK(poisson_of_invariants(d, 1, 5) == d.symplectic().poisson(I[0], I[4]));
    CHECK(poisson_of_invariants(d, 1, 5) == -poisson_of_invariants(d, 5, 1));
    CHECK_THROWS_AS(poisson_of_invariants(d, 0, 1), DomainError);
}
