#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

KForm form1(const char* text)
{
    return parse_form(text, ctx());
}

} // namespace

TEST_CASE("Darboux class")
{
    CHECK(darboux_class(KForm(1)) == 0);
    CHECK(darboux_class(form1("dx")) == 1);
    CHECK(darboux_class(form1("x*dy")) == 2);
    CHECK(darboux_class(form1("dy + x*dp")) == 3);
    CHECK(darboux_class(form1("x*dp + y*dq")) == 4);
    CHECK(darboux_class(form1("(1+x^2)*dx")) == 1);
}

TEST_CASE("Frobenius and kernels")
{
    CHECK(is_integrable({V("1,0,0,0"), V("0,1,0,0")}));
    CHECK_FALSE(is_integrable({V("1,0,0,0"), V("0,1,x,0")}));
    CHECK(first_prolongation(dist("1,0,0,0 ; 0,1,x,0")).size() == 3u);
    const KForm w = form1("dx^dp");
    const auto k = kernel(w);
    CHECK(k.size() == 2u);
    CHECK(same_span(k, {V("0,0,1,0"), V("0,0,0,1")}));
    CHECK(kernel(standard_symplectic()->omega()).empty());
}

TEST_CASE("examples of the special form")
{
    const Distribution2 e1 = dist("0,0,0,1 ; -q,y*q,1,0");
    const AttachedObjects o1 = attach(e1);
    for (const auto& v : scalar_invariants(e1, o1))
        CHECK(v.is_zero());
    CHECK_FALSE(detect_special_form(e1, o1).special);

    const Distribution2 e2 = dist("0,1,0,0 ; 1,0,0,-(p^2+x)");
    const auto l2 = linearizable(e2, attach(e2));
    CHECK(l2.verdict == Verdict::No);

    const Distribution2 nse = dist("0,1,0,0 ; 1,0,0,-(p*q+p^2+q)");
    const AttachedObjects on = attach(nse);
    CHECK(linearizable(nse, on).verdict == Verdict::No);
    CHECK(log_linearizable(nse, on).verdict == Verdict::No);

    const Distribution2 lin = dist("0,1,0,0 ; 1,0,0,-(y*q+x*p+1)");
    CHECK(linearizable(lin, attach(lin)).verdict == Verdict::Yes);
    const Distribution2 loglin = dist("0,1,0,0 ; 1,0,0,-(p*q+x*p+y^2*q+x)");
    CHECK(log_linearizable(loglin, attach(loglin)).verdict == Verdict::Yes);
    const Distribution2 flat = dist("0,1,0,0 ; 1,0,0,0");
    CHECK(linearizable(flat, attach(flat)).verdict == Verdict::Yes);
}

TEST_CASE("Hamiltonian characteristics")
{
    const Distribution2 d = dist("0,1,0,0 ; 1,0,0,-(x*p+y)");
    const AttachedObjects o = attach(d);
    const auto r = linearizable(d, o);
    CHECK(r.verdict == Verdict::Yes);
    REQUIRE(r.phi.has_value());
    const bool in_d = is_hamiltonian_characteristic(d.symplectic(), *r.phi, d, o.Z.is_zero() ? o.rho_dual : o.rho);
    const bool in_dual = is_hamiltonian_characteristic(d.symplectic(), *r.phi, d, o.Z.is_zero() ? o.rho : o.rho_dual);
    CHECK((in_d || in_dual));
    // A supplied candidate is used as is.
    const auto r2 = linearizable(d, o, S("x"));
    CHECK(r2.verdict == Verdict::Yes);
}

TEST_CASE("symmetries")
{
    // X_x = Dp preserves any special form whose coefficient ignores p.
    const Distribution2 d = dist("0,1,0,0 ; 1,0,0,-(x*y+q^2)");
    CHECK(check_symmetry(S("x"), d));
    CHECK_FALSE(check_symmetry(S("p^2"), dist("0,1,0,0 ; 1,0,0,-(p*q+x)")));
}

TEST_CASE("functional independence on M")
{
    CHECK(independence_on_M({S("x"), S("p"), S("x*p")}) == 2u);
    CHECK(independence_on_M({S("x+y"), S("p*q"), S("y"), S("q")}) == 4u);
    const InvariantList I = scalar_invariants(dist("0,x*y+1,1,p*q ; 1,1,0,x*y"));
    CHECK(independence_on_M({I[0], I[1], I[2], I[4]}) == 4u);
}

TEST_CASE("infinitesimal invariance under Hamiltonian flows")
{
    std::mt19937_64 rng(31);
    const Distribution2 d = dist("0,x*y+1,1,p*q ; 1,1,0,x*y");
    const InvariantList I = scalar_invariants(d);
    for (int t = 0; t < 3; ++t) {
        const Scalar h(random_poly(rng, 3, 3));
        const InvariantList var = invariant_variation(d, h);
        const VectorField xh = d.symplectic().hamiltonian_field(h);
        for (int k = 0; k < 9; ++k)
            CHECK(var[k] == xh.apply(I[k]));
    }
}
