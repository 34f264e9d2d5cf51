#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

KForm random_form(std::mt19937_64& rng, int degree)
{
    KForm a(degree);
    for (unsigned m : basis::masks(degree))
        a.coef(m) = Scalar(random_poly(rng, 2, 2));
    return a;
}

} // namespace

TEST_CASE("canonical form and Gamma")
{
    const SymplecticStructure om(3);
    const KForm dx = KForm::differential(0), dp = KForm::differential(1), dy = KForm::differential(2),
                dq = KForm::differential(3);
    CHECK(om.omega() == Scalar(3) * (wedge(dp, dx) + wedge(dq, dy)));
    CHECK(om.volume() == Scalar(mpq_class(1, 2)) * wedge(om.omega(), om.omega()));
    CHECK(om.gamma(VectorField::coordinate(1)) == Scalar(3) * dx);
    CHECK(om.gamma(VectorField::coordinate(0)) == Scalar(-3) * dp);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 5; ++t) {
        const VectorField x(Scalar(random_poly(rng, 2, 2)), Scalar(random_poly(rng, 2, 2)), Scalar(random_poly(rng, 2, 2)),
                            Scalar(random_poly(rng, 2, 2)));
        CHECK(om.gamma_inv(om.gamma(x)) == x);
        CHECK(om.gamma(x) == insert(x, om.omega()));
    }
}

TEST_CASE("Hodge star: defining identity and involution")
{
    for (int c : {1, 2, -1}) {
        const SymplecticStructure om(c);
        std::mt19937_64 rng(2 + c);
        for (int k = 0; k <= 4; ++k) {
            const KForm a = random_form(rng, k), b = random_form(rng, k);
            CHECK(wedge(a, om.hodge_star(b)) == om.pairing(a, b) * om.volume());
            CHECK(om.hodge_star(om.hodge_star(b)) == b);
        }
    }
}

TEST_CASE("Poisson bracket")
{
    const SymplecticStructure om(1);
    const Scalar x = S("x"), p = S("p"), y = S("y"), q = S("q");
    CHECK(om.poisson(x, p) == Scalar(1));
    CHECK(om.poisson(y, q) == Scalar(1));
    CHECK(om.poisson(x, q).is_zero());
    CHECK(om.hamiltonian_field(x) == VectorField::coordinate(1));
    std::mt19937_64 rng(9);
    for (int t = 0; t < 5; ++t) {
        const Scalar f(random_poly(rng, 3, 3)), g(random_poly(rng, 3, 3)), h(random_poly(rng, 3, 3));
        CHECK(om.poisson(f, g) == -om.poisson(g, f));
        CHECK(om.poisson(f, g * h) == om.poisson(f, g) * h + g * om.poisson(f, h));
        const Scalar jac = om.poisson(f, om.poisson(g, h)) + om.poisson(g, om.poisson(h, f)) + om.poisson(h, om.poisson(f, g));
        CHECK(jac.is_zero());
        CHECK(lie_derivative(om.hamiltonian_field(f), om.omega()).is_zero());
    }
}

TEST_CASE("scaling Omega rescales Hamiltonian fields")
{
    const SymplecticStructure o1(1), o2(2);
    const Scalar h = S("x*q + p^2*y");
    CHECK(o2.hamiltonian_field(h) == Scalar(mpq_class(1, 2)) * o1.hamiltonian_field(h));
}
