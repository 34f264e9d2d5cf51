#include "smae/verify.hpp"

#include "smae/error.hpp"
#include "smae/expr/context.hpp"
#include "smae/jet.hpp"

#include <algorithm>

namespace smae::verify {

bool SuiteResult::passed() const
{
    return failures() == 0;
}

std::size_t SuiteResult::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; }));
}

void SuiteResult::add(std::string name, bool ok, std::string detail)
{
    checks.push_back({std::move(name), ok, std::move(detail)});
}

namespace {

Scalar random_poly(std::mt19937_64& rng, int max_degree, int max_terms)
{
    std::uniform_int_distribution<int> coef(-3, 3), nterms(0, max_terms), deg(0, max_degree), var(0, 3);
    expr::Poly p;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        expr::Poly m(coef(rng));
        const int d = deg(rng);
        for (int k = 0; k < d; ++k)
            m *= expr::Poly::variable(static_cast<expr::Var>(var(rng)));
        p += m;
    }
    return Scalar(p);
}

} // namespace

Distribution2 random_distribution(std::mt19937_64& rng, int max_degree, int max_terms)
{
    for (int attempt = 0; attempt < 1000; ++attempt) {
        VectorField a, b;
        for (int i = 0; i < 4; ++i) {
            a[i] = random_poly(rng, max_degree, max_terms);
            b[i] = random_poly(rng, max_degree, max_terms);
        }
        try {
            return Distribution2(a, b);
        } catch (const DomainError&) {
        }
    }
    throw Error("internal: no random non-Lagrangian distribution found");
}

void check_identities(const Distribution2& d, const std::string& label, SuiteResult& out)
{
    const AttachedObjects o = attach(d);
    const SymplecticStructure& om = d.symplectic();
    const Scalar half(mpq_class(1, 2));
    auto add = [&](const std::string& name, bool ok) { out.add(name + " [" + label + "]", ok); };

    add("omega = P _| Omega / 2", half * insert_vvform(o.P, om.omega()) == o.omega);
    add("omega' = P' _| Omega / 2", half * insert_vvform(o.P_dual, om.omega()) == o.omega_dual);
    add("R = omega (x) Z", o.R == VectorValuedForm::decomposable(o.omega, o.Z));
    add("R' = omega' (x) Z'", o.R_dual == VectorValuedForm::decomposable(o.omega_dual, o.Z_dual));
    add("omega ^ (Z' _| omega) = 0", wedge(o.omega, insert(o.Z_dual, o.omega)).is_zero());
    add("omega' ^ (Z _| omega') = 0", wedge(o.omega_dual, insert(o.Z, o.omega_dual)).is_zero());
    const KForm zv = insert(o.Z - o.Z_dual, om.volume());
    add("(R - R') _| Omega = (Z - Z') _| Omega^2/2", insert_vvform(o.R - o.R_dual, om.omega()) == zv);
    add("(Z - Z') _| Omega^2/2 = d omega", zv == ext_d(o.omega));

    const InvariantList I = scalar_invariants(d, o);
    const KForm rw = insert_vvform(o.R, om.omega());
    add("I1 = *d(omega ^ rho)", I[0] == star_value(om, ext_d(wedge(o.omega, o.rho))));
    add("I1 = *(Omega ^ d rho)", I[0] == star_value(om, wedge(om.omega(), ext_d(o.rho))));
    add("I1 = *d(R _| Omega)", I[0] == star_value(om, ext_d(rw)));
    add("I1 = *(omega ^ d sigma)", I[0] == star_value(om, wedge(o.omega, ext_d(o.sigma))));
    add("I2 = -d sigma(Z, Z')", I[1] == -ext_d(o.sigma).evaluate({o.Z, o.Z_dual}));
    add("I3 = -d rho(Z, Z')", I[2] == -ext_d(o.rho).evaluate({o.Z, o.Z_dual}));

    // Z does not depend on the spanning pair.
    const Distribution2 other(d.first() + Scalar(2) * d.second(), d.second() - d.first(), d.symplectic_ptr());
    const AttachedObjects o2 = attach(other);
    add("Z independent of the spanning pair", o2.Z == o.Z && o2.Z_dual == o.Z_dual);
    add("Z in D'", o.dual.contains(o.Z) || o.Z.is_zero());
}

void check_involution(const Distribution2& d, const std::string& label, SuiteResult& out)
{
    const AttachedObjects o = attach(d);
    const InvariantList I = scalar_invariants(d, o);
    const InvariantList Ip = primed_invariants(d, o);
    auto add = [&](const std::string& name, bool ok) { out.add(name + " [" + label + "]", ok); };
    add("I1' = I1", Ip[0] == I[0]);
    add("I2' = I2", Ip[1] == I[1]);
    add("I3' = I2 - I3", Ip[2] == I[1] - I[2]);
    add("I4' = I4", Ip[3] == I[3]);
    add("I5' = I4 - I5", Ip[4] == I[3] - I[4]);
    add("I6' = I4 - 2 I5 + I6", Ip[5] == I[3] - Scalar(2) * I[4] + I[5]);
    add("I7' = -I7", Ip[6] == -I[6]);
    const InvariantList Id = scalar_invariants(o.dual);
    add("I(D') = I'", std::equal(Id.begin(), Id.begin() + 7, Ip.begin()));
    const AttachedObjects od = attach(o.dual);
    add("D'' = D", same_span(od.dual.fields(), d.fields()));
    add("attach(D') swaps Z, rho", od.Z == o.Z_dual && od.Z_dual == o.Z && od.rho == o.rho_dual &&
                                       od.rho_dual == o.rho && od.omega == o.omega_dual);
    const auto J = J_invariants(I, Ip);
    const auto Jd = J_invariants(Ip, I);
    add("J(D') = J(D)", J == Jd);
}

const std::vector<Table1Row>& table1_rows()
{
    static const std::vector<Table1Row> rows = {
        {"0,1,0,q ; 1,0,0,y*q", 0, 3},
        {"-1,y,0,0 ; 0,q,0,-1", 0, 4},
        {"0,1,0,q+1 ; 1,0,0,y*q", 1, 3},
        {"0,1,0,y+q^2*E ; 1,0,0,q", 1, 4},
        {"0,1,0,p ; 1,0,0,q", 2, 3},
        {"0,1,0,p ; 1,0,0,q^2", 2, 4},
        {"0,1,1,p^2 ; 1,y,0,0", 3, 3},
        {"0,1,1,p*q ; 1,y,0,0", 3, 4},
        {"0,1,1,p*q ; 1,x*y,0,0", 4, 4},
    };
    return rows;
}

SuiteResult identities(std::uint64_t seed, int count)
{
    SuiteResult out{"identities", {}};
    std::mt19937_64 rng(seed);
    for (int k = 0; k < count; ++k) {
        const Distribution2 d = random_distribution(rng);
        check_identities(d, d.to_string(), out);
    }
    return out;
}

SuiteResult involution(std::uint64_t seed, int count)
{
    SuiteResult out{"involution", {}};
    std::mt19937_64 rng(seed);
    for (int k = 0; k < count; ++k) {
        const Distribution2 d = random_distribution(rng);
        check_involution(d, d.to_string(), out);
    }
    return out;
}

SuiteResult table1()
{
    SuiteResult out{"table1", {}};
    const auto ctx = expr::VariableContext::base().with_symbol(expr::exp_minus_x_symbol());
    for (const auto& row : table1_rows()) {
        auto [a, b] = parse_distribution_fields(row.fields, ctx);
        const Distribution2 d(a, b);
        const AttachedObjects o = attach(d);
        const ClassResult c = form_classes(o);
        out.add(std::string("classes of ") + row.fields, c.r == row.r && c.r_dual == row.r_dual,
                "got (" + std::to_string(c.r) + "," + std::to_string(c.r_dual) + "), expected (" +
                    std::to_string(row.r) + "," + std::to_string(row.r_dual) + ")");
    }
    return out;
}

SuiteResult jet_rank(std::uint64_t seed, int points)
{
    SuiteResult out{"jet-rank", {}};
    for (int k = 0; k < points; ++k) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
        const std::size_t r = jet::independence_rank(jet::random_jet_point(s));
        out.add("independence rank at random point " + std::to_string(s), r == 7, "rank " + std::to_string(r));
    }
    return out;
}

SuiteResult orbit_codim(std::uint64_t seed, int degree_bound)
{
    SuiteResult out{"orbit-codim", {}};
    const int c = jet::orbit_codimension(jet::random_jet_point(seed), degree_bound);
    out.add("orbit codimension (degree bound " + std::to_string(degree_bound) + ")", c == 7,
            "codimension " + std::to_string(c));
    return out;
}

SuiteResult run(const std::string& scope, std::uint64_t seed, int degree_bound)
{
    if (scope == "identities")
        return identities(seed);
    if (scope == "involution")
        return involution(seed);
    if (scope == "table1")
        return table1();
    if (scope == "jet-rank")
        return jet_rank(seed);
    if (scope == "orbit-codim")
        return orbit_codim(seed, degree_bound);
    throw DomainError("unknown verification scope: " + scope);
}

} // namespace smae::verify
