#include "smae/invariants.hpp"

#include "smae/error.hpp"

namespace smae {

Scalar star_value(const SymplecticStructure& om, const KForm& a)
{
    if (a.degree() != 4)
        throw DomainError("star_value expects a 4-form");
    return om.hodge_star(a).value();
}

InvariantList invariants_from_forms(const SymplecticStructure& om, const KForm& omega, const KForm& rho,
                                    const KForm& sigma)
{
    const KForm ds = ext_d(sigma);
    const KForm dr = ext_d(rho);
    auto st = [&](const KForm& a) { return star_value(om, a); };
    const KForm sr = wedge(sigma, rho);
    const KForm sdr = wedge(sigma, dr);
    InvariantList I;
    I[0] = st(wedge(omega, ds));
    I[1] = st(wedge(sr, ds));
    I[2] = st(wedge(sr, dr));
    I[3] = st(wedge(ds, ds));
    I[4] = st(wedge(ds, dr));
    I[5] = st(wedge(dr, dr));
    I[6] = st(wedge(sdr, om.hodge_star(wedge(sigma, ds))));
    I[7] = st(wedge(sdr, om.hodge_star(wedge(rho, ds))));
    I[8] = st(wedge(wedge(sigma, ds), om.hodge_star(wedge(rho, dr))));
    return I;
}

InvariantList scalar_invariants(const Distribution2& d, const AttachedObjects& o)
{
    return invariants_from_forms(d.symplectic(), o.omega, o.rho, o.sigma);
}

InvariantList scalar_invariants(const Distribution2& d)
{
    return scalar_invariants(d, attach(d));
}

InvariantList primed_invariants(const Distribution2& d, const AttachedObjects& o)
{
    return invariants_from_forms(d.symplectic(), o.omega_dual, o.rho_dual, -o.sigma);
}

InvariantList primed_invariants(const Distribution2& d)
{
    return primed_invariants(d, attach(d));
}

std::array<Scalar, 7> J_invariants(const InvariantList& I, const InvariantList& Ip)
{
    return {
        I[0],
        I[1],
        I[2] * Ip[2],
        I[3],
        I[4] * Ip[4],
        I[5] - I[4],
        I[6] * Ip[6],
    };
}

// ---------------------------------------------------------------- operator A

OperatorKind validate_operator(const VectorValuedForm& a, const SymplecticStructure& om)
{
    if (a.degree() != 1)
        throw DomainError("operator must be a vector-valued 1-form");
    std::array<VectorField, 4> img;
    for (int i = 0; i < 4; ++i)
        img[i] = a.apply(VectorField::coordinate(i));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (om(img[i], VectorField::coordinate(j)) != om(VectorField::coordinate(i), img[j]))
                throw DomainError("operator is not Omega-selfadjoint");
    const VectorValuedForm id = VectorValuedForm::identity();
    if (a == id || a == Scalar(-1) * id)
        throw DomainError("operator must differ from +-id");
    const VectorValuedForm sq = compose(a, a);
    if (sq == id)
        return OperatorKind::Hyperbolic;
    if (sq == Scalar(-1) * id)
        return OperatorKind::Elliptic;
    throw DomainError("operator square is neither id nor -id");
}

OperatorForms operator_forms(const VectorValuedForm& a, const SymplecticStructure& om)
{
    const KForm aw = insert_vvform(a, om.omega());
    const KForm s = om.hodge_star(ext_d(aw));
    const KForm t = om.gamma(a.apply(om.gamma_inv(s)));
    const Scalar quarter(mpq_class(1, 4));
    return OperatorForms{Scalar(mpq_class(1, 2)) * aw, quarter * s, -(quarter * t)};
}

InvariantList tildeJ_invariants(const VectorValuedForm& a, const SymplecticStructure& om)
{
    validate_operator(a, om);
    const auto f = operator_forms(a, om);
    const KForm& th = f.theta;
    const KForm& s = f.sigma;
    const KForm& r = f.varrho;
    const KForm ds = ext_d(s);
    const KForm dr = ext_d(r);
    auto st = [&](const KForm& x) { return star_value(om, x); };
    const KForm sr = wedge(s, r);
    const KForm sdr = wedge(s, dr);
    InvariantList J;
    J[0] = st(wedge(th, ds));
    J[1] = st(wedge(sr, ds));
    J[2] = st(wedge(sr, dr)).pow(2);
    J[3] = st(wedge(ds, ds));
    J[4] = st(wedge(ds, dr)).pow(2);
    J[5] = st(wedge(dr, dr));
    J[6] = st(wedge(sdr, om.hodge_star(wedge(s, ds)))).pow(2);
    J[7] = st(wedge(sdr, om.hodge_star(wedge(r, ds))));
    J[8] = st(wedge(wedge(s, ds), om.hodge_star(wedge(r, dr))));
    return J;
}

std::optional<std::array<Scalar, 6>> contact_ratios(const InvariantList& jt)
{
    if (jt[0].is_zero())
        return std::nullopt;
    const Scalar j2 = jt[0] * jt[0];
    const Scalar j4 = j2 * j2;
    return std::array<Scalar, 6>{jt[1] / j2, jt[2] / j4, jt[3] / j2, jt[4] / j4, jt[5] / j2, jt[6] / (j4 * j2)};
}

// ---------------------------------------------------------------- special invariants

std::optional<Scalar> lie_eigenvalue(const VectorField& x, const KForm& a)
{
    const KForm l = lie_derivative(x, a);
    const auto& ca = a.coefficients();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].is_zero())
            continue;
        const Scalar lambda = l.coefficients()[i] / ca[i];
        if (l == lambda * a)
            return lambda;
        return std::nullopt;
    }
    return std::nullopt;
}

SpecialInvariants special_invariants(const AttachedObjects& o)
{
    return SpecialInvariants{lie_eigenvalue(o.Z, o.rho_dual), lie_eigenvalue(o.Z_dual, o.rho)};
}

SpecialInvariants special_invariants_from_coefficient(const Scalar& D)
{
    const Scalar dp = D.total_derivative(expr::kVarP);
    const Scalar dq = D.total_derivative(expr::kVarQ);
    SpecialInvariants s;
    if (!dq.is_zero())
        s.I12 = -(dp * dq.total_derivative(expr::kVarQ) / dq);
    if (!dp.is_zero())
        s.I21 = -(dq * dp.total_derivative(expr::kVarP) / dp);
    return s;
}

std::optional<Scalar> special_form_coefficient(const Distribution2& d)
{
    Matrix<Scalar> m;
    for (const auto& f : d.fields())
        m.push_back({f[0], f[1], f[2], f[3]});
    auto piv = rref(m);
    if (piv != std::vector<std::size_t>{0, 1})
        return std::nullopt;
    if (!m[0][2].is_zero() || !m[1][2].is_zero() || !m[1][3].is_zero())
        return std::nullopt;
    return -m[0][3];
}

// ---------------------------------------------------------------- invariant fields

namespace {

std::array<std::pair<const KForm*, const KForm*>, 4> zij_pairs(const AttachedObjects& o)
{
    return {{{&o.rho, &o.rho}, {&o.rho, &o.rho_dual}, {&o.rho_dual, &o.rho}, {&o.rho_dual, &o.rho_dual}}};
}

} // namespace

std::array<VectorField, 4> Zij_fields(const SymplecticStructure& om, const AttachedObjects& o)
{
    std::array<VectorField, 4> out;
    auto pairs = zij_pairs(o);
    for (int k = 0; k < 4; ++k)
        out[k] = om.gamma_inv(om.hodge_star(wedge(*pairs[k].first, ext_d(*pairs[k].second))));
    return out;
}

std::array<VectorField, 4> Zij_fields_by_volume(const SymplecticStructure& om, const AttachedObjects& o)
{
    const auto& m3 = basis::masks(3);
    Matrix<Scalar> m(4, std::vector<Scalar>(4));
    for (int j = 0; j < 4; ++j) {
        KForm c = insert(VectorField::coordinate(j), om.volume());
        for (int i = 0; i < 4; ++i)
            m[i][j] = c.coef(m3[i]);
    }
    std::array<VectorField, 4> out;
    auto pairs = zij_pairs(o);
    for (int k = 0; k < 4; ++k) {
        KForm target = wedge(*pairs[k].first, ext_d(*pairs[k].second));
        std::vector<Scalar> rhs(4);
        for (int i = 0; i < 4; ++i)
            rhs[i] = target.coef(m3[i]);
        auto sol = solve(m, rhs);
        if (!sol)
            throw Error("internal: volume insertion is singular");
        out[k] = VectorField((*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]);
    }
    return out;
}

std::array<VectorField, 4> e_structure(const Distribution2& d, const AttachedObjects& o, EStructureKind kind)
{
    if (kind == EStructureKind::Zij)
        return Zij_fields(d.symplectic(), o);
    const InvariantList I = scalar_invariants(d, o);
    const Scalar den1 = Scalar(2) * (I[2] - I[1]);
    const Scalar den2 = Scalar(2) * I[2];
    if (den1.is_zero())
        throw DomainError("Kruglikov e-structure undefined: I^3 = I^2");
    if (den2.is_zero())
        throw DomainError("Kruglikov e-structure undefined: I^3 = 0");
    const VectorField br = lie_bracket(o.Z, o.Z_dual);
    return {
        Scalar(-2) * o.Z,
        Scalar(-2) * o.Z_dual,
        den1.inverse() * o.P.apply(br),
        den2.inverse() * o.P_dual.apply(br),
    };
}

Scalar poisson_of_invariants(const Distribution2& d, int k, int l)
{
    if (k < 1 || k > 9 || l < 1 || l > 9)
        throw DomainError("invariant index out of range 1..9");
    const InvariantList I = scalar_invariants(d);
    return d.symplectic().poisson(I[k - 1], I[l - 1]);
}

} // namespace smae
