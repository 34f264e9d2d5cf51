#include "smae/symplectic.hpp"

#include "smae/error.hpp"

namespace smae {

namespace {

constexpr int X = 0, P = 1, Y = 2, Q = 3;

unsigned bits(int i, int j)
{
    return (1u << i) | (1u << j);
}

} // namespace

SymplecticStructure::SymplecticStructure(const mpq_class& scale) : c_(scale), omega_(2), volume_(4)
{
    if (sgn(c_) == 0)
        throw DomainError("symplectic scale must be nonzero");
    // dp^dx = -dx^dp, dq^dy = -dy^dq in the sorted basis.
    omega_.coef(bits(X, P)) = Scalar(mpq_class(-c_));
    omega_.coef(bits(Y, Q)) = Scalar(mpq_class(-c_));
    volume_ = Scalar(mpq_class(1, 2)) * wedge(omega_, omega_);

    // Gamma as a constant matrix g[i][j] = dx_i-coefficient of D_j _| Omega.
    Matrix<mpq_class> g(4, std::vector<mpq_class>(4));
    for (int j = 0; j < 4; ++j) {
        KForm a = insert(VectorField::coordinate(j), omega_);
        for (int i = 0; i < 4; ++i)
            g[i][j] = a.coef(1u << i).constant_value();
    }
    for (int j = 0; j < 4; ++j) {
        std::vector<mpq_class> rhs(4, 0);
        rhs[j] = 1;
        auto sol = solve(g, rhs);
        if (!sol)
            throw Error("internal: degenerate symplectic form");
        for (int i = 0; i < 4; ++i)
            gamma_inv_[j][i] = Scalar((*sol)[i]);
    }

    // Hodge star: for each basis b_J solve a_I ^ *b_J = <a_I, b_J> V over all I.
    const mpq_class vol = volume_.value().constant_value();
    for (int k = 0; k <= 4; ++k) {
        const auto& mk = basis::masks(k);
        const auto& mc = basis::masks(4 - k);
        Matrix<mpq_class> w(mk.size(), std::vector<mpq_class>(mc.size()));
        for (std::size_t i = 0; i < mk.size(); ++i)
            for (std::size_t l = 0; l < mc.size(); ++l)
                w[i][l] = basis::wedge_sign(mk[i], mc[l]);
        star_[k].assign(mc.size(), std::vector<mpq_class>(mk.size()));
        for (std::size_t j = 0; j < mk.size(); ++j) {
            std::vector<mpq_class> rhs(mk.size());
            for (std::size_t i = 0; i < mk.size(); ++i)
                rhs[i] = pairing(KForm::basis_form(mk[i]), KForm::basis_form(mk[j])).constant_value() * vol;
            auto sol = solve(w, rhs);
            if (!sol)
                throw Error("internal: Hodge star system is singular");
            for (std::size_t l = 0; l < mc.size(); ++l)
                star_[k][l][j] = (*sol)[l];
        }
    }
}

Scalar SymplecticStructure::operator()(const VectorField& x, const VectorField& y) const
{
    return omega_.evaluate({x, y});
}

KForm SymplecticStructure::gamma(const VectorField& x) const
{
    return insert(x, omega_);
}

VectorField SymplecticStructure::gamma_inv(const KForm& a) const
{
    if (a.degree() != 1)
        throw DomainError("gamma_inv expects a 1-form");
    VectorField r;
    for (int j = 0; j < 4; ++j) {
        const Scalar& c = a.coef(1u << j);
        if (!c.is_zero())
            r = r + c * gamma_inv_[j];
    }
    return r;
}

KForm SymplecticStructure::gamma_ext(const MultiVector& w) const
{
    const int k = w.multiplicity();
    KForm out(k);
    for (unsigned m : basis::masks(k)) {
        const Scalar& c = w.coef(m);
        if (c.is_zero())
            continue;
        KForm prod = KForm::scalar(Scalar(1));
        for (int i = 0; i < 4; ++i)
            if (m & (1u << i))
                prod = wedge(prod, gamma(VectorField::coordinate(i)));
        out = out + c * prod;
    }
    return out;
}

MultiVector SymplecticStructure::gamma_ext_inv(const KForm& a) const
{
    const int k = a.degree();
    MultiVector out(k);
    for (unsigned m : basis::masks(k)) {
        const Scalar& c = a.coef(m);
        if (c.is_zero())
            continue;
        MultiVector prod(0);
        prod.coef(0) = Scalar(1);
        for (int i = 0; i < 4; ++i)
            if (m & (1u << i))
                prod = wedge(prod, MultiVector::from_field(gamma_inv_[i]));
        out = out + c * prod;
    }
    return out;
}

Scalar SymplecticStructure::pairing(const KForm& a, const KForm& b) const
{
    if (a.degree() != b.degree())
        throw DomainError("pairing of forms of different degrees");
    return insert_multi(gamma_ext_inv(b), a).value();
}

KForm SymplecticStructure::hodge_star(const KForm& b) const
{
    const int k = b.degree();
    const auto& mk = basis::masks(k);
    const auto& mc = basis::masks(4 - k);
    KForm out(4 - k);
    for (std::size_t j = 0; j < mk.size(); ++j) {
        const Scalar& c = b.coefficients()[j];
        if (c.is_zero())
            continue;
        for (std::size_t l = 0; l < mc.size(); ++l) {
            const mpq_class& s = star_[k][l][j];
            if (sgn(s) != 0)
                out.coef(mc[l]) += c.scaled(s);
        }
    }
    return out;
}

VectorField SymplecticStructure::hamiltonian_field(const Scalar& h) const
{
    return gamma_inv(ext_d(KForm::scalar(h)));
}

Scalar SymplecticStructure::poisson(const Scalar& f, const Scalar& g) const
{
    return hamiltonian_field(f).apply(g);
}

} // namespace smae
