#pragma once

#include "smae/exterior.hpp"

namespace smae {

/// Omega = c (dp^dx + dq^dy) on the canonical chart.
class SymplecticStructure {
public:
    explicit SymplecticStructure(const mpq_class& scale = 1);

    const mpq_class& scale() const { return c_; }
    const KForm& omega() const { return omega_; }
    /// V = Omega^2 / 2.
    const KForm& volume() const { return volume_; }

    /// Omega(X, Y).
    Scalar operator()(const VectorField& x, const VectorField& y) const;

    KForm gamma(const VectorField& x) const;
    VectorField gamma_inv(const KForm& a) const;
    KForm gamma_ext(const MultiVector& w) const;
    MultiVector gamma_ext_inv(const KForm& a) const;

    /// <a, b> = Gamma^-1(b) _| a.
    Scalar pairing(const KForm& a, const KForm& b) const;
    /// The form *b with a ^ *b = <a, b> V for every a.
    KForm hodge_star(const KForm& b) const;

    VectorField hamiltonian_field(const Scalar& h) const;
    /// {f, g} = X_f(g).
    Scalar poisson(const Scalar& f, const Scalar& g) const;

private:
    mpq_class c_;
    KForm omega_;
    KForm volume_;
    // gamma_inv_[j] = Gamma^-1(dx_j) as a vector field with constant entries.
    std::array<VectorField, 4> gamma_inv_;
    // star_[k][i][j]: coefficient of the i-th basis (4-k)-form in *(j-th basis k-form).
    std::array<Matrix<mpq_class>, 5> star_;
};

} // namespace smae
