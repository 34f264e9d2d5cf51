#pragma once

#include "smae/expr/context.hpp"
#include "smae/expr/scalar.hpp"
#include "smae/linalg.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace smae {

using expr::Scalar;

// Basis of the fixed chart: index 0..3 = x, p, y, q. A basis k-form
// dx_{i1}^...^dx_{ik} (i1 < ... < ik) is identified with the bitmask of its
// indices; masks of one degree are ordered lexicographically on index lists.
// Forms evaluate with the determinant convention (dx^dp)(Dx, Dp) = 1.
namespace basis {

inline constexpr int kDim = 4;

const std::vector<unsigned>& masks(int degree);
int index_of(unsigned mask);
int degree_of(unsigned mask);
/// Sign of dx_A ^ dx_B relative to dx_{A|B}; 0 if A and B overlap.
int wedge_sign(unsigned a, unsigned b);
std::string name(unsigned mask);  // "dx^dp", "1" for the empty mask

} // namespace basis

class VectorField {
public:
    VectorField() = default;
    VectorField(Scalar cx, Scalar cp, Scalar cy, Scalar cq) : c_{std::move(cx), std::move(cp), std::move(cy), std::move(cq)} {}

    /// Coordinate field D_i.
    static VectorField coordinate(int i);

    const Scalar& operator[](int i) const { return c_[i]; }
    Scalar& operator[](int i) { return c_[i]; }

    bool is_zero() const;
    VectorField operator-() const;
    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator-(const VectorField& a, const VectorField& b);
    friend VectorField operator*(const Scalar& f, const VectorField& v);

    /// Derivation X(f) = sum_a X^a D_a f.
    Scalar apply(const Scalar& f) const;

    bool operator==(const VectorField& o) const { return c_ == o.c_; }
    bool operator!=(const VectorField& o) const { return !(*this == o); }

    /// Comma-separated components, re-parseable by parse_vector_field().
    std::string to_string() const;

private:
    std::array<Scalar, 4> c_;
};

VectorField lie_bracket(const VectorField& x, const VectorField& y);

class KForm {
public:
    KForm() : KForm(0) {}
    explicit KForm(int degree);
    static KForm scalar(const Scalar& f);
    static KForm basis_form(unsigned mask, Scalar coef = Scalar(1));
    static KForm differential(int i) { return basis_form(1u << i); }

    int degree() const { return degree_; }
    const Scalar& coef(unsigned mask) const { return c_[basis::index_of(mask)]; }
    Scalar& coef(unsigned mask) { return c_[basis::index_of(mask)]; }
    const std::vector<Scalar>& coefficients() const { return c_; }
    /// The value of a 0-form, or the coefficient of the volume monomial of a 4-form.
    const Scalar& value() const { return c_.at(0); }

    bool is_zero() const;
    KForm operator-() const;
    friend KForm operator+(const KForm& a, const KForm& b);
    friend KForm operator-(const KForm& a, const KForm& b);
    friend KForm operator*(const Scalar& f, const KForm& a);

    /// a(X1, ..., Xk).
    Scalar evaluate(const std::vector<VectorField>& args) const;

    bool operator==(const KForm& o) const { return degree_ == o.degree_ && c_ == o.c_; }
    bool operator!=(const KForm& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    int degree_;
    std::vector<Scalar> c_;
};

KForm wedge(const KForm& a, const KForm& b);
KForm ext_d(const KForm& a);
KForm insert(const VectorField& x, const KForm& a);
KForm lie_derivative(const VectorField& x, const KForm& a);

/// r-vector with coefficients on ordered basis wedges D_{i1}^...^D_{ir}.
class MultiVector {
public:
    explicit MultiVector(int r);
    static MultiVector from_field(const VectorField& x);

    int multiplicity() const { return r_; }
    const Scalar& coef(unsigned mask) const { return c_[basis::index_of(mask)]; }
    Scalar& coef(unsigned mask) { return c_[basis::index_of(mask)]; }

    friend MultiVector operator+(const MultiVector& a, const MultiVector& b);
    friend MultiVector operator*(const Scalar& f, const MultiVector& a);

private:
    int r_;
    std::vector<Scalar> c_;
};

MultiVector wedge(const MultiVector& a, const MultiVector& b);
MultiVector wedge(const std::vector<VectorField>& fields);
/// (X1^...^Xr) _| a = Xr _| (... _| (X1 _| a)); requires r <= deg a.
KForm insert_multi(const MultiVector& w, const KForm& a);

/// Vector-valued k-form sum_i w^i (x) D_i, stored by its four k-form components.
class VectorValuedForm {
public:
    explicit VectorValuedForm(int degree);
    static VectorValuedForm decomposable(const KForm& a, const VectorField& x);
    static VectorValuedForm identity();
    /// Endomorphism with m[i][j] = i-th component of the image of D_j.
    static VectorValuedForm from_matrix(const Matrix<Scalar>& m);

    int degree() const { return degree_; }
    const KForm& component(int i) const { return comp_[i]; }
    KForm& component(int i) { return comp_[i]; }

    /// w(X1, ..., Xk).
    VectorField evaluate(const std::vector<VectorField>& args) const;
    /// Degree-1 forms act as endomorphisms.
    VectorField apply(const VectorField& x) const { return evaluate({x}); }
    Matrix<Scalar> matrix() const;

    friend VectorValuedForm operator+(const VectorValuedForm& a, const VectorValuedForm& b);
    friend VectorValuedForm operator-(const VectorValuedForm& a, const VectorValuedForm& b);
    friend VectorValuedForm operator*(const Scalar& f, const VectorValuedForm& a);
    bool operator==(const VectorValuedForm& o) const { return degree_ == o.degree_ && comp_ == o.comp_; }
    bool operator!=(const VectorValuedForm& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    int degree_;
    std::array<KForm, 4> comp_;
};

/// Composition of endomorphisms (a o b).
VectorValuedForm compose(const VectorValuedForm& a, const VectorValuedForm& b);

/// Insertion of a vector-valued form into a form, by the shuffle-sum formula.
KForm insert_vvform(const VectorValuedForm& w, const KForm& b);

/// Parses "c1*dx^dp + c2*dy^dq" style text (all terms of one degree).
KForm parse_form(std::string_view text, const expr::VariableContext& ctx);
/// Parses "Xx, Xp, Xy, Xq".
VectorField parse_vector_field(std::string_view text, const expr::VariableContext& ctx);

} // namespace smae
