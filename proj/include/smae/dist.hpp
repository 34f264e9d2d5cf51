#pragma once

#include "smae/symplectic.hpp"

#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace smae {

/// Rank of a family of vector fields over the coefficient field.
std::size_t span_rank(const std::vector<VectorField>& fields);
/// v lies in the span of `fields` (generic-point sense).
bool span_contains(const std::vector<VectorField>& fields, const VectorField& v);
bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b);
/// A linearly independent subfamily spanning the same distribution.
std::vector<VectorField> independent_subset(const std::vector<VectorField>& fields);

/// Rescales a field by a function so that its components become polynomials
/// without a common factor. Fields carrying a radical are returned unchanged.
VectorField clear_denominators(const VectorField& v);

using SymplecticPtr = std::shared_ptr<const SymplecticStructure>;
SymplecticPtr standard_symplectic(const mpq_class& scale = 1);

/// Non-Lagrangian 2-distribution <X1, X2>.
class Distribution2 {
public:
    /// Throws DomainError if X1 ^ X2 = 0 or Omega(X1, X2) = 0 identically.
    Distribution2(VectorField x1, VectorField x2, SymplecticPtr omega = standard_symplectic());

    const VectorField& first() const { return x1_; }
    const VectorField& second() const { return x2_; }
    std::vector<VectorField> fields() const { return {x1_, x2_}; }
    const SymplecticStructure& symplectic() const { return *omega_; }
    const SymplecticPtr& symplectic_ptr() const { return omega_; }

    /// Omega(X1, X2).
    const Scalar& pairing() const { return w_; }
    bool contains(const VectorField& v) const { return span_contains(fields(), v); }

    std::string to_string() const;

private:
    VectorField x1_, x2_;
    SymplecticPtr omega_;
    Scalar w_;
};

Distribution2 ortho_complement(const Distribution2& d);

/// Omega-orthogonal projector onto D along D'.
VectorValuedForm projector(const Distribution2& d);

struct AttachedObjects {
    Distribution2 dual;
    VectorValuedForm P, P_dual;
    VectorField Z, Z_dual;
    KForm omega, omega_dual;
    KForm rho, rho_dual, sigma;
    VectorValuedForm R, R_dual;
};

AttachedObjects attach(const Distribution2& d);

/// A = P - P'.
VectorValuedForm operator_A(const Distribution2& d);

struct MAECoefficients {
    Scalar S, A, B, C, D;
};

enum class MAEType { Hyperbolic, Elliptic, Parabolic };

/// B^2 - 4AC + 4SD.
Scalar discriminant(const MAECoefficients& m);
/// Hyperbolic unless the discriminant vanishes or is minus a square (or a
/// negative constant).
MAEType classify(const MAECoefficients& m);
const char* to_string(MAEType t);

/// Exact square root of a radical-free function, if it is a perfect square.
std::optional<Scalar> rational_sqrt(const Scalar& f);

struct MAEDistributions {
    Distribution2 D, D_dual;
    /// Set when the discriminant is not a perfect square.
    std::shared_ptr<const expr::RatFun> radicand;
};

/// The characteristic distributions of a hyperbolic symplectic MAE.
/// Throws UnsupportedTypeError for elliptic or parabolic input and
/// DomainError if all of S, A, B, C vanish.
MAEDistributions mae_to_distributions(const MAECoefficients& m, SymplecticPtr omega = standard_symplectic());

/// "Xx,Xp,Xy,Xq ; Yx,Yp,Yy,Yq".
std::pair<VectorField, VectorField> parse_distribution_fields(std::string_view text, const expr::VariableContext& ctx);
/// "S;A;B;C;D".
MAECoefficients parse_mae(std::string_view text, const expr::VariableContext& ctx);
/// 16 expressions row-major over (Dx, Dp, Dy, Dq): entry (i, j) is the
/// i-th component of the image of the j-th basis field.
VectorValuedForm parse_operator(std::string_view text, const expr::VariableContext& ctx);

} // namespace smae
