#pragma once

#include "smae/dist.hpp"

#include <array>
#include <optional>
#include <string>

namespace smae {

using InvariantList = std::array<Scalar, 9>;

/// Value of *a for a 4-form a.
Scalar star_value(const SymplecticStructure& om, const KForm& a);

/// I^1 ... I^9 from the invariant forms omega, rho and sigma = rho - rho'.
InvariantList invariants_from_forms(const SymplecticStructure& om, const KForm& omega, const KForm& rho,
                                    const KForm& sigma);

InvariantList scalar_invariants(const Distribution2& d);
InvariantList scalar_invariants(const Distribution2& d, const AttachedObjects& o);
/// The invariants of D' (computed from the swapped attached objects).
InvariantList primed_invariants(const Distribution2& d, const AttachedObjects& o);
InvariantList primed_invariants(const Distribution2& d);

/// J^1 ... J^7.
std::array<Scalar, 7> J_invariants(const InvariantList& I, const InvariantList& Ip);

/// Algebraic type of an Omega-selfadjoint operator A.
enum class OperatorKind { Hyperbolic /* A^2 = id */, Elliptic /* A^2 = -id */ };

/// Throws DomainError unless A is Omega-selfadjoint with A^2 = +-id, A != +-id.
OperatorKind validate_operator(const VectorValuedForm& a, const SymplecticStructure& om);

struct OperatorForms {
    KForm theta;  // A _| Omega / 2
    KForm sigma;  // *d(A _| Omega) / 4
    KForm varrho; // -Gamma A Gamma^-1 (*d(A _| Omega)) / 4
};

OperatorForms operator_forms(const VectorValuedForm& a, const SymplecticStructure& om);

/// J~^1 ... J~^9 of an operator A (validated first).
InvariantList tildeJ_invariants(const VectorValuedForm& a, const SymplecticStructure& om);

/// J~^2/(J~^1)^2, J~^3/(J~^1)^4, J~^4/(J~^1)^2, J~^5/(J~^1)^4, J~^6/(J~^1)^2,
/// J~^7/(J~^1)^6. Empty when J~^1 vanishes identically.
std::optional<std::array<Scalar, 6>> contact_ratios(const InvariantList& jt);

/// Weights w with J~^k -> c^-w J~^k under Omega -> c Omega (k = 1..7).
inline constexpr std::array<int, 7> kTildeJScalingWeights = {1, 2, 4, 2, 4, 2, 6};

/// Eigenvalue l with L_X(a) = l a, if a is nonzero and X preserves its direction.
std::optional<Scalar> lie_eigenvalue(const VectorField& x, const KForm& a);

struct SpecialInvariants {
    std::optional<Scalar> I12; // L_Z(rho') = I12 rho'
    std::optional<Scalar> I21; // L_Z'(rho) = I21 rho
};

/// I^12 and I^21 from the Lie-derivative relations (meaningful for
/// distributions of the special form <Dp, Dx - D Dq>).
SpecialInvariants special_invariants(const AttachedObjects& o);
/// The same from the closed formulas -D_p D_qq / D_q and -D_q D_pp / D_p.
SpecialInvariants special_invariants_from_coefficient(const Scalar& D);

/// If d = <Dp, Dx - D Dq> (as a span), returns D.
std::optional<Scalar> special_form_coefficient(const Distribution2& d);

/// Z00, Z01, Z10, Z11 = Gamma^-1 *(a ^ d b) for (a, b) in {rho, rho'}^2.
std::array<VectorField, 4> Zij_fields(const SymplecticStructure& om, const AttachedObjects& o);
/// The same fields from Zij _| Omega^2 / 2 = a ^ d b.
std::array<VectorField, 4> Zij_fields_by_volume(const SymplecticStructure& om, const AttachedObjects& o);

enum class EStructureKind { Zij, Kruglikov };

/// Four invariant vector fields; throws DomainError on vanishing denominators.
std::array<VectorField, 4> e_structure(const Distribution2& d, const AttachedObjects& o, EStructureKind kind);

/// {I^k, I^l} for 1 <= k, l <= 9.
Scalar poisson_of_invariants(const Distribution2& d, int k, int l);

} // namespace smae
