#pragma once

#include "smae/invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smae {

/// A basis of the distribution spanned by `fields` and their pairwise brackets.
std::vector<VectorField> first_prolongation(const std::vector<VectorField>& fields);
std::vector<VectorField> first_prolongation(const Distribution2& d);

/// Frobenius test: every bracket of spanning fields lies in the span.
bool is_integrable(const std::vector<VectorField>& fields);

/// {V : V _| a = 0} for a 2-form a.
std::vector<VectorField> kernel(const KForm& a);

/// Darboux class of a 1-form (generic-point rank).
int darboux_class(const KForm& a);

struct ClassResult {
    int r = 0;
    int r_dual = 0;
    std::string witness;
    std::string witness_dual;
};

ClassResult form_classes(const AttachedObjects& o);

struct SpecialFormResult {
    bool special = false;
    std::size_t prolongation_dim = 0;
    std::size_t prolongation_dim_dual = 0;
    bool integrable = false;
    bool integrable_dual = false;

    std::string certificate() const;
};

/// D is equivalent to <Dp, Dx - D Dq> iff D_(1) and D'_(1) are integrable.
SpecialFormResult detect_special_form(const Distribution2& d, const AttachedObjects& o);

enum class Verdict { Yes, No, Undecided };
const char* to_string(Verdict v);

struct LinearizationResult {
    Verdict verdict = Verdict::Undecided;
    std::string reason;
    /// The Hamiltonian characteristic that settled the middle case, if any.
    std::optional<Scalar> phi;
};

/// X_phi is nonzero, lies in `target`, and annihilates rho and d rho.
bool is_hamiltonian_characteristic(const SymplecticStructure& om, const Scalar& phi, const Distribution2& target,
                                   const KForm& rho);

/// Polynomial phi of total degree <= bound (no constant term) that is a
/// Hamiltonian characteristic of rho in `target`, found by linear algebra.
std::optional<Scalar> find_hamiltonian_characteristic(const SymplecticStructure& om, const Distribution2& target,
                                                      const KForm& rho, int degree_bound);

/// Equivalence to u_xy + a(x,y) u_x + b(x,y) u_y + c(x,y) = 0.
LinearizationResult linearizable(const Distribution2& d, const AttachedObjects& o,
                                 const std::optional<Scalar>& candidate_phi = std::nullopt, int degree_bound = 3);

/// Equivalence to v_xy + v_x v_y + a(x,y) v_x + b(x,y) v_y + c(x,y) = 0.
LinearizationResult log_linearizable(const Distribution2& d, const AttachedObjects& o);

/// X_H preserves D.
bool check_symmetry(const Scalar& H, const Distribution2& d);

/// Generic rank of the Jacobian of the given functions in (x, p, y, q).
std::size_t independence_on_M(const std::vector<Scalar>& values);

/// First-order change of I^1..I^9 when D is moved by the flow of X_H:
/// d/de I(<X_i + e [X_H, X_i]>) at e = 0. Invariance means this equals X_H(I).
InvariantList invariant_variation(const Distribution2& d, const Scalar& H);

} // namespace smae
