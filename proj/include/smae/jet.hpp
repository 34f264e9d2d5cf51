#pragma once

#include "smae/invariants.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace smae::jet {

inline constexpr int kJetDimension = 64; // 4 base + 4 fiber + 16 + 40

/// Coordinates of J^2: x, p, y, q, then jets::all().
const std::vector<expr::Var>& coordinates();

/// A point of J^2 with values in coordinates() order.
struct JetPoint {
    std::array<mpq_class, kJetDimension> values;

    expr::Point to_point() const;
};

/// Small random rationals, deterministic in `seed`.
JetPoint random_jet_point(std::uint64_t seed);
/// The constant plane <Dx + u2 Dq, Dy + u3 Dp> with all jets zero; flat,
/// but off the Lagrangian locus u2 = u3.
JetPoint flat_jet_point(const mpq_class& u2 = 0, const mpq_class& u3 = 1);

/// <Dx + u1 Dp + u2 Dq, Dy + u3 Dp + u4 Dq> over the jet symbols.
Distribution2 generic_distribution();

/// I^1 ... I^7 of generic_distribution() as functions of the 60 jet symbols.
/// Computed once per process (this takes about a minute).
const std::array<Scalar, 7>& invariants_as_jet_functions();

/// Replaces each jet symbol by the corresponding derivative of `section`
/// (u1..u4 as functions on M).
Scalar specialize(const Scalar& f, const std::array<Scalar, 4>& section);

/// The fiber coordinates of a distribution that is a graph over (x, y), i.e.
/// d = <Dx + u1 Dp + u2 Dq, Dy + u3 Dp + u4 Dq>.
std::array<Scalar, 4> graph_section(const Distribution2& d);

/// Rank of the 7 x 60 Jacobian of the jet invariants at theta.
std::size_t independence_rank(const JetPoint& theta);

/// Vector field on G = (x, p, y, q, u1..u4) as 8 components.
using GField = std::array<Scalar, 8>;

/// X_H together with its induced action on 2-planes written as graphs
/// U = [[u1, u3], [u2, u4]] over the (x, y) block:
/// U' = J_fb + J_ff U - U J_bb - U J_bf U.
GField hamiltonian_lift(const SymplecticStructure& om, const Scalar& h);

/// Second prolongation; components in coordinates() order.
std::vector<Scalar> prolong2(const GField& v);

/// 64 - rank of {prolong2(hamiltonian_lift(m))(theta)} over all monomials m
/// in x, p, y, q of degree <= degree_bound.
int orbit_codimension(const JetPoint& theta, int degree_bound);

/// Chart change between u and the v coordinates of G:
/// v1 = -u4, v2 = u2 + u3, v3 = -u1, v4 = u1 u4 - u2 u3.
std::array<Scalar, 4> u_to_v(const std::array<Scalar, 4>& u);
/// (v2)^2 - 4 (v1 v3 - v4), equal to (u3 - u2)^2.
Scalar chart_discriminant(const std::array<Scalar, 4>& v);
/// u1 = -v3, u2 = (v2 - r)/2, u3 = (v2 + r)/2, u4 = -v1 for r^2 = chart_discriminant(v).
std::array<Scalar, 4> v_to_u(const std::array<Scalar, 4>& v, const Scalar& sqrt_discriminant);

} // namespace smae::jet
