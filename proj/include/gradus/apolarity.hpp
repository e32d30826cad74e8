#pragma once

#include "gradus/jacobian.hpp"

namespace gradus {

/// Annihilator of E under the polar pairing: the subspace of the opposite
/// family pairing to zero with all of E. Needs characteristic > deg.
GradedSubspace perp_graded(const GradedSubspace& e);

/// The functional on S_T that vanishes on J_{F,T}, with its first nonzero
/// coordinate equal to 1. For smooth F it spans the dual of M(F)_T.
struct SocleFunctional {
    Polynomial form;
    unsigned degree = 0;                 ///< T
    std::vector<Rational> coefficients;  ///< one per monomial of S_T

    /// lambda(g) for g homogeneous of degree T.
    Rational operator()(const Polynomial& g, const FieldConfig& field) const;
};

SocleFunctional socle_functional(JacobianRing& ring);

/// Matrix of (a, b) -> lambda(a * b) on the canonical monomial bases of
/// M(F)_j (rows) and M(F)_{T-j} (columns).
Matrix macaulay_pairing_matrix(JacobianRing& ring, unsigned j);

/// The quadric Q' (degree T - deg G) with lambda(Q' * b) = 0 for every b in
/// the hyperplane G^perp of S_{deg G}. Unique modulo J_F; returned reduced
/// against the canonical complement and normalised to leading coefficient 1.
Polynomial annihilator_quadric(JacobianRing& ring, const Polynomial& g);

/// Degree-k piece of the colon ideal (J_F : Q) = {a in S_k : a Q in J_F}.
GradedSubspace colon_graded(JacobianRing& ring, const Polynomial& q, unsigned k);

/// For a pair (F, Q), the generator of ((J_F : Q)_{T - deg Q})^perp, normalised
/// to leading coefficient 1. Throws PreconditionError when that perp is not
/// a line.
struct CubicC {
    Polynomial c;
    Polynomial form;
    Polynomial quadric;
};

CubicC extract_c(JacobianRing& ring, const Polynomial& q);

}  // namespace gradus
