#pragma once

#include "gradus/jacobian.hpp"

#include <cstdint>
#include <optional>

namespace gradus {

/// Matrix of multiplication by g (homogeneous of degree m) from M(F)_j to
/// M(F)_{j+m} in the canonical complement bases; column i is the image of
/// the i-th basis class.
Matrix mult_map(JacobianRing& ring, const Polynomial& g, unsigned j);

/// g^e computed in the ring's field.
Polynomial power(const Polynomial& g, unsigned e, const FieldConfig& field);

struct LefschetzStep {
    unsigned k = 0;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t rank = 0;
};

/// Ranks of l^(T-2k): M(F)_k -> M(F)_{T-k} for 0 <= 2k < T.
struct LefschetzProfile {
    Polynomial form;
    Polynomial ell;
    std::vector<LefschetzStep> steps;
    bool verdict = false;
};

LefschetzProfile slp_check(JacobianRing& ring, const Polynomial& ell);

struct SlpSearch {
    std::optional<Polynomial> witness;
    std::optional<LefschetzProfile> profile;
    unsigned trials_used = 0;
    std::vector<Polynomial> failed;  ///< linear forms tried before the witness
};

/// Trial i draws l from RandomStream(derive_seed(seed, i)) with coefficients
/// in [-bound, bound] (uniform residues over F_p) and stops at the first
/// full profile.
SlpSearch slp_search(JacobianRing& ring, unsigned trials, std::uint64_t seed, std::int64_t bound = 10);

}  // namespace gradus
