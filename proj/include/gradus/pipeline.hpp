#pragma once

#include "gradus/apolarity.hpp"
#include "gradus/lefschetz.hpp"
#include "gradus/singular.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace gradus {

struct PipelineOptions {
    std::uint64_t seed = 0;
    std::int64_t coeff_bound = 10;
    unsigned trials = 5;
    unsigned max_perturbations = 10;
    CiOptions ci;
};

/// Search for a smooth cubic G in (J_{F,3})^perp.
struct UMembership {
    Polynomial form;
    SmoothnessCertificate form_certificate;
    bool in_u = false;
    std::optional<std::size_t> perp_dim;
    std::optional<Polynomial> witness;  ///< normalised G
    std::optional<SmoothnessCertificate> witness_certificate;
    unsigned trials_used = 0;
    std::string reason;  ///< why membership was not certified
};

/// Trial i samples G = sum c_j B_j over the perp basis B scaled to integer
/// entries, with c_j drawn from RandomStream(derive_seed(seed, i)).
UMembership membership_u(const Polynomial& f, const FieldConfig& field, const PipelineOptions& options);

/// Re-checks a witness: G smooth and <b, G> = 0 for the canonical basis of J_{F,deg G}.
bool verify_u_witness(const Polynomial& f, const Polynomial& g, const FieldConfig& field);

struct PairCertificate {
    Polynomial form;
    std::optional<Polynomial> witness;        ///< normalised G (construct_pair only)
    std::optional<Polynomial> quadric_prime;  ///< Q' (construct_pair only)
    std::optional<Polynomial> quadric;        ///< the Q of the pair
    unsigned perturbations_used = 0;
    std::vector<std::string> log;  ///< one line per attempted Q

    SmoothnessCertificate form_smooth;
    std::optional<SmoothnessCertificate> y_smooth;
    std::optional<Polynomial> c;
    std::optional<SmoothnessCertificate> c_smooth;
    std::optional<std::size_t> colon1_dim;
    std::optional<bool> c_matches_witness;
    std::optional<bool> colon_invariant;

    /// Corollary items: (i) F and Y smooth, (ii) C smooth, (iii) colon in degree 1 is zero.
    bool item_i = false;
    bool item_ii = false;
    bool item_iii = false;
    std::string item_i_detail;
    std::string item_ii_detail;
    std::string item_iii_detail;

    bool complete() const noexcept { return item_i && item_ii && item_iii; }
};

/// Runs the three corollary checks on (F, Q) independently; failures are
/// recorded per item.
PairCertificate verify_corollary(const Polynomial& f, const Polynomial& q, const FieldConfig& field,
                                 const CiOptions& ci = {});

/// Q' from the witness G, then Q = Q' + q for random q in J_{F,2} until Y is
/// certified smooth. Perturbation i uses derive_seed(seed, i); the colon
/// invariance probe uses derive_seed(derive_seed(seed, 1), 0). `quadric` is
/// unset when no Q within options.max_perturbations gave a smooth Y.
PairCertificate construct_pair(const Polynomial& f, const Polynomial& g, const FieldConfig& field,
                               const PipelineOptions& options);

struct RankAttempt {
    Polynomial form;
    std::size_t rank = 0;
    std::optional<Verdict> y_verdict;
};

struct Theorem14Report {
    Polynomial form;
    std::size_t target_rank = 0;  ///< dim M(F)_1
    std::vector<RankAttempt> ell_attempts;
    std::vector<RankAttempt> q_attempts;
    std::optional<Polynomial> ell;
    std::optional<Polynomial> quadric;
    std::optional<SmoothnessCertificate> y_smooth;
    std::optional<std::size_t> colon1_dim;
    bool ell_found() const noexcept { return ell.has_value(); }
    bool q_found() const noexcept { return quadric.has_value(); }
};

/// l-stream seeds derive_seed(derive_seed(seed, 0), i), Q-stream seeds
/// derive_seed(derive_seed(seed, 1), i); each stream gets options.trials draws.
Theorem14Report theorem14_check(const Polynomial& f, const FieldConfig& field, const PipelineOptions& options);

struct DeformationRow {
    Rational t;
    Polynomial form;
    Verdict smooth = Verdict::Inconclusive;
    std::size_t perp_dim = 0;
    bool in_u = false;
    std::optional<Polynomial> witness;
    /// Max coefficient of the Fermat cubic's normal form modulo the perp;
    /// zero exactly when the Fermat cubic lies in the perp.
    Rational fermat_residual;
};

struct DeformationReport {
    Polynomial base;  ///< the special singular cubic
    Polynomial direction;
    unsigned direction_draws = 0;
    std::vector<DeformationRow> rows;  ///< t = 0, then 1, 1/2, ..., 1/steps
    std::optional<Rational> smallest_t_in_u;
};

/// F_t = Q_special + t R for a seeded random smooth cubic R.
DeformationReport deformation_experiment(const FieldConfig& field, unsigned steps, const PipelineOptions& options);

struct GoldenCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ExampleReport {
    std::vector<GoldenCheck> checks;
    bool all_pass() const;
};

/// The golden values for the special cubic threefold.
ExampleReport reproduce_example(const FieldConfig& field);

/// Sum of y_i^3 (or x_i^3) in `num_vars` variables.
Polynomial fermat(std::size_t num_vars, unsigned d, Family family = Family::Primal);

}  // namespace gradus
