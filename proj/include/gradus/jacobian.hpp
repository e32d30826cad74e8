#pragma once

#include "gradus/subspace.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gradus {

enum class Verdict { Smooth, Singular, Inconclusive };
const char* to_string(Verdict v);

/// Evidence behind a smoothness verdict.
struct SmoothnessCertificate {
    Verdict verdict = Verdict::Inconclusive;
    /// Degree at which the relevant ideal piece was shown to fill S_k.
    std::optional<unsigned> degree;
    /// Field in which the rank computation that decided the verdict ran.
    std::string witness_field;
    /// Field over which the verdict is a theorem ("rational" for promoted
    /// mod-p fullness certificates).
    std::string certifies;
    /// A singular point, when one was found (coordinates in `point_field`).
    std::optional<std::vector<Rational>> singular_point;
    std::string point_field;
    std::string note;
};

/// Graded pieces of the Jacobian ideal J_F over a field, computed on demand
/// and cached. Not safe for concurrent use; copy per thread.
class JacobianRing {
public:
    /// Throws PreconditionError for zero, inhomogeneous or constant forms.
    JacobianRing(Polynomial form, FieldConfig field);

    const Polynomial& form() const noexcept { return form_; }
    const FieldConfig& field() const noexcept { return field_; }
    std::size_t num_vars() const noexcept { return form_.num_vars(); }
    Family family() const noexcept { return form_.family(); }
    unsigned form_degree() const noexcept { return degree_; }
    /// T = (n + 1)(d - 2).
    int socle_degree() const noexcept;
    const std::vector<Polynomial>& partials() const noexcept { return partials_; }

    /// J_{F,k}.
    const GradedSubspace& piece(unsigned k);
    std::size_t milnor_dim(unsigned k);

    /// Smoothness of {F = 0}, computed once.
    const SmoothnessCertificate& smoothness();
    bool is_smooth() { return smoothness().verdict == Verdict::Smooth; }
    /// Throws PreconditionError naming `operation` unless F is smooth-certified.
    void require_smooth(const std::string& operation);

    /// Coordinates of g (homogeneous of degree k) in the canonical basis of
    /// M(F)_k: normal form modulo J_{F,k}, restricted to complement monomials.
    std::vector<Rational> quotient_coordinates(const Polynomial& g);

private:
    Polynomial form_;
    FieldConfig field_;
    unsigned degree_;
    std::vector<Polynomial> partials_;
    std::map<unsigned, GradedSubspace> pieces_;
    std::optional<SmoothnessCertificate> smoothness_;
};

/// J_{F,k} as a canonical subspace of S_k.
GradedSubspace jacobian_graded(const Polynomial& f, unsigned k, const FieldConfig& field);

std::size_t milnor_dim(const Polynomial& f, unsigned k, const FieldConfig& field);

struct MilnorProfile {
    Polynomial form;
    int socle_degree = 0;
    std::vector<std::size_t> dims;  ///< dims[k] = dim M(F)_k for k = 0..k_max
};

MilnorProfile milnor_profile(const Polynomial& f, unsigned k_max, const FieldConfig& field);
MilnorProfile milnor_profile(JacobianRing& ring, unsigned k_max);

/// Coefficients of (1 - t^(d-1))^(n+1) / (1 - t)^(n+1), degrees 0..T.
std::vector<std::uint64_t> smooth_reference_dims(std::size_t n, unsigned d);

/// Smoothness of the hypersurface {F = 0} via fullness of J_{F,T+1}.
SmoothnessCertificate is_smooth_hypersurface(const Polynomial& f, const FieldConfig& field);

/// Degree-k piece of the ideal generated by homogeneous `generators`.
GradedSubspace ideal_graded(const std::vector<Polynomial>& generators, unsigned k, const FieldConfig& field);

struct EmptinessResult {
    bool certified_empty = false;
    unsigned degree = 0;  ///< certifying degree, or the last degree examined
    std::string witness_field;
    std::string certifies;
    /// codim of I_k in S_k over the witness field, for each examined degree.
    std::vector<std::pair<unsigned, std::size_t>> codims;
};

struct SweepOptions {
    /// Also confirm fullness one degree above the certifying degree.
    bool verify_monotone = false;
};

/// Projective Nullstellensatz sweep: V(I) is empty iff I_k = S_k for some k.
/// Examines k = max generator degree .. k_max and stops at the first full
/// degree. Fullness modulo p certifies fullness over the rationals.
EmptinessResult projective_empty(const std::vector<Polynomial>& generators, unsigned k_max, const FieldConfig& field,
                                 SweepOptions options = {});

struct CiOptions {
    unsigned k_max = 12;
    /// Accept degrees and variable counts other than cubic/quadric in 5 variables.
    bool allow_general = false;
    bool verify_monotone = false;
    /// Prime for the point-search falsification path (rational mode).
    std::uint32_t search_prime = 7;
};

/// Generators {F, Q} together with the 2x2 minors of the Jacobian matrix of (F, Q).
std::vector<Polynomial> ci_singular_generators(const Polynomial& f, const Polynomial& q);

/// Smoothness of the complete intersection Y = {F = Q = 0}.
SmoothnessCertificate ci_smooth(const Polynomial& f, const Polynomial& q, const FieldConfig& field,
                                const CiOptions& options = {});

/// Every point of P^n(F_p) (first nonzero coordinate 1) at which all the
/// given polynomials vanish modulo p. Stops after `limit` hits when nonzero.
std::vector<std::vector<std::uint32_t>> common_zeros_mod_p(const std::vector<Polynomial>& polys, std::uint32_t p,
                                                           std::size_t limit = 0);

/// Forms with integer coefficients and content 1 spanning the same lines.
Polynomial primitive_integer_form(const Polynomial& p);

}  // namespace gradus
