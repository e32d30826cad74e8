#pragma once

#include "gradus/jacobian.hpp"

#include <optional>
#include <string_view>

namespace gradus {

/// A finite reduced set of projective points. Each point has its first
/// nonzero coordinate equal to 1; no point repeats.
struct PointSet {
    std::size_t num_vars = 0;
    std::vector<std::vector<Rational>> points;

    std::size_t size() const noexcept { return points.size(); }
};

/// Normalise and deduplicate-check raw coordinates. Throws PreconditionError
/// for a zero point, a wrong length or a repeated point.
PointSet make_point_set(std::size_t num_vars, const std::vector<std::vector<Rational>>& raw, const FieldConfig& field);

/// One point per line, comma-separated integers or rationals; '#' starts a
/// comment. Throws ParseError on malformed input.
PointSet parse_point_set(std::string_view text, const FieldConfig& field,
                         std::optional<std::size_t> num_vars = std::nullopt);

std::string format_point(const std::vector<Rational>& point);

/// e_0, ..., e_n.
PointSet coordinate_points(std::size_t num_vars);

/// Sum of x_i x_j x_k over i < j < k for d = 3. The d >= 4 family as printed
/// in the source mixes degrees and is rejected after a homogeneity check.
/// `n` is the projective dimension (n + 1 variables).
Polynomial special_q(std::size_t n, unsigned d);

/// Candidates at which F and all first partials vanish.
PointSet singular_points(const Polynomial& f, const PointSet& candidates, const FieldConfig& field);

struct SingularSearch {
    std::uint32_t prime = 0;
    std::uint64_t scanned = 0;  ///< |P^n(F_p)|
    PointSet points;            ///< coordinates are residues in [0, p)
};

/// Every point of P^n(F_p) where F and its partials vanish modulo p.
SingularSearch brute_singular_search(const Polynomial& f, std::uint32_t p);

/// True iff the Hessian of the dehomogenisation in the chart x_chart = 1 is
/// nonsingular at the point. The chart defaults to the first nonzero
/// coordinate. Throws PreconditionError when the point is not singular.
bool is_node(const Polynomial& f, const std::vector<Rational>& point, const FieldConfig& field,
             std::optional<std::size_t> chart = std::nullopt);

/// Row i holds the monomials of S_k evaluated at point i.
Matrix evaluation_matrix(const PointSet& points, unsigned k, const FieldConfig& field);

struct DefectReport {
    unsigned k = 0;
    std::size_t points = 0;
    std::size_t rank_theta = 0;
    std::size_t defect = 0;
};

DefectReport defect(const PointSet& points, unsigned k, const FieldConfig& field);

struct LemmaCheck {
    unsigned k = 0;
    std::size_t lhs = 0;        ///< dim M(F)_{T-k}
    std::size_t reference = 0;  ///< dim M(F_s)_k for a smooth F_s
    std::size_t defect = 0;
    std::size_t rhs = 0;
    bool holds = false;
};

/// Compares dim M(F)_{T-k} with dim M(F_s)_k + defect_k for 0 <= k <= nd - 2n - 1.
/// Every point must be a singular point of F.
LemmaCheck check_lemma_defect(const Polynomial& f, const PointSet& points, unsigned k, const FieldConfig& field);

}  // namespace gradus
