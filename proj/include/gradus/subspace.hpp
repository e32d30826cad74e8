#pragma once

#include "gradus/matrix.hpp"
#include "gradus/polynomial.hpp"

#include <vector>

namespace gradus {

/// A subspace of the graded piece S_k (or its dual), stored as the canonical
/// reduced row-echelon basis in monomial coordinates. Two subspaces are equal
/// exactly when their canonical bases are equal.
class GradedSubspace {
public:
    GradedSubspace() = default;

    /// Row space of `rows` (each row a coordinate vector in S_degree).
    static GradedSubspace span(const FieldConfig& field, std::size_t num_vars, unsigned degree, Family family,
                               const Matrix& rows);
    static GradedSubspace span_of(const FieldConfig& field, std::size_t num_vars, unsigned degree, Family family,
                                  const std::vector<Polynomial>& polys);
    /// Wrap a matrix that is already in reduced row-echelon form. The form is
    /// checked; no elimination is performed.
    static GradedSubspace from_reduced(const FieldConfig& field, std::size_t num_vars, unsigned degree, Family family,
                                       Matrix reduced);
    static GradedSubspace zero(const FieldConfig& field, std::size_t num_vars, unsigned degree, Family family);
    static GradedSubspace full(const FieldConfig& field, std::size_t num_vars, unsigned degree, Family family);

    const FieldConfig& field() const noexcept { return field_; }
    std::size_t num_vars() const noexcept { return num_vars_; }
    unsigned degree() const noexcept { return degree_; }
    Family family() const noexcept { return family_; }

    std::size_t dim() const noexcept { return basis_.rows(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t codim() const noexcept { return ambient_dim() - dim(); }
    bool is_full() const noexcept { return dim() == ambient_dim(); }

    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    /// Non-pivot columns in increasing order: the monomials whose classes form
    /// the canonical basis of the quotient S_k / (this subspace).
    std::vector<std::size_t> complement() const;

    std::vector<Polynomial> basis_polynomials() const;

    /// Normal form of `v` modulo the subspace: the unique representative that
    /// vanishes on every pivot column.
    std::vector<Rational> reduce(std::span<const Rational> v) const;
    bool contains(std::span<const Rational> v) const;
    bool contains(const Polynomial& p) const;

    friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
        return a.field_ == b.field_ && a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ &&
               a.family_ == b.family_ && a.basis_ == b.basis_;
    }

private:
    FieldConfig field_;
    std::size_t num_vars_ = 0;
    unsigned degree_ = 0;
    Family family_ = Family::Primal;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace subspace_intersect(const GradedSubspace& a, const GradedSubspace& b);

/// Annihilator of the subspace under the standard coordinate dot product
/// (same family and degree).
GradedSubspace coordinate_annihilator(const GradedSubspace& a);

}  // namespace gradus
