#include "gradus/subspace.hpp"

#include "gradus/error.hpp"

namespace gradus {

GradedSubspace GradedSubspace::span(const FieldConfig& field, std::size_t num_vars, unsigned degree, Family family,
                                    const Matrix& rows) {
    if (rows.cols() != graded_dim(num_vars, degree)) throw InternalError("GradedSubspace::span: width mismatch");
    GradedSubspace s;
    s.field_ = field;
    s.num_vars_ = num_vars;
    s.degree_ = degree;
    s.family_ = family;
    EchelonForm e = rref(rows, field);
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
}

GradedSubspace GradedSubspace::span_of(const FieldConfig& field, std::size_t num_vars, unsigned degree,
                                       Family family, const std::vector<Polynomial>& polys) {
    Matrix rows(0, graded_dim(num_vars, degree));
    for (const auto& p : polys) {
        if (p.family() != family || p.num_vars() != num_vars) {
            throw PreconditionError("span: polynomial does not live in the requested ambient space");
        }
        auto coords = p.reduced(field).coordinates(degree);
        rows.append_row(coords);
    }
    return span(field, num_vars, degree, family, rows);
}

GradedSubspace GradedSubspace::from_reduced(const FieldConfig& field, std::size_t num_vars, unsigned degree,
                                            Family family, Matrix reduced) {
    if (reduced.cols() != graded_dim(num_vars, degree)) throw InternalError("from_reduced: width mismatch");
    GradedSubspace s;
    s.field_ = field;
    s.num_vars_ = num_vars;
    s.degree_ = degree;
    s.family_ = family;
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        std::size_t lead = 0;
        while (lead < reduced.cols() && sgn(reduced(r, lead)) == 0) ++lead;
        check_invariant(lead < reduced.cols() && reduced(r, lead) == 1, "reduced basis rows have leading 1");
        check_invariant(s.pivots_.empty() || s.pivots_.back() < lead, "pivots strictly increase");
        for (std::size_t other = 0; other < reduced.rows(); ++other) {
            if (other != r) check_invariant(sgn(reduced(other, lead)) == 0, "pivot columns are unit vectors");
        }
        s.pivots_.push_back(lead);
    }
    s.basis_ = std::move(reduced);
    return s;
}

GradedSubspace GradedSubspace::zero(const FieldConfig& field, std::size_t num_vars, unsigned degree, Family family) {
    return span(field, num_vars, degree, family, Matrix(0, graded_dim(num_vars, degree)));
}

GradedSubspace GradedSubspace::full(const FieldConfig& field, std::size_t num_vars, unsigned degree, Family family) {
    GradedSubspace s;
    s.field_ = field;
    s.num_vars_ = num_vars;
    s.degree_ = degree;
    s.family_ = family;
    std::size_t n = graded_dim(num_vars, degree);
    s.basis_ = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) s.pivots_.push_back(i);
    return s;
}

std::vector<std::size_t> GradedSubspace::complement() const {
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
        if (next < pivots_.size() && pivots_[next] == c) {
            ++next;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

std::vector<Polynomial> GradedSubspace::basis_polynomials() const {
    std::vector<Polynomial> out;
    for (std::size_t r = 0; r < basis_.rows(); ++r)
        out.push_back(Polynomial::from_coordinates(num_vars_, family_, degree_, basis_.row(r)));
    return out;
}

std::vector<Rational> GradedSubspace::reduce(std::span<const Rational> v) const {
    if (v.size() != ambient_dim()) throw InternalError("GradedSubspace::reduce: length mismatch");
    std::vector<Rational> out(v.begin(), v.end());
    if (field_.is_prime_field())
        for (auto& x : out) x = field_.normalize(x);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Rational factor = out[pivots_[i]];
        if (sgn(factor) == 0) continue;
        auto row = basis_.row(i);
        for (std::size_t c = pivots_[i]; c < out.size(); ++c) {
            if (sgn(row[c]) != 0) out[c] -= factor * row[c];
        }
        if (field_.is_prime_field())
            for (std::size_t c = pivots_[i]; c < out.size(); ++c) out[c] = field_.normalize(out[c]);
    }
    return out;
}

bool GradedSubspace::contains(std::span<const Rational> v) const {
    auto r = reduce(v);
    for (const auto& x : r)
        if (sgn(x) != 0) return false;
    return true;
}

bool GradedSubspace::contains(const Polynomial& p) const {
    if (p.family() != family_ || p.num_vars() != num_vars_) return false;
    if (p.is_zero()) return true;
    if (*p.degree() != degree_ || !p.is_homogeneous()) return false;
    return contains(p.reduced(field_).coordinates(degree_));
}

namespace {

void check_same_ambient(const GradedSubspace& a, const GradedSubspace& b) {
    if (!(a.field() == b.field()) || a.num_vars() != b.num_vars() || a.degree() != b.degree() ||
        a.family() != b.family()) {
        throw PreconditionError("subspaces live in different ambient spaces");
    }
}

}  // namespace

GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b) {
    check_same_ambient(a, b);
    Matrix rows = a.basis();
    for (std::size_t r = 0; r < b.dim(); ++r) rows.append_row(b.basis().row(r));
    return GradedSubspace::span(a.field(), a.num_vars(), a.degree(), a.family(), rows);
}

GradedSubspace coordinate_annihilator(const GradedSubspace& a) {
    Matrix k = a.dim() == 0 ? Matrix::identity(a.ambient_dim()) : kernel(a.basis(), a.field());
    return GradedSubspace::from_reduced(a.field(), a.num_vars(), a.degree(), a.family(), std::move(k));
}

GradedSubspace subspace_intersect(const GradedSubspace& a, const GradedSubspace& b) {
    check_same_ambient(a, b);
    // ann(A ∩ B) = ann(A) + ann(B)
    return coordinate_annihilator(subspace_sum(coordinate_annihilator(a), coordinate_annihilator(b)));
}

}  // namespace gradus
