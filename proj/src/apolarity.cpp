#include "gradus/apolarity.hpp"

#include "gradus/error.hpp"

namespace gradus {

namespace {

// Row i of the result is basis row i scaled by the pairing weights a!.
Matrix weighted(const Matrix& rows, std::size_t num_vars, unsigned degree, const FieldConfig& field) {
    const auto& weights = MonomialBasis::get(num_vars, degree).factorial_weights();
    Matrix out = rows;
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c)
            if (sgn(out(r, c)) != 0) out(r, c) = field.normalize(out(r, c) * Rational(weights[c]));
    return out;
}

void check_pairing_characteristic(const FieldConfig& field, unsigned k) {
    if (!field.characteristic_exceeds(k)) {
        throw PreconditionError("apolarity in degree " + std::to_string(k) + " needs characteristic > " +
                                std::to_string(k));
    }
}

}  // namespace

GradedSubspace perp_graded(const GradedSubspace& e) {
    const unsigned k = e.degree();
    check_pairing_characteristic(e.field(), k);
    const Family other = opposite(e.family());
    if (e.dim() == 0) return GradedSubspace::full(e.field(), e.num_vars(), k, other);
    Matrix ker = kernel(weighted(e.basis(), e.num_vars(), k, e.field()), e.field());
    GradedSubspace out = GradedSubspace::from_reduced(e.field(), e.num_vars(), k, other, std::move(ker));
    check_invariant(out.dim() + e.dim() == e.ambient_dim(), "dim E + dim E^perp = dim S_k");
    return out;
}

Rational SocleFunctional::operator()(const Polynomial& g, const FieldConfig& field) const {
    if (g.is_zero()) return 0;
    const auto& basis = MonomialBasis::get(form.num_vars(), degree);
    Rational total = 0;
    for (const auto& [m, c] : g.terms()) {
        if (m.degree() != degree) throw PreconditionError("socle functional applied to a form of the wrong degree");
        const Rational& w = coefficients[basis.index_of(m)];
        if (sgn(w) != 0) total += w * c;
    }
    return field.normalize(total);
}

SocleFunctional socle_functional(JacobianRing& ring) {
    ring.require_smooth("socle_functional");
    const int t = ring.socle_degree();
    if (t < 0) throw PreconditionError("socle degree is negative for forms of degree < 2");
    const auto& top = ring.piece(static_cast<unsigned>(t));
    if (top.codim() != 1) {
        throw PreconditionError("dim M(F)_T = " + std::to_string(top.codim()) + ", expected 1");
    }
    GradedSubspace ann = coordinate_annihilator(top);
    SocleFunctional lambda;
    lambda.form = ring.form();
    lambda.degree = static_cast<unsigned>(t);
    auto row = ann.basis().row(0);
    lambda.coefficients.assign(row.begin(), row.end());
    return lambda;
}

Matrix macaulay_pairing_matrix(JacobianRing& ring, unsigned j) {
    SocleFunctional lambda = socle_functional(ring);
    const unsigned t = lambda.degree;
    if (j > t) throw PreconditionError("pairing degree j must lie in [0, T]");
    const std::size_t nv = ring.num_vars();
    const auto& left = MonomialBasis::get(nv, j);
    const auto& right = MonomialBasis::get(nv, t - j);
    const auto& top = MonomialBasis::get(nv, t);
    auto rows = ring.piece(j).complement();
    auto cols = ring.piece(t - j).complement();
    Matrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            out(r, c) = lambda.coefficients[top.index_of(left[rows[r]] * right[cols[c]])];
    return out;
}

Polynomial annihilator_quadric(JacobianRing& ring, const Polynomial& g_in) {
    SocleFunctional lambda = socle_functional(ring);
    const FieldConfig& field = ring.field();
    const Polynomial g = g_in.reduced(field);
    if (g.family() != opposite(ring.family())) throw PreconditionError("G must be a form in the dual variables");
    if (g.num_vars() != ring.num_vars()) throw PreconditionError("G has the wrong number of variables");
    if (g.is_zero()) throw PreconditionError("G must be nonzero");
    if (!g.is_homogeneous()) throw PreconditionError("G must be homogeneous");
    const unsigned k = *g.degree();
    const unsigned t = lambda.degree;
    if (k > t) throw PreconditionError("deg G exceeds the socle degree");
    check_pairing_characteristic(field, k);
    const std::size_t nv = ring.num_vars();

    // G must pair to zero with J_{F,k}.
    const auto& jk = ring.piece(k);
    Matrix g_row(0, graded_dim(nv, k));
    g_row.append_row(g.coordinates(k));
    Matrix g_weighted = weighted(g_row, nv, k, field);
    for (std::size_t r = 0; r < jk.dim(); ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < jk.ambient_dim(); ++c) s += jk.basis()(r, c) * g_weighted(0, c);
        if (sgn(field.normalize(s)) != 0) throw PreconditionError("G is not in (J_{F,k})^perp");
    }

    // Hyperplane H = G^perp in S_k.
    Matrix hyper = kernel(g_weighted, field);

    const unsigned m = t - k;
    const auto& quad_basis = MonomialBasis::get(nv, m);
    const auto& k_basis = MonomialBasis::get(nv, k);
    const auto& top = MonomialBasis::get(nv, t);
    Matrix system(hyper.rows(), quad_basis.size());
    for (std::size_t h = 0; h < hyper.rows(); ++h) {
        for (std::size_t u = 0; u < quad_basis.size(); ++u) {
            Rational s = 0;
            for (std::size_t b = 0; b < k_basis.size(); ++b) {
                const Rational& hb = hyper(h, b);
                if (sgn(hb) == 0) continue;
                const Rational& w = lambda.coefficients[top.index_of(quad_basis[u] * k_basis[b])];
                if (sgn(w) != 0) s += hb * w;
            }
            system(h, u) = field.normalize(s);
        }
    }
    Matrix solutions = kernel(system, field);
    const auto& jm = ring.piece(m);
    Matrix remainders(0, quad_basis.size());
    for (std::size_t r = 0; r < solutions.rows(); ++r) remainders.append_row(jm.reduce(solutions.row(r)));
    EchelonForm quotient = rref(remainders, field);
    if (quotient.rank() != 1 || solutions.rows() != jm.dim() + 1) {
        throw PreconditionError("annihilator solution space modulo J_{F," + std::to_string(m) + "} has dimension " +
                                std::to_string(quotient.rank()) + ", expected 1");
    }
    return Polynomial::from_coordinates(nv, ring.family(), m, quotient.reduced.row(0));
}

GradedSubspace colon_graded(JacobianRing& ring, const Polynomial& q_in, unsigned k) {
    const FieldConfig& field = ring.field();
    const Polynomial q = q_in.reduced(field);
    const std::size_t nv = ring.num_vars();
    if (q.family() != ring.family() || q.num_vars() != nv) {
        throw PreconditionError("Q must be a form in the same variables as F");
    }
    if (!q.is_homogeneous()) throw PreconditionError("Q must be homogeneous");
    if (q.is_zero()) return GradedSubspace::full(field, nv, k, ring.family());
    const unsigned m = *q.degree();
    const auto& target = ring.piece(k + m);
    const auto keep = target.complement();
    if (keep.empty()) return GradedSubspace::full(field, nv, k, ring.family());
    const auto& source = MonomialBasis::get(nv, k);
    Matrix images(source.size(), keep.size());
    for (std::size_t a = 0; a < source.size(); ++a) {
        Polynomial prod(nv, ring.family());
        for (const auto& [mono, c] : q.terms()) prod.add_term(source[a] * mono, c);
        auto reduced = target.reduce(prod.coordinates(k + m));
        for (std::size_t i = 0; i < keep.size(); ++i) images(a, i) = reduced[keep[i]];
    }
    Matrix ker = kernel(images.transpose(), field);
    return GradedSubspace::from_reduced(field, nv, k, ring.family(), std::move(ker));
}

CubicC extract_c(JacobianRing& ring, const Polynomial& q) {
    ring.require_smooth("extract_c");
    if (q.is_zero()) throw PreconditionError("zero polynomial rejected");
    if (!q.is_homogeneous()) throw PreconditionError("Q must be homogeneous");
    const int t = ring.socle_degree();
    const int m = static_cast<int>(*q.degree());
    if (m > t) throw PreconditionError("deg Q exceeds the socle degree");
    const unsigned k = static_cast<unsigned>(t - m);
    GradedSubspace colon = colon_graded(ring, q, k);
    GradedSubspace perp = perp_graded(colon);
    if (perp.dim() != 1) {
        throw PreconditionError("perp dimension " + std::to_string(perp.dim()) + " (degenerate pair, expected 1)");
    }
    return CubicC{perp.basis_polynomials().front(), ring.form(), q.reduced(ring.field())};
}

}  // namespace gradus
