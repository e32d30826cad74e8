#include "gradus/lefschetz.hpp"

#include "gradus/error.hpp"
#include "gradus/random.hpp"

namespace gradus {

Matrix mult_map(JacobianRing& ring, const Polynomial& g_in, unsigned j) {
    ring.require_smooth("mult_map");
    const FieldConfig& field = ring.field();
    const Polynomial g = g_in.reduced(field);
    if (g.num_vars() != ring.num_vars() || g.family() != ring.family()) {
        throw PreconditionError("multiplier must be a form in the same variables as F");
    }
    if (g.is_zero()) throw PreconditionError("multiplier is the zero polynomial");
    if (!g.is_homogeneous()) throw PreconditionError("multiplier must be homogeneous");
    const unsigned m = *g.degree();
    const auto& basis = MonomialBasis::get(ring.num_vars(), j);
    const auto source = ring.piece(j).complement();
    const std::size_t target_dim = ring.milnor_dim(j + m);
    Matrix out(target_dim, source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
        Polynomial mono(ring.num_vars(), ring.family());
        mono.add_term(basis[source[c]], 1);
        auto image = ring.quotient_coordinates(multiply(mono, g, field));
        check_invariant(image.size() == target_dim, "quotient coordinates match dim M(F)_{j+m}");
        for (std::size_t r = 0; r < target_dim; ++r) out(r, c) = image[r];
    }
    return out;
}

Polynomial power(const Polynomial& g, unsigned e, const FieldConfig& field) {
    Polynomial out = Polynomial::constant(g.num_vars(), 1, g.family()).reduced(field);
    for (unsigned i = 0; i < e; ++i) out = multiply(out, g, field);
    return out;
}

LefschetzProfile slp_check(JacobianRing& ring, const Polynomial& ell_in) {
    ring.require_smooth("slp_check");
    const Polynomial ell = ell_in.reduced(ring.field());
    if (ell.is_zero()) throw PreconditionError("linear form is zero");
    if (!ell.is_homogeneous() || *ell.degree() != 1) throw PreconditionError("l must be a linear form");
    LefschetzProfile profile;
    profile.form = ring.form();
    profile.ell = ell;
    profile.verdict = true;
    const unsigned t = static_cast<unsigned>(ring.socle_degree());
    for (unsigned k = 0; 2 * k < t; ++k) {
        Matrix m = mult_map(ring, power(ell, t - 2 * k, ring.field()), k);
        LefschetzStep step{k, m.cols(), m.rows(), rank(m, ring.field())};
        if (step.rank != step.source_dim || step.rank != step.target_dim) profile.verdict = false;
        profile.steps.push_back(step);
    }
    return profile;
}

SlpSearch slp_search(JacobianRing& ring, unsigned trials, std::uint64_t seed, std::int64_t bound) {
    if (trials < 1) throw PreconditionError("trials must be at least 1");
    ring.require_smooth("slp_search");
    SlpSearch result;
    for (unsigned i = 0; i < trials; ++i) {
        RandomStream rng(derive_seed(seed, i));
        Polynomial ell = random_form(rng, ring.field(), ring.num_vars(), 1, bound, ring.family());
        result.trials_used = i + 1;
        if (ell.is_zero()) {
            result.failed.push_back(ell);
            continue;
        }
        LefschetzProfile profile = slp_check(ring, ell);
        if (profile.verdict) {
            result.witness = ell;
            result.profile = std::move(profile);
            return result;
        }
        result.failed.push_back(ell);
    }
    return result;
}

}  // namespace gradus
