#include "gradus/pipeline.hpp"

#include "gradus/error.hpp"
#include "gradus/random.hpp"

#include <algorithm>

namespace gradus {

namespace {

Polynomial random_combination(RandomStream& rng, const std::vector<Polynomial>& basis, const FieldConfig& field,
                              std::int64_t bound, std::size_t num_vars, Family family) {
    Polynomial out(num_vars, family);
    for (const auto& b : basis) {
        Rational c = random_scalar(rng, field, bound);
        if (sgn(c) != 0) out = out + b.scaled(c);
    }
    return out.reduced(field);
}

std::vector<Polynomial> integer_basis(const GradedSubspace& space) {
    std::vector<Polynomial> out;
    for (const auto& b : space.basis_polynomials())
        out.push_back(space.field().is_prime_field() ? b : primitive_integer_form(b));
    return out;
}

std::string describe(const SmoothnessCertificate& c) {
    std::string s = to_string(c.verdict);
    if (c.degree) s += " at degree " + std::to_string(*c.degree);
    return s;
}

}  // namespace

Polynomial fermat(std::size_t num_vars, unsigned d, Family family) {
    Polynomial out(num_vars, family);
    for (std::size_t i = 0; i < num_vars; ++i) out.add_term(Monomial::variable(num_vars, i, d), 1);
    return out;
}

UMembership membership_u(const Polynomial& f, const FieldConfig& field, const PipelineOptions& options) {
    UMembership u;
    u.form = f.reduced(field);
    JacobianRing ring(u.form, field);
    u.form_certificate = ring.smoothness();
    if (u.form_certificate.verdict != Verdict::Smooth) {
        u.reason = u.form_certificate.verdict == Verdict::Singular ? "F singular" : "F smoothness inconclusive";
        return u;
    }
    const unsigned d = ring.form_degree();
    GradedSubspace perp = perp_graded(ring.piece(d));
    u.perp_dim = perp.dim();
    const auto basis = integer_basis(perp);
    for (unsigned i = 0; i < options.trials; ++i) {
        u.trials_used = i + 1;
        RandomStream rng(derive_seed(options.seed, i));
        Polynomial g = random_combination(rng, basis, field, options.coeff_bound, f.num_vars(), Family::Dual);
        if (g.is_zero()) continue;
        SmoothnessCertificate cert = is_smooth_hypersurface(g, field);
        if (cert.verdict == Verdict::Smooth) {
            u.in_u = true;
            u.witness = normalize_leading(g, field);
            u.witness_certificate = std::move(cert);
            check_invariant(verify_u_witness(u.form, *u.witness, field), "sampled witness lies in the perp");
            return u;
        }
    }
    u.reason = "no smooth element of the perp in " + std::to_string(options.trials) + " trials";
    return u;
}

bool verify_u_witness(const Polynomial& f, const Polynomial& g, const FieldConfig& field) {
    if (g.is_zero() || !g.is_homogeneous() || g.family() != Family::Dual) return false;
    const unsigned k = *g.degree();
    for (const auto& b : jacobian_graded(f.reduced(field), k, field).basis_polynomials())
        if (sgn(polar_pair(b, g, field)) != 0) return false;
    return is_smooth_hypersurface(g, field).verdict == Verdict::Smooth;
}

PairCertificate verify_corollary(const Polynomial& f_in, const Polynomial& q_in, const FieldConfig& field,
                                 const CiOptions& ci) {
    PairCertificate pc;
    const Polynomial f = f_in.reduced(field);
    const Polynomial q = q_in.reduced(field);
    pc.form = f;
    pc.quadric = q;
    JacobianRing ring(f, field);
    pc.form_smooth = ring.smoothness();
    const bool f_smooth = pc.form_smooth.verdict == Verdict::Smooth;

    if (!f_smooth) {
        pc.item_i_detail = "F: " + describe(pc.form_smooth);
    } else {
        try {
            pc.y_smooth = ci_smooth(f, q, field, ci);
            pc.item_i = pc.y_smooth->verdict == Verdict::Smooth;
            pc.item_i_detail = "Y: " + describe(*pc.y_smooth);
        } catch (const PreconditionError& e) {
            pc.item_i_detail = e.what();
        }
    }

    if (!f_smooth) {
        pc.item_ii_detail = "F not smooth";
    } else {
        try {
            CubicC c = extract_c(ring, q);
            pc.c = c.c;
            pc.c_smooth = is_smooth_hypersurface(c.c, field);
            pc.item_ii = pc.c_smooth->verdict == Verdict::Smooth;
            pc.item_ii_detail = "C: " + describe(*pc.c_smooth);
        } catch (const PreconditionError& e) {
            pc.item_ii_detail = e.what();
        }
    }

    try {
        pc.colon1_dim = colon_graded(ring, q, 1).dim();
        pc.item_iii = *pc.colon1_dim == 0;
        pc.item_iii_detail = "dim (J_F : Q)_1 = " + std::to_string(*pc.colon1_dim);
    } catch (const PreconditionError& e) {
        pc.item_iii_detail = e.what();
    }
    return pc;
}

PairCertificate construct_pair(const Polynomial& f_in, const Polynomial& g, const FieldConfig& field,
                               const PipelineOptions& options) {
    const Polynomial f = f_in.reduced(field);
    JacobianRing ring(f, field);
    ring.require_smooth("construct_pair");
    const Polynomial witness = normalize_leading(g.reduced(field), field);
    const Polynomial q_prime = annihilator_quadric(ring, g);
    const unsigned m = *q_prime.degree();
    const auto ideal_basis = integer_basis(ring.piece(m));

    std::optional<Polynomial> chosen;
    std::vector<std::string> log;
    unsigned used = 0;
    for (unsigned attempt = 0; attempt <= options.max_perturbations; ++attempt) {
        Polynomial q = q_prime;
        if (attempt > 0) {
            RandomStream rng(derive_seed(options.seed, attempt - 1));
            q = (q_prime + random_combination(rng, ideal_basis, field, options.coeff_bound, f.num_vars(),
                                              ring.family()))
                    .reduced(field);
            used = attempt;
        }
        SmoothnessCertificate y = ci_smooth(f, q, field, options.ci);
        log.push_back("attempt " + std::to_string(attempt) + ": Q = " + to_string(q) + "; Y " + describe(y));
        if (y.verdict == Verdict::Smooth) {
            chosen = q;
            break;
        }
    }

    PairCertificate pc;
    if (chosen) {
        pc = verify_corollary(f, *chosen, field, options.ci);
        pc.c_matches_witness = pc.c && *pc.c == witness;
    } else {
        pc.form = f;
        pc.form_smooth = ring.smoothness();
        pc.quadric.reset();
        pc.item_i_detail = "no Q with smooth Y within " + std::to_string(options.max_perturbations) + " perturbations";
        pc.item_ii_detail = pc.item_iii_detail = "not run";
    }
    pc.witness = witness;
    pc.quadric_prime = q_prime;
    pc.perturbations_used = used;
    pc.log = std::move(log);

    const unsigned k = static_cast<unsigned>(ring.socle_degree()) - m;
    RandomStream probe(derive_seed(derive_seed(options.seed, 1), 0));
    Polynomial shifted =
        (q_prime + random_combination(probe, ideal_basis, field, options.coeff_bound, f.num_vars(), ring.family()))
            .reduced(field);
    pc.colon_invariant = colon_graded(ring, q_prime, k) == colon_graded(ring, shifted, k);
    return pc;
}

Theorem14Report theorem14_check(const Polynomial& f_in, const FieldConfig& field, const PipelineOptions& options) {
    Theorem14Report report;
    report.form = f_in.reduced(field);
    JacobianRing ring(report.form, field);
    ring.require_smooth("theorem14_check");
    const unsigned d = ring.form_degree();
    if (d < 2) throw PreconditionError("theorem14_check needs deg F >= 2");
    report.target_rank = ring.milnor_dim(1);
    const std::size_t nv = ring.num_vars();

    const std::uint64_t ell_seed = derive_seed(options.seed, 0);
    for (unsigned i = 0; i < options.trials && !report.ell; ++i) {
        RandomStream rng(derive_seed(ell_seed, i));
        Polynomial ell = random_form(rng, field, nv, 1, options.coeff_bound);
        if (ell.is_zero()) continue;
        RankAttempt a{ell, rank(mult_map(ring, power(ell, d - 1, field), 1), field), std::nullopt};
        if (a.rank == report.target_rank) report.ell = ell;
        report.ell_attempts.push_back(std::move(a));
    }

    const std::uint64_t q_seed = derive_seed(options.seed, 1);
    for (unsigned i = 0; i < options.trials && !report.quadric; ++i) {
        RandomStream rng(derive_seed(q_seed, i));
        Polynomial q = random_form(rng, field, nv, d - 1, options.coeff_bound);
        if (q.is_zero()) continue;
        RankAttempt a{q, rank(mult_map(ring, q, 1), field), std::nullopt};
        if (a.rank == report.target_rank) {
            CiOptions ci = options.ci;
            ci.allow_general = ci.allow_general || nv != 5 || d != 3;
            SmoothnessCertificate y = ci_smooth(report.form, q, field, ci);
            a.y_verdict = y.verdict;
            if (y.verdict == Verdict::Smooth) {
                report.quadric = q;
                report.y_smooth = y;
                report.colon1_dim = colon_graded(ring, q, 1).dim();
            }
        }
        report.q_attempts.push_back(std::move(a));
    }
    return report;
}

DeformationReport deformation_experiment(const FieldConfig& field, unsigned steps, const PipelineOptions& options) {
    if (steps < 1) throw PreconditionError("steps must be at least 1");
    if (field.is_prime_field() && field.modulus() <= steps) throw PreconditionError("steps must be below the characteristic");
    DeformationReport report;
    report.base = special_q(4, 3);
    const std::size_t nv = report.base.num_vars();
    constexpr unsigned kMaxDraws = 50;
    for (unsigned i = 0; i < kMaxDraws; ++i) {
        RandomStream rng(derive_seed(options.seed, i));
        Polynomial r = random_form(rng, field, nv, 3, options.coeff_bound);
        report.direction_draws = i + 1;
        if (!r.is_zero() && is_smooth_hypersurface(r, field).verdict == Verdict::Smooth) {
            report.direction = r;
            break;
        }
    }
    if (report.direction.is_zero()) throw PreconditionError("no smooth direction cubic found");

    const auto fermat_coords = fermat(nv, 3, Family::Dual).coordinates(3);
    const std::uint64_t membership_seed = derive_seed(options.seed, 1000);
    for (unsigned s = 0; s <= steps; ++s) {
        DeformationRow row;
        row.t = s == 0 ? Rational(0) : Rational(1, s);
        row.form = (report.base + report.direction.scaled(row.t)).reduced(field);
        JacobianRing ring(row.form, field);
        row.smooth = ring.smoothness().verdict;
        GradedSubspace perp = perp_graded(ring.piece(3));
        row.perp_dim = perp.dim();
        row.fermat_residual = 0;
        for (const auto& c : perp.reduce(fermat_coords)) row.fermat_residual = std::max(row.fermat_residual, Rational(abs(c)));
        if (row.smooth == Verdict::Smooth) {
            PipelineOptions sub = options;
            sub.seed = derive_seed(membership_seed, s);
            UMembership u = membership_u(row.form, field, sub);
            row.in_u = u.in_u;
            row.witness = u.witness;
            if (u.in_u && (!report.smallest_t_in_u || row.t < *report.smallest_t_in_u)) report.smallest_t_in_u = row.t;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool ExampleReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const GoldenCheck& c) { return c.pass; });
}

ExampleReport reproduce_example(const FieldConfig& field) {
    ExampleReport report;
    auto add = [&](std::string name, const std::string& expected, const std::string& actual) {
        report.checks.push_back({std::move(name), expected, actual, expected == actual});
    };
    auto num = [](std::size_t v) { return std::to_string(v); };
    auto flag = [](bool b) { return std::string(b ? "true" : "false"); };

    const Polynomial q = special_q(4, 3).reduced(field);
    const std::size_t nv = q.num_vars();
    JacobianRing ring(q, field);

    add("Q singular", "Singular", to_string(ring.smoothness().verdict));
    add("dim M(Q)_3", "10", num(ring.milnor_dim(3)));
    GradedSubspace perp = perp_graded(ring.piece(3));
    add("dim (J_{Q,3})^perp", "10", num(perp.dim()));

    const Polynomial fermat_dual = fermat(nv, 3, Family::Dual);
    bool pairs_zero = true;
    for (const auto& p : ring.partials())
        for (std::size_t i = 0; i < nv; ++i)
            if (sgn(polar_pair(multiply(Polynomial::variable(nv, i), p, field), fermat_dual, field)) != 0)
                pairs_zero = false;
    add("Fermat cubic pairs to zero with every x_i dQ/dx_j", "true", flag(pairs_zero));
    add("Fermat cubic in (J_{Q,3})^perp", "true", flag(perp.contains(fermat_dual)));

    std::vector<Polynomial> w;
    for (const auto& m : MonomialBasis::get(nv, 4).monomials()) {
        if (std::count(m.exponents().begin(), m.exponents().end(), 4u) == 1) continue;
        Polynomial mono(nv);
        mono.add_term(m, 1);
        w.push_back(mono);
    }
    GradedSubspace w_space = GradedSubspace::span_of(field, nv, 4, Family::Primal, w);
    add("dim J_{Q,4}", "65", num(ring.piece(4).dim()));
    add("J_{Q,4} = span of quartic monomials other than x_i^4", "true", flag(ring.piece(4) == w_space));

    const PointSet coords = coordinate_points(nv);
    add("coordinate points singular", "5", num(singular_points(q, coords, field).size()));
    SingularSearch search = brute_singular_search(special_q(4, 3), 7);
    add("points of P^4(F_7) scanned", "2801", num(search.scanned));
    add("singular points over F_7 are the coordinate points", "true",
        flag(search.points.points == make_point_set(nv, coords.points, FieldConfig::prime(7)).points));
    for (std::size_t i = 0; i < nv; ++i) add("node at e_" + num(i), "true", flag(is_node(q, coords.points[i], field)));

    add("defect_0", "4", num(defect(coords, 0, field).defect));
    for (unsigned k = 1; k <= 4; ++k) add("defect_" + std::to_string(k), "0", num(defect(coords, k, field).defect));
    for (unsigned k = 0; k <= 3; ++k) {
        LemmaCheck c = check_lemma_defect(q, coords, k, field);
        add("dim M(Q)_{5-" + std::to_string(k) + "} = dim M(F_s)_" + std::to_string(k) + " + defect_" +
                std::to_string(k),
            num(c.rhs), num(c.lhs));
    }
    return report;
}

}  // namespace gradus
